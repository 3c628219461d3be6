"""Bounded enumeration of SL-equivalence classes of plethysm instances.

Instances (lam, d) with 1 <= |lam| <= max_weight and length(lam) <= d
<= max_d are grouped by the exact coefficient vector of their P
polynomial, which is a complete SL-isomorphism invariant.  Classes with
at least two members are reported, and each member pair is classified
by how (or whether) the SL-isomorphism upgrades to a GL one.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceeded, ConsistencyError
from .hookcontent import p_poly
from .partition import partitions_of, weight
from .plethysm import SLInstance
from .qpoly import QPolynomial
from .twist import nu2_obstruction, solve_twist

DEFAULT_INSTANCE_CAP = 1_000_000


@dataclass(frozen=True)
class EquivalenceClass:
    """All enumerated instances sharing one P polynomial.

    Members are ordered by d, then lexicographically by partition.
    """

    key: QPolynomial
    members: tuple[SLInstance, ...]


def enumerate_classes(
    max_weight: int, max_d: int, cap: int = DEFAULT_INSTANCE_CAP
) -> list[EquivalenceClass]:
    """Group all normalized instances within the bounds by P polynomial.

    Only classes with two or more members are returned, sorted by key
    degree and then lexicographically by key coefficients.

    Raises BudgetExceeded when the instance count passes ``cap``.
    """
    count = 0
    groups: dict[tuple[int, ...], list[SLInstance]] = {}
    for d in range(1, max_d + 1):
        for n in range(1, max_weight + 1):
            for lam in partitions_of(n, d):
                count += 1
                if count > cap:
                    raise BudgetExceeded(f"more than {cap} instances in bounds")
                inst = SLInstance(lam, d)
                key = p_poly(lam, d).coefficients
                groups.setdefault(key, []).append(inst)
    classes = [
        EquivalenceClass(QPolynomial(key), tuple(sorted(members, key=lambda i: (i.d, i.lam))))
        for key, members in groups.items()
        if len(members) >= 2
    ]
    classes.sort(key=lambda c: (c.key.degree, c.key.coefficients))
    return classes


def classify_gl(c: EquivalenceClass, bound: int = 50) -> dict[str, list[tuple[int, int]]]:
    """Label every member pair (i, j) of the class.

    direct:     equal |lam|*d, so the minimal lifts are already GL.
    twistable:  solve_twist finds a verified upgrade within ``bound``.
    obstructed: the nu2 valuation predicate rules a twist out.
    unresolved: nothing found and nothing ruling it out.

    A pair that is both obstructed and twistable would contradict the
    valuation predicate and raises ConsistencyError.
    """
    out: dict[str, list[tuple[int, int]]] = {
        "direct": [],
        "twistable": [],
        "obstructed": [],
        "unresolved": [],
    }
    for i, j in combinations(range(len(c.members)), 2):
        a, b = c.members[i], c.members[j]
        if weight(a.lam) * a.d == weight(b.lam) * b.d:
            out["direct"].append((i, j))
            continue
        solution = solve_twist(a, b, bound)
        obstructed = nu2_obstruction(a, b)
        if solution is not None:
            if obstructed:
                raise ConsistencyError(
                    f"twist {solution} found for the nu2-obstructed pair {a}, {b}"
                )
            out["twistable"].append((i, j))
        elif obstructed:
            out["obstructed"].append((i, j))
        else:
            out["unresolved"].append((i, j))
    return out
