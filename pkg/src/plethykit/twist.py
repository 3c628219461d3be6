"""Upgrading SL-isomorphisms to GL-isomorphisms by twisting.

An SL-isomorphic pair (lam, d), (mu, e) becomes GL-isomorphic after
adding l full columns to lam, m full columns to mu, and lifting the
deltas to (d+x, x) and (e+y, y), provided

    (|lam| + l*(d+1)) * (d + 2x) == (|mu| + m*(e+1)) * (e + 2y).

For fixed (l, m) this is a linear Diophantine equation in (x, y); a
nonnegative solution exists iff gcd(A, B) divides the right-hand side,
with A = |mu| + m*(e+1) and B = |lam| + l*(d+1).  The 2-adic valuation
predicate ``nu2_obstruction`` flags the pairs for which no (l, m)
should work at all.
"""

from math import comb, gcd
from typing import NamedTuple, Optional

from .errors import NotSLIsomorphic, ZeroWeight
from .partition import add, weight
from .plethysm import PlethysmInstance, SLInstance, gl_isomorphic, sl_isomorphic


class TwistSolution(NamedTuple):
    l: int
    m: int
    x: int
    y: int


def _min_y_solution(a: int, b: int, c: int) -> Optional[tuple[int, int]]:
    """Minimal-y nonnegative (x, y) with a*y - b*x == c, or None.

    a and b must be nonnegative.
    """
    if a == 0 and b == 0:
        return (0, 0) if c == 0 else None
    if a == 0:
        return (-c // b, 0) if c <= 0 and c % b == 0 else None
    if b == 0:
        return (0, c // a) if c >= 0 and c % a == 0 else None
    g = gcd(a, b)
    if c % g:
        return None
    a2, b2, c2 = a // g, b // g, c // g
    y = (c2 * pow(a2, -1, b2)) % b2 if b2 > 1 else 0
    x = (a * y - c) // b
    if x < 0:
        shift = (-x + a2 - 1) // a2
        y += shift * b2
        x += shift * a2
    return x, y


def solve_twist(a: SLInstance, b: SLInstance, bound: int = 50) -> Optional[TwistSolution]:
    """The twist with the smallest (y, x, l, m), searching l, m <= bound.

    Returns None when no (l, m) pair in range admits a nonnegative
    (x, y); raises NotSLIsomorphic when the inputs are not even
    SL-isomorphic (the equation's right-hand side would not be an
    integer).
    """
    if not sl_isomorphic(a, b):
        raise NotSLIsomorphic(f"{a} and {b} have different P polynomials")
    wl, wm = weight(a.lam), weight(b.lam)
    d, e = a.d, b.d
    half_gap = (wl * d - wm * e) // 2
    best = None
    best_key = None
    for l in range(bound + 1):
        big_b = wl + l * (d + 1)
        for m in range(bound + 1):
            big_a = wm + m * (e + 1)
            c = half_gap + l * comb(d + 1, 2) - m * comb(e + 1, 2)
            sol = _min_y_solution(big_a, big_b, c)
            if sol is None:
                continue
            x, y = sol
            key = (y, x, l, m)
            if best_key is None or key < best_key:
                best_key = key
                best = TwistSolution(l, m, x, y)
                if key[:2] == (0, 0):
                    # nothing later in the scan can beat y = x = 0,
                    # since (l, m) only grows from here
                    return best
    return best


def verify_twist(a: SLInstance, b: SLInstance, t: TwistSolution) -> bool:
    """Build the twisted instances and run the full GL check on them."""
    lam = add(a.lam, (t.l,) * (a.d + 1))
    mu = add(b.lam, (t.m,) * (b.d + 1))
    return gl_isomorphic(
        PlethysmInstance(lam, (a.d + t.x, t.x)),
        PlethysmInstance(mu, (b.d + t.y, t.y)),
    )


def nu2(n: int) -> int:
    """The 2-adic valuation of a positive integer.

    Raises ZeroWeight unless n >= 1.
    """
    if n < 1:
        raise ZeroWeight(f"nu2 needs a positive integer, got {n}")
    return (n & -n).bit_length() - 1


def nu2_obstruction(a: SLInstance, b: SLInstance) -> bool:
    """The valuation pattern under which no twist should exist:
    nu2 of the weights differ, and their minimum sits strictly between
    0 and min(nu2(d+1), nu2(e+1)).

    Raises ZeroWeight when either partition is empty.
    """
    wl, wm = weight(a.lam), weight(b.lam)
    if wl < 1 or wm < 1:
        raise ZeroWeight("both partitions must have positive weight")
    va, vb = nu2(wl), nu2(wm)
    return va != vb and 0 < min(va, vb) < min(nu2(a.d + 1), nu2(b.d + 1))
