"""Command-line front end.

Machine-readable JSON goes to stdout, human diagnostics to stderr.
Exit codes: 0 = isomorphic / found / all checks pass, 1 = not
isomorphic / nothing found / a check failed, 2 = invalid input.

The environment variable PLETHYKIT_THREADS caps internal parallelism;
the current implementation evaluates sequentially, which respects any
cap, but the value is still validated so misconfigurations fail fast.
Identical invocations produce byte-identical stdout regardless of the
cap.
"""

import json
import os
import sys

import click

from .errors import PlethykitError
from .hookcontent import p_poly
from .partition import b_statistic, canonical, partitions_of
from .plethysm import PlethysmInstance, SLInstance, gl_isomorphic, sl_isomorphic
from .oracle import specialize_bialternant, specialize_ssyt
from .qpoly import QPolynomial
from .search import classify_gl, enumerate_classes
from .staircase import (
    corollary_I_family,
    corollary_II_family,
    main_family,
    pairwise_sl_isomorphic,
)
from .twist import solve_twist, verify_twist


def _emit(obj) -> None:
    click.echo(json.dumps(obj, separators=(",", ":")))


def _thread_cap() -> int:
    raw = os.environ.get("PLETHYKIT_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        cap = int(raw)
    except ValueError:
        cap = 0
    if cap < 1:
        raise click.UsageError(
            f"PLETHYKIT_THREADS must be a positive integer, got {raw!r}"
        )
    return cap


def _parse_instance(text: str, mode: str):
    try:
        obj = json.loads(text)
        if mode == "sl":
            return SLInstance(canonical(obj["lambda"]), int(obj["d"]))
        d1, d2 = (int(part) for part in obj["delta"])
        return PlethysmInstance(canonical(obj["lambda"]), (d1, d2))
    except (PlethykitError, ValueError, KeyError, TypeError) as exc:
        raise click.UsageError(f"bad instance {text!r}: {exc}") from exc


@click.group()
def main():
    """Exact SL(2)/GL(2) isomorphism tooling for plethysms."""
    _thread_cap()


@main.command()
@click.argument("instance_a")
@click.argument("instance_b")
@click.option(
    "--mode",
    type=click.Choice(["sl", "gl"]),
    default="sl",
    show_default=True,
    help="sl takes {'lambda':[...],'d':n}; gl takes {'lambda':[...],'delta':[d1,d2]}.",
)
def verify(instance_a, instance_b, mode):
    """Decide whether two instances are isomorphic."""
    a = _parse_instance(instance_a, mode)
    b = _parse_instance(instance_b, mode)
    isomorphic = sl_isomorphic(a, b) if mode == "sl" else gl_isomorphic(a, b)
    _emit({"mode": mode, "isomorphic": isomorphic})
    click.echo(f"{mode}-isomorphic: {'yes' if isomorphic else 'no'}", err=True)
    sys.exit(0 if isomorphic else 1)


@main.command()
@click.argument("kind", type=click.Choice(["main", "cor1", "cor2"]))
@click.option("--x", "xs", multiple=True, type=int, help="x entries (main only; repeatable).")
@click.option("--y", "ys", multiple=True, type=int, help="y entries (main only; repeatable).")
@click.option("--s", "s", type=int, default=None, help="family depth (cor1/cor2 only).")
@click.option("--u", required=True, type=int)
@click.option("--v", required=True, type=int)
@click.option("--z", required=True, type=int)
def family(kind, xs, ys, s, u, v, z):
    """Generate an isomorphism family and verify it pairwise."""
    try:
        if kind == "main":
            if s is not None:
                raise ValueError("--s only applies to cor1/cor2")
            instances = main_family(xs, ys, u, v, z)
        else:
            if xs or ys:
                raise ValueError("--x/--y only apply to the main family")
            if s is None:
                raise ValueError(f"{kind} needs --s")
            build = corollary_I_family if kind == "cor1" else corollary_II_family
            instances = build(s, u, v, z)
        verified = pairwise_sl_isomorphic(instances)
    except (PlethykitError, ValueError) as exc:
        raise click.UsageError(str(exc)) from exc
    _emit({"instances": [inst.to_json() for inst in instances], "verified": verified})
    click.echo(
        f"{len(instances)} instances, pairwise SL check "
        f"{'passed' if verified else 'FAILED'}",
        err=True,
    )
    sys.exit(0 if verified else 1)


@main.command()
@click.argument("instance_a")
@click.argument("instance_b")
@click.option("--bound", type=int, default=50, show_default=True, help="l, m search bound.")
def twist(instance_a, instance_b, bound):
    """Find column/delta twists making an SL pair GL-isomorphic."""
    a = _parse_instance(instance_a, "sl")
    b = _parse_instance(instance_b, "sl")
    try:
        solution = solve_twist(a, b, bound)
    except PlethykitError as exc:
        raise click.UsageError(str(exc)) from exc
    if solution is None:
        _emit({"found": False, "l": None, "m": None, "x": None, "y": None, "verified": False})
        click.echo(f"no twist with l, m <= {bound}", err=True)
        sys.exit(1)
    verified = verify_twist(a, b, solution)
    _emit(
        {
            "found": True,
            "l": solution.l,
            "m": solution.m,
            "x": solution.x,
            "y": solution.y,
            "verified": verified,
        }
    )
    click.echo(
        f"twist l={solution.l} m={solution.m} x={solution.x} y={solution.y}, "
        f"verification {'passed' if verified else 'FAILED'}",
        err=True,
    )
    sys.exit(0)


@main.command()
@click.option("--max-weight", required=True, type=int)
@click.option("--max-d", required=True, type=int)
@click.option("--bound", type=int, default=50, show_default=True, help="twist search bound.")
def search(max_weight, max_d, bound):
    """Enumerate SL-equivalence classes, one JSON line per class."""
    try:
        classes = enumerate_classes(max_weight, max_d)
    except PlethykitError as exc:
        raise click.UsageError(str(exc)) from exc
    for cls in classes:
        gl = classify_gl(cls, bound)
        _emit(
            {
                "P": cls.key.to_json(),
                "members": [inst.to_json() for inst in cls.members],
                "gl": {label: [list(pair) for pair in pairs] for label, pairs in gl.items()},
            }
        )
    click.echo(f"{len(classes)} classes", err=True)
    sys.exit(0)


@main.command("oracle-check")
@click.option("--max-weight", required=True, type=int)
@click.option("--max-d", required=True, type=int)
@click.option("--inject-fault", is_flag=True, hidden=True)
def oracle_check(max_weight, max_d, inject_fault):
    """Check bialternant, tableau, and hook-content routes against
    each other on every instance within the bounds."""
    checked = 0
    for n in range(1, max_weight + 1):
        for lam in partitions_of(n, n):
            for d in range(len(lam) - 1, max_d + 1):
                expected = p_poly(lam, d).shifted(b_statistic(lam))
                if inject_fault:
                    expected = expected + QPolynomial([0, 1])
                bialternant = specialize_bialternant(lam, d)
                tableau = specialize_ssyt(lam, d)
                if not (bialternant == tableau == expected):
                    _emit({"agree": False, "lambda": list(lam), "d": d})
                    click.echo(f"disagreement at lambda={list(lam)} d={d}", err=True)
                    sys.exit(1)
                checked += 1
    _emit({"agree": True, "instances": checked})
    click.echo(f"{checked} instances agree", err=True)
    sys.exit(0)


if __name__ == "__main__":
    main()
