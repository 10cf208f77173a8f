"""Command-line front end: ``elm eval | scan | estimate-c | verify``.

Data goes to stdout (or the ``--output`` file); diagnostics go to stderr.
Exit codes: 0 ok, 1 verified with violations, 2 usage or domain error,
3 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from typing import Callable, Optional

import numpy as np

from . import analysis, elliptic
from .constant import estimate_c
from .elliptic import Modulus
from .errors import DomainError, NoConvergence, NonFinite, ParamError
from .means import DIRECTIONS, verify_theorem

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_NO_CONVERGENCE = 3


def fmt(v: float) -> str:
    """17 significant digits: enough to round-trip any binary64."""
    return f"{v:.17g}"


def _needs(value: Optional[float], flag: str, name: str) -> float:
    if value is None:
        raise ParamError(f"function {name} requires {flag}")
    return value


def _resolve(name: str, c: Optional[float], lam: Optional[float]) -> Callable[[float], float]:
    simple = {
        "K": elliptic.ellint_k,
        "E": elliptic.ellint_e,
        "Kp": lambda r: elliptic.ellint_k(Modulus(r).complement()),
        "Ep": lambda r: elliptic.ellint_e(Modulus(r).complement()),
        "m": elliptic.m_func,
        "f1": analysis.f1,
        "f2": analysis.f2,
        "f4": analysis.f4,
        "g": analysis.g_func,
        "H": analysis.H_func,
    }
    if name in simple:
        return simple[name]
    if name == "f3":
        c = _needs(c, "--c", name)
        return lambda r: analysis.f3(r, c)
    if name == "h":
        lam = _needs(lam, "--lambda", name)
        return lambda r: analysis.h_func(r, lam)
    raise ParamError(f"unknown function {name!r}")


FUNCTIONS = ("K", "E", "Kp", "Ep", "m", "f1", "f2", "f3", "f4", "g", "H", "h")


def cmd_eval(args: argparse.Namespace) -> int:
    f = _resolve(args.function, args.c, args.lam)
    print(fmt(f(args.r)))
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    if not args.start < args.stop:
        raise ParamError(f"need from < to, got {args.start} >= {args.stop}")
    if args.points < 2:
        raise ParamError(f"points must be >= 2, got {args.points}")
    f = _resolve(args.function, args.c, args.lam)
    grid = np.linspace(args.start, args.stop, args.points).tolist()
    rows = [(r, f(r)) for r in grid]

    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["r", "value"])
        writer.writerows((fmt(r), fmt(v)) for r, v in rows)
    finally:
        if args.output:
            out.close()
    print(f"wrote {len(rows)} rows of {args.function}", file=sys.stderr)
    return EXIT_OK


def cmd_estimate_c(args: argparse.Namespace) -> int:
    est = estimate_c(args.points, args.tol)
    print(f"C={fmt(est.C)}")
    print(f"r0={fmt(est.r0)}")
    print(f"refinement_delta={fmt(est.refinement_delta)}")
    print(f"grid_points={est.grid_points}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    rep = verify_theorem(args.lam, args.direction, args.samples, args.seed)
    print(f"lambda={fmt(rep.order)}")
    print(f"direction={rep.direction}")
    print(f"samples={rep.samples}")
    print(f"seed={rep.seed}")
    print(f"violations={rep.violations}")
    print(f"worst_margin={fmt(rep.worst_margin)}")
    if rep.witness is not None:
        print(f"witness={fmt(rep.witness[0])},{fmt(rep.witness[1])}")
    return EXIT_OK if rep.violations == 0 else EXIT_VIOLATIONS


def _default_seed() -> int:
    raw = os.environ.get("ELM_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"elm: ELM_SEED must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="elm", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_params(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--c", type=float, default=None, help="exponent c for f3")
        sp.add_argument("--lambda", dest="lam", type=float, default=None, help="order for h")

    sp = sub.add_parser("eval", help="evaluate one function at one modulus")
    sp.add_argument("function", choices=FUNCTIONS)
    sp.add_argument("r", type=float)
    add_params(sp)
    sp.set_defaults(handler=cmd_eval)

    sp = sub.add_parser("scan", help="tabulate a function on a uniform grid as CSV")
    sp.add_argument("function", choices=FUNCTIONS)
    sp.add_argument("start", metavar="from", type=float)
    sp.add_argument("stop", metavar="to", type=float)
    sp.add_argument("points", type=int)
    sp.add_argument("-o", "--output", default=None, help="CSV path (default: stdout)")
    add_params(sp)
    sp.set_defaults(handler=cmd_scan)

    sp = sub.add_parser("estimate-c", help="estimate C = max H and its argmax r0")
    sp.add_argument("--points", type=int, default=1001)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.set_defaults(handler=cmd_estimate_c)

    sp = sub.add_parser("verify", help="sample the power-mean inequality for one order")
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--direction", choices=DIRECTIONS, default="forward")
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=None, help="default: $ELM_SEED or 0")
    sp.set_defaults(handler=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None:
        args.seed = _default_seed()
    try:
        return args.handler(args)
    except (DomainError, ParamError, NonFinite, OverflowError) as exc:
        print(f"elm: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"elm: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NoConvergence as exc:
        print(f"elm: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
