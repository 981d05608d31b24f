"""Command-line front end.

Subcommands: shape, orbit, limit, address, equiv, verify, sweep, render.
JSON and CSV go to stdout with fixed 17-significant-digit formatting, so
identical invocations produce byte-identical output.  Exit codes: 0 on
success, 1 on a domain error, 2 when an asserting verify suite fails,
64 for usage errors.
"""

import argparse
import math
import sys

from . import verify
from ._fmt import csv_line, dumps
from .render import RenderSpec, render_svg
from .shape import EdgeLengths, shape_from_angles, shape_from_edges
from .subdivision import limit_shape_info, orbit
from .symbolic import SymbolSequence, address_approx, address_exact, \
    equivalent, match_prop31

USAGE_EXIT = 64


class UsageError(Exception):
    def __init__(self, message, usage):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}", self.format_usage())


def _triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number in {text!r}")


def build_parser() -> _Parser:
    p = _Parser(prog="trisub", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("shape", help="shape record from edges or angles")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--edges", type=_triple, metavar="a,b,c")
    g.add_argument("--angles", type=_triple, metavar="A,B,C")

    sp = sub.add_parser("orbit", help="orbit trace CSV under a finite word")
    sp.add_argument("--edges", type=_triple, required=True, metavar="a,b,c")
    sp.add_argument("--word", required=True, metavar="LETTERS")

    sp = sub.add_parser("limit", help="Euclidean limit along a sequence")
    sp.add_argument("--edges", type=_triple, required=True, metavar="a,b,c")
    sp.add_argument("--seq", required=True, metavar="PREFIX|CYCLE")
    sp.add_argument("--tol", type=float, default=1e-13)

    sp = sub.add_parser("address", help="barycentric address of a sequence")
    sp.add_argument("--seq", required=True, metavar="PREFIX|CYCLE")
    sp.add_argument("--exact", action="store_true")
    sp.add_argument("--depth", type=int, default=40)

    sp = sub.add_parser("equiv", help="do two sequences address the same point")
    sp.add_argument("--s", required=True, metavar="SEQ")
    sp.add_argument("--t", required=True, metavar="SEQ")
    sp.add_argument("--horizon", type=int, default=64)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", required=True,
                    choices=list(verify.SUITE_NAMES) + ["all"])
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--samples", type=int, default=None)

    sp = sub.add_parser("sweep", help="limit shapes over a grid of start shapes")
    sp.add_argument("--seq", required=True, metavar="PREFIX|CYCLE")
    sp.add_argument("--grid", type=int, required=True)

    sp = sub.add_parser("render", help="SVG of nested subdivision cells")
    sp.add_argument("--edges", type=_triple, required=True, metavar="a,b,c")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--depth", type=int)
    g.add_argument("--word")
    sp.add_argument("--model", choices=["klein", "poincare"], default="klein")
    sp.add_argument("-o", "--out", required=True, metavar="FILE.svg")
    sp.add_argument("--size", type=int, default=800)
    sp.add_argument("--arc-samples", type=int, default=32)

    return p


def _cmd_shape(args) -> int:
    if args.edges is not None:
        rec = shape_from_edges(*args.edges)
    else:
        rec = shape_from_angles(*args.angles)
    sys.stdout.write(dumps(rec.to_json_dict()) + "\n")
    return 0


def _cmd_orbit(args) -> int:
    rec = shape_from_edges(*args.edges)
    trace = orbit(args.word, rec)
    sys.stdout.write(trace.to_csv())
    return 0


def _cmd_limit(args) -> int:
    rec = shape_from_edges(*args.edges)
    seq = SymbolSequence.parse(args.seq)
    res = limit_shape_info(seq, rec, tol=args.tol)
    out = {"angles": list(res.angles.as_tuple()),
           "iterations": res.iterations,
           "residual": res.residual}
    sys.stdout.write(dumps(out) + "\n")
    return 0


def _cmd_address(args) -> int:
    seq = SymbolSequence.parse(args.seq)
    if args.exact:
        bary = address_exact(seq)
        out = {"exact": True, "bary": list(bary.fraction_strings())}
    else:
        point, bound = address_approx(seq, args.depth)
        out = {"exact": False, "depth": args.depth, "bary": list(point),
               "error_bound": bound}
    sys.stdout.write(dumps(out) + "\n")
    return 0


def _cmd_equiv(args) -> int:
    s = SymbolSequence.parse(args.s)
    t = SymbolSequence.parse(args.t)
    witness = match_prop31(s, t, horizon=args.horizon)
    out = {"equivalent": equivalent(s, t),
           "prop31_form": witness.to_json_dict() if witness else None}
    sys.stdout.write(dumps(out) + "\n")
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        reports = verify.run_all(seed=args.seed, samples=args.samples)
        ok = all(r.passed for r in reports)
        out = {"pass": ok, "suites": [r.to_json_dict() for r in reports]}
        sys.stdout.write(dumps(out) + "\n")
        return 0 if ok else 2
    report = verify.run_suite(args.suite, seed=args.seed, samples=args.samples)
    sys.stdout.write(dumps(report.to_json_dict()) + "\n")
    return 0 if report.passed else 2


def _cmd_sweep(args) -> int:
    seq = SymbolSequence.parse(args.seq)
    n = args.grid
    if n < 1:
        raise ValueError("grid must be at least 1")
    lines = [csv_line(("A0", "B0", "C0", "Alim", "Blim", "Clim"))]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                defect = math.pi * k / (n + 1)
                total = math.pi - defect
                A = total * i / (n + 1)
                B = (total - A) * j / (n + 1)
                C = total - A - B
                rec = shape_from_angles(A, B, C)
                lim = limit_shape_info(seq, rec).angles
                lines.append(csv_line((A, B, C, lim.A, lim.B, lim.C)))
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_render(args) -> int:
    spec = RenderSpec(model=args.model, depth=args.depth, word=args.word,
                      size=args.size, samples_per_edge=args.arc_samples)
    svg = render_svg(spec, EdgeLengths(*args.edges))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


_HANDLERS = {
    "shape": _cmd_shape,
    "orbit": _cmd_orbit,
    "limit": _cmd_limit,
    "address": _cmd_address,
    "equiv": _cmd_equiv,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(exc.usage)
        sys.stderr.write(str(exc) + "\n")
        return USAGE_EXIT
    except SystemExit as exc:  # --help paths
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
