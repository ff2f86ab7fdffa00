"""Command-line interface.

Exit codes: 0 success, 2 unreadable or malformed input, 3 violated
precondition (not spanning, incomplete moments, degenerate input, not weakly
non-degenerate), 4 singular reconstruction (output is still written), 5
internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import chambers, genfunc, inverse, jsonio, oracle, verify
from .errors import (
    DegenerateDirectionError,
    DegenerateSimplexError,
    DimensionError,
    IncompleteMomentsError,
    NotSpanningError,
    NotStronglyNonDegenerateError,
    NotWeaklyNonDegenerateError,
    PolymomError,
)
from .geometry import Degeneracy, classify
from .linalg import det
from .verify import SUITES, random_simplex_vertices, random_strong_set

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_SINGULAR = 4
EXIT_INTERNAL = 5

_PRECONDITION_ERRORS = (
    DegenerateDirectionError,
    DegenerateSimplexError,
    DimensionError,
    IncompleteMomentsError,
    NotSpanningError,
    NotStronglyNonDegenerateError,
    NotWeaklyNonDegenerateError,
)


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}")


def _write_json(path, data):
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_moments(args):
    measure = jsonio.measure_from_json(_load_json(args.measure))
    table = oracle.measure_moments(measure, args.order)
    _write_json(args.out, jsonio.moment_table_to_json(table))
    return EXIT_OK


def cmd_genfunc(args):
    measure = jsonio.measure_from_json(_load_json(args.measure))
    f = genfunc.measure_genfunc(measure)
    _write_json(args.out, jsonio.ratfun_to_json(f))
    if args.out not in (None, "-"):
        print(f"F(u) = {f}")
    return EXIT_OK


def _parse_columns(text, vs):
    """Translate the 1-based column numbers of the worked examples."""
    numbers = [int(x) for x in text.split(",") if x.strip()]
    all_columns = inverse.extended_columns(vs)
    for number in numbers:
        if not 1 <= number <= len(all_columns):
            raise CliError(EXIT_PRECONDITION, f"column number {number} out of range")
    return [all_columns[number - 1] for number in numbers]


def cmd_invert(args):
    vs = jsonio.vertex_set_from_json(_load_json(args.vertices))
    table = jsonio.moment_table_from_json(_load_json(args.moments))
    kind = classify(vs).kind
    pivot = args.pivot
    if kind is Degeneracy.STRONG and args.columns is None:
        rec = inverse.solve_strong(table, vs, pivot)
    else:
        columns = _parse_columns(args.columns, vs) if args.columns else None
        rec = inverse.solve_weak(table, vs, pivot, columns)
    _write_json(args.out, jsonio.reconstruction_to_json(rec))
    if args.svg:
        if vs.dim != 2:
            raise CliError(EXIT_PRECONDITION, "--svg requires a 2-d vertex set")
        if rec.is_singular:
            raise CliError(
                EXIT_SINGULAR,
                f"singular reconstruction (degenerate weight on {rec.singular_simplices}); no SVG",
            )
        cm = chambers.chamber_densities(
            chambers.build_chambers(vs), chambers.densities_from_reconstruction(rec)
        )
        chambers.write_svg(cm, args.svg)
    if rec.is_singular:
        print(
            f"singular: nonzero weight on degenerate simplices {rec.singular_simplices}",
            file=sys.stderr,
        )
        return EXIT_SINGULAR
    return EXIT_OK


def cmd_chambers(args):
    vs = jsonio.vertex_set_from_json(_load_json(args.vertices))
    measure = jsonio.measure_from_json(_load_json(args.measure))
    if measure.vertex_set != vs:
        raise CliError(EXIT_PRECONDITION, "measure vertex set differs from the vertices file")
    from .geometry import density

    cm = chambers.chamber_densities(chambers.build_chambers(vs), density(measure))
    chambers.write_svg(cm, args.svg)
    summary = [
        {"point": [str(c) for c in ch.point], "density": str(ch.density)} for ch in cm.chambers
    ]
    _write_json(args.out, {"chambers": summary})
    return EXIT_OK


def cmd_verify(args):
    report = verify.run_suite(args.suite, args.seed)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_INTERNAL


def cmd_bench(args):
    import random

    rng = random.Random(args.seed)
    rows = []
    t0 = time.perf_counter()
    for _ in range(20):
        vs = random_strong_set(rng, 2, 6)
        m = inverse.product_matrix(inverse.strong_basis(vs))
        det(m)
    rows.append(("det 10x10 product matrix x20", time.perf_counter() - t0))
    t0 = time.perf_counter()
    for _ in range(50):
        vs = random_simplex_vertices(rng, 3)
        f = genfunc.simplex_genfunc((0, 1, 2, 3), vs, 1)
        genfunc.taylor(f, 5)
    rows.append(("taylor order 5 of 3-d simplex x50", time.perf_counter() - t0))
    for label, seconds in rows:
        print(f"{label}: {seconds:.3f}s")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="polymom",
        description="Exact moments, generating functions and inverse moment problem on polytopes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", help="moment table of a measure file")
    p.add_argument("measure")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("genfunc", help="rational generating function of a measure file")
    p.add_argument("measure")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_genfunc)

    p = sub.add_parser("invert", help="recover a measure from vertices and moments")
    p.add_argument("vertices")
    p.add_argument("moments")
    p.add_argument("--pivot", type=int, default=None)
    p.add_argument("--columns", default=None, help="1-based extended-matrix column numbers")
    p.add_argument("--svg", default=None, help="write the chamber map here (d = 2)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("chambers", help="chamber map of a 2-d measure")
    p.add_argument("vertices")
    p.add_argument("measure")
    p.add_argument("--svg", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("verify", help="run a seeded property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the core kernels")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except _PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except PolymomError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
