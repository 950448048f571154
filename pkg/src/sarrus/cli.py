"""Command-line interface.

Subcommands: det, validate, generate, pattern, render, bench, export-builtin.
Exit codes: 0 success, 1 usage error, 2 computation error, 3 scheme search
found nothing.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .bench import METHODS, bench, reports_to_jsonl
from .builtin import builtin_scheme
from .errors import NotFound, SarrusError
from .generate import SearchConfig, search_scheme
from .io import format_scalar, load_scheme, parse_matrix, save_scheme, scheme_to_json
from .oracle import bareiss_det, cofactor_det, leibniz_det
from .pattern import basic_strip_signs, classify
from .render import RenderSpec, render
from .scheme import Scheme, evaluate, positive_negative_sums, validate


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2; the contract says 1
        raise _UsageError(message)


def _add_scheme_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--scheme", metavar="PATH", help="scheme JSON file")
    g.add_argument("--builtin", type=int, metavar="N", help="built-in scheme for n in 2..5")


def _resolve_scheme(args, n: int | None = None) -> Scheme:
    if args.scheme:
        return load_scheme(args.scheme)
    if args.builtin:
        return builtin_scheme(args.builtin)
    if n is not None:
        return builtin_scheme(n)
    raise _UsageError("need --scheme or --builtin")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sarrus", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("det", parents=[], help="determinant of a matrix file")
    p.add_argument("--matrix", required=True, metavar="PATH")
    p.add_argument("--format", choices=("csv", "json"), help="default: by file suffix")
    p.add_argument("--method", choices=METHODS, default="scheme")
    _add_scheme_source(p)
    p.add_argument("--sums", action="store_true",
                   help="also print the positive and negative sums (scheme method)")

    p = sub.add_parser("validate", help="check a scheme against S_n")
    _add_scheme_source(p)

    p = sub.add_parser("generate", help="search for a scheme covering S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--time-limit", type=float, default=60.0)
    p.add_argument("--max-blocks-per-strip", type=int, default=None)
    p.add_argument("--out", metavar="PATH", help="default: stdout")

    p = sub.add_parser("pattern", help="sign structure class for size n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("render", help="draw a scheme as SVG or text")
    _add_scheme_source(p)
    p.add_argument("--as", dest="output_format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--cell-size", type=int, default=28)
    p.add_argument("--no-signs", action="store_true")
    p.add_argument("--positive-color", default="blue")
    p.add_argument("--negative-color", default="orange")
    p.add_argument("--out", metavar="PATH", help="default: stdout")

    p = sub.add_parser("bench", help="operation counts and wall times")
    p.add_argument("--methods", default=",".join(METHODS),
                   help="comma-separated subset of " + ",".join(METHODS))
    p.add_argument("--sizes", default="4,5", help="comma-separated sizes")
    p.add_argument("--runs", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH", help="JSON-lines output; default: stdout")

    p = sub.add_parser("export-builtin", help="write a built-in scheme as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", metavar="PATH", help="default: stdout")

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_det(args) -> int:
    M = parse_matrix(args.matrix, args.format)
    if args.method == "scheme":
        sch = _resolve_scheme(args, n=M.n)
        value = evaluate(sch, M)
        if args.sums:
            s_plus, s_minus = positive_negative_sums(sch, M)
            print(f"positive sum: {format_scalar(s_plus)}")
            print(f"negative sum: {format_scalar(s_minus)}")
    elif args.method == "leibniz":
        value = leibniz_det(M)
    elif args.method == "cofactor":
        value = cofactor_det(M)
    else:
        value = bareiss_det(M)
    print(format_scalar(value))
    return 0


def _cmd_validate(args) -> int:
    report = validate(_resolve_scheme(args))
    print(report.summary())
    return 0 if report.is_valid else 2


def _cmd_generate(args) -> int:
    cfg = SearchConfig(
        n=args.n,
        max_blocks_per_strip=args.max_blocks_per_strip,
        time_limit=args.time_limit,
        random_seed=args.seed,
    )
    sch = search_scheme(cfg)
    if args.out:
        save_scheme(sch, args.out)
    else:
        print(scheme_to_json(sch))
    return 0


def _cmd_pattern(args) -> int:
    cls = classify(args.n)
    print(f"n = {cls.n}  ({cls.residue_class})")
    print(f"descending signs alternate along starts: {'yes' if cls.shift_alternates else 'no'}")
    print(f"ascending sign flipped vs descending:    {'yes' if cls.ascending_flips else 'no'}")
    print("basic strip signs (start, descending, ascending):")
    for p, d, a in basic_strip_signs(args.n):
        print(f"  {p:>3}  {'+' if d == 1 else '-'}  {'+' if a == 1 else '-'}")
    return 0


def _cmd_render(args) -> int:
    spec = RenderSpec(
        scheme=_resolve_scheme(args),
        cell_size=args.cell_size,
        show_signs=not args.no_signs,
        positive_color=args.positive_color,
        negative_color=args.negative_color,
        output_format=args.output_format,
    )
    _emit(render(spec), args.out)
    return 0


def _cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise _UsageError(f"bad --sizes value {args.sizes!r}")
    reports = bench(methods, sizes, runs=args.runs, seed=args.seed)
    _emit(reports_to_jsonl(reports), args.out)
    return 0


def _cmd_export_builtin(args) -> int:
    sch = builtin_scheme(args.n)
    if args.out:
        save_scheme(sch, args.out)
    else:
        print(scheme_to_json(sch))
    return 0


_COMMANDS = {
    "det": _cmd_det,
    "validate": _cmd_validate,
    "generate": _cmd_generate,
    "pattern": _cmd_pattern,
    "render": _cmd_render,
    "bench": _cmd_bench,
    "export-builtin": _cmd_export_builtin,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            parser.print_help()
            return 1
        return _COMMANDS[args.command](args)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except NotFound as e:
        print(f"not found: {e}", file=sys.stderr)
        return 3
    except (SarrusError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
