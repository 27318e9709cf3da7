"""Command line entry point.

Exit codes: 0 success, 1 validation error (bad instance/solution, infeasible
check), 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from .formats import (
    DEFAULT_PRECISION,
    ParseError,
    check_solution,
    parse_instance,
    parse_solution,
    write_instance,
    write_solution,
)
from .generate import generate
from .model import InstanceError, Solution
from .oracle import SizeLimitError, brute_force, fpt_2k
from .reduce import UnsupportedBudgetError, solve
from .svg import render_svg

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class _IOFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror}") from exc


def _load(args):
    instance = parse_instance(_read(args.file), args.precision)
    if getattr(args, "c", None) is not None:
        instance = instance.with_budget(args.c)
    return instance


def cmd_solve(args) -> int:
    instance = _load(args)
    solution = solve(instance)
    _write(args.output, write_solution(solution, instance))
    if args.svg:
        _write(args.svg, render_svg(instance, solution))
    return EXIT_OK


def cmd_oracle(args) -> int:
    instance = _load(args)
    method = brute_force if args.method == "brute" else fpt_2k
    solution = method(instance, cap=args.cap)
    _write(args.output, write_solution(solution, instance))
    return EXIT_OK


def cmd_check(args) -> int:
    instance = _load(args)
    record = parse_solution(_read(args.solution), args.precision)
    problems = check_solution(record, instance)
    for p in problems:
        print(p, file=sys.stderr)
    if problems:
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def cmd_gen(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        instance = generate(args.na, args.nb, args.m, args.k, c=args.c,
                            weight_range=(args.wmin, args.wmax), seed=args.seed,
                            precision=args.precision)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    _write(args.output, write_instance(instance))
    return EXIT_OK


def cmd_render(args) -> int:
    instance = _load(args)
    solution = None
    if args.solution:
        record = parse_solution(_read(args.solution), args.precision)
        problems = check_solution(record, instance)
        if problems:
            for p in problems:
                print(p, file=sys.stderr)
            return EXIT_INVALID
        solution = Solution.from_edges(instance, record.matching)
    _write(args.output, render_svg(instance, solution))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cpematch",
                                     description="Max-weight c-CPE matchings on 2-layered graphs")
    parser.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help="decimal digits of edge weights (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file")
    p.add_argument("--c", type=int, help="override the crossing budget in the file")
    p.add_argument("--svg", help="also write a drawing of the solution")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="solve with a reference solver")
    p.add_argument("file")
    p.add_argument("--method", choices=("brute", "fpt2k"), required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--cap", type=int, default=20)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="verify a solution file against an instance")
    p.add_argument("file")
    p.add_argument("solution")
    p.add_argument("--c", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--na", type=int, required=True)
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--wmin", default="1")
    p.add_argument("--wmax", default="10")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", help="draw an instance as SVG")
    p.add_argument("file")
    p.add_argument("--solution")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ParseError, InstanceError) as exc:
        for line in exc.errors:
            print(f"error: {line}", file=sys.stderr)
        return EXIT_INVALID
    except (UnsupportedBudgetError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
