"""Command-line front end.

Subcommands: ``compute`` runs one job, ``compare`` is compute with the
comparison section forced on, ``selftest`` runs the reduced property
suites.  Exit codes: 0 success, 2 parse error, 3 invalid descriptor,
4 internal invariant violation, 1 selftest failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .errors import InternalCheckError, InvalidDescriptorError, ParseError
from .report import parse_input, run


def _add_job_options(sub):
    sub.add_argument("job", nargs="?", default="-",
                     help="job file, or - for standard input (default)")
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="report format (default text)")
    sub.add_argument("--seed", type=int, default=0,
                     help="factorization seed (default 0)")
    sub.add_argument("--strict", action="store_true",
                     help="reject trivial components and non-Kummer m at parse time")
    sub.add_argument("--infinite", action="store_true",
                     help="include the ramification index over the infinite place")
    sub.add_argument("--output", default=None,
                     help="write the report to a file instead of standard output")
    sub.add_argument("--parallel", action="store_true",
                     help="evaluate the two genus fields on worker threads")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="genusfields",
        description="Extended genus fields of Kummer extensions of F_q(T), "
                    "computed exactly.")
    commands = parser.add_subparsers(dest="command", required=True)
    compute = commands.add_parser("compute", help="run one job")
    _add_job_options(compute)
    comp = commands.add_parser("compare",
                               help="run one job with the comparison section on")
    _add_job_options(comp)
    self_p = commands.add_parser("selftest",
                                 help="run the reduced property suites")
    self_p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "selftest":
        from .selftest import run_selftest
        return 0 if run_selftest(seed=args.seed) else 1

    if args.job == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.job, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            print(f"cannot read job file: {exc}", file=sys.stderr)
            return 2

    try:
        config = parse_input(text, strict=args.strict)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    config = replace(config, seed=args.seed, fmt=args.format,
                     strict=args.strict, include_infinite=args.infinite,
                     include_comparison=(args.command == "compare"),
                     parallel=args.parallel)

    try:
        report = run(config)
    except InvalidDescriptorError as exc:
        print(f"invalid descriptor: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4

    rendered = (report.to_json() if config.fmt == "json" else report.to_text())
    rendered += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0
