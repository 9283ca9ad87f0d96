"""Command line interface.

Subcommands:

    enumerate   list or count the valid traces of a process file
    analyze     utilities, rankings and cohort analysis for processes
    export-dot  constraint graph of a process file in Graphviz format
    verify      golden reproduction, oracle campaign and count checks

Exit codes: 0 success, 1 usage or parse error, 2 analysis error (including
verification failures).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import run_analysis
from .dot import export_dot
from .dsl import ParseError, parse_process, parse_stakeholders
from .enumeration import (
    DEFAULT_BRUTEFORCE_CAP,
    EnumerationCapExceeded,
    count_valid,
    enumerate_bruteforce,
    enumerate_pruned,
)
from .model import ModelError
from .report import FORMATS, render_analysis, render_count, render_traces
from .utility import UtilityDomainError
from . import verify

USAGE_ERROR = 1
ANALYSIS_ERROR = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage problems; the CLI contract reserves 2
    # for analysis errors, so route usage failures to exit code 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="declproc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list or count the valid traces of a process")
    p_enum.add_argument("process", type=Path, help="a .dproc file")
    p_enum.add_argument("--format", choices=FORMATS, default="table")
    p_enum.add_argument("--count-only", action="store_true", help="emit just the valid-trace count")
    p_enum.add_argument("--oracle", action="store_true", help="use the brute-force enumerator")
    p_enum.add_argument(
        "--max-bruteforce",
        type=int,
        default=DEFAULT_BRUTEFORCE_CAP,
        metavar="N",
        help="largest alphabet the brute-force enumerator accepts (default %(default)s)",
    )
    p_enum.add_argument("-o", "--output", type=Path, help="write the report here instead of stdout")

    p_an = sub.add_parser("analyze", help="stakeholder utilities and rankings for processes")
    p_an.add_argument("processes", type=Path, nargs="+", metavar="process", help=".dproc files")
    p_an.add_argument(
        "--stakeholders",
        type=Path,
        nargs="+",
        required=True,
        metavar="FILE",
        help="one .dstake file for all processes, or exactly one per process",
    )
    p_an.add_argument("--format", choices=FORMATS, default="table")
    p_an.add_argument(
        "--cohorts",
        action="store_true",
        help="also report H distances for every non-empty stakeholder subset",
    )
    p_an.add_argument(
        "--figures",
        type=Path,
        metavar="DIR",
        help="additionally render PNG charts of the report into DIR",
    )
    p_an.add_argument("-o", "--output", type=Path, help="write the report here instead of stdout")

    p_dot = sub.add_parser("export-dot", help="Graphviz constraint graph of a process")
    p_dot.add_argument("process", type=Path, help="a .dproc file")
    p_dot.add_argument("-o", "--output", type=Path, help="write the graph here instead of stdout")

    p_ver = sub.add_parser("verify", help="run the verification suite and report pass/fail")
    p_ver.add_argument("--seed", type=int, default=42, help="oracle campaign seed (default %(default)s)")
    p_ver.add_argument("--cases", type=int, default=100, help="oracle campaign size (default %(default)s)")
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


class _InputError(Exception):
    pass


def _load_process(path: Path):
    try:
        return parse_process(_read(path))
    except ParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _load_stakeholders(path: Path):
    try:
        return parse_stakeholders(_read(path))
    except ParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _emit(text: str, output: Path | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    try:
        output.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot write {output}: {exc.strerror or exc}") from exc


def _cmd_enumerate(args) -> int:
    process = _load_process(args.process)
    if args.count_only and not args.oracle:
        report = render_count(process.name, count_valid(process), args.format)
    else:
        trace_set = (
            enumerate_bruteforce(process, cap=args.max_bruteforce)
            if args.oracle
            else enumerate_pruned(process)
        )
        if args.count_only:
            report = render_count(process.name, trace_set.count, args.format)
        else:
            report = render_traces(trace_set, args.format)
    _emit(report, args.output)
    return 0


def _cmd_analyze(args) -> int:
    processes = [_load_process(path) for path in args.processes]
    if len(args.stakeholders) == 1:
        stakeholder_files = args.stakeholders * len(processes)
    elif len(args.stakeholders) == len(processes):
        stakeholder_files = args.stakeholders
    else:
        raise _InputError(
            f"expected 1 stakeholder file or {len(processes)} (one per process), "
            f"got {len(args.stakeholders)}"
        )
    pairs = [
        (process, _load_stakeholders(path))
        for process, path in zip(processes, stakeholder_files)
    ]
    try:
        result = run_analysis(pairs, include_cohorts=args.cohorts)
    except UtilityDomainError:
        raise  # analysis error, exit 2
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    _emit(render_analysis(result, args.format), args.output)
    if args.figures is not None:
        from .figures import write_analysis_figures

        for path in write_analysis_figures(result, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_export_dot(args) -> int:
    _emit(export_dot(_load_process(args.process)), args.output)
    return 0


def _cmd_verify(args) -> int:
    reports = verify.run_all(seed=args.seed, cases=args.cases)
    for report in reports:
        sys.stdout.write(report.render())
    total = sum(len(r.checks) for r in reports)
    if all(r.passed for r in reports):
        sys.stdout.write(f"overall: PASS ({total} checks)\n")
        return 0
    failed = sum(1 for r in reports for c in r.checks if not c.passed)
    sys.stdout.write(f"overall: FAIL ({failed} of {total} checks failed)\n")
    return ANALYSIS_ERROR


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "analyze": _cmd_analyze,
    "export-dot": _cmd_export_dot,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (_InputError, ModelError, OSError) as exc:
        print(f"declproc: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (EnumerationCapExceeded, ValueError) as exc:
        print(f"declproc: analysis error: {exc}", file=sys.stderr)
        return ANALYSIS_ERROR


if __name__ == "__main__":
    sys.exit(main())
