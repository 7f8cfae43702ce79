"""``koti`` command line.

Exit codes: 0 success, 1 an assertion failed, 2 parse error, 3 capacity
exceeded, 4 usage error. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import string
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import SampleSpace, make_space
from .coevent import SchemeFilter, capacity
from .dsl import DslError, ExecutionError, execute, parse
from .errors import CapacityExceeded, KotiError
from .report import FORMATS, render_census, render_nagarjuna, render_report
from .second_order import lift, nagarjuna_census
from .tetralemma import census

EXIT_OK, EXIT_ASSERT, EXIT_PARSE, EXIT_CAPACITY, EXIT_USAGE = 0, 1, 2, 3, 4
SCHEMES = [f.value for f in SchemeFilter]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    path: Optional[str] = None
    script: Optional[str] = None
    format: str = "table"
    jobs: int = 1
    max_dense_n: Optional[int] = None

    def __post_init__(self):
        if (self.path is None) == (self.script is None):
            raise UsageError("give exactly one of a script path or --script")
        if self.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")

    def read(self) -> str:
        if self.script is not None:
            return self.script
        if self.path == "-":
            return sys.stdin.read()
        try:
            with open(self.path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {self.path}: {e.strerror}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_outcomes(spec: str) -> list[str]:
    """``a,b,c`` or a letter range ``a..f``."""
    spec = spec.strip()
    if ".." in spec:
        lo, _, hi = spec.partition("..")
        if len(lo) != 1 or len(hi) != 1 or not lo.isalpha() or not hi.isalpha() or lo > hi:
            raise UsageError(f"bad outcome range {spec!r}")
        return [chr(c) for c in range(ord(lo), ord(hi) + 1)]
    names = [s.strip() for s in spec.split(",")]
    if not all(names):
        raise UsageError(f"bad outcome list {spec!r}")
    return names


def default_outcomes(n: int) -> list[str]:
    if n < 1:
        raise UsageError("--space needs at least one outcome")
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"o{i}" for i in range(n)]


def _space(args) -> SampleSpace:
    names = parse_outcomes(args.outcomes) if args.outcomes is not None else default_outcomes(args.space)
    try:
        return make_space(names)
    except KotiError as e:
        raise UsageError(str(e)) from None


def _event(space: SampleSpace, spec: str):
    names = [s.strip() for s in spec.split(",") if s.strip()]
    try:
        return space.event(names)
    except KotiError as e:
        raise UsageError(str(e)) from None


def _common(p):
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for census scans")
    p.add_argument("--max-dense-n", type=int, default=None,
                   help="lower the dense enumeration cap (cannot raise it)")


def _space_args(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--space", type=int, metavar="N", help="N outcomes named a, b, c, ...")
    g.add_argument("--outcomes", help="comma list or letter range, e.g. a,b or a..f")
    p.add_argument("--event", default="", help="comma list of outcome names (empty: zero event)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="koti", description="coevent and tetralemma workbench")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="run a script")
    p.add_argument("path", nargs="?", help="script file, or - for stdin")
    p.add_argument("-e", "--script", help="inline script text")
    _common(p)

    p = sub.add_parser("census", help="corner census of one event")
    _space_args(p)
    p.add_argument("--scheme", choices=SCHEMES, default="all")
    _common(p)

    p = sub.add_parser("nagarjuna", help="second-order coevents denying all four corners")
    _space_args(p)
    p.add_argument("--universe", choices=SCHEMES, default="all")
    p.add_argument("--scheme2", choices=SCHEMES, default="multiplicative")
    _common(p)
    return parser


def cmd_eval(cfg: RunConfig) -> int:
    script = parse(cfg.read())
    report = execute(script, jobs=cfg.jobs)
    sys.stdout.write(render_report(report, cfg.format))
    for a in report.assertions:
        if not a.passed:
            print(f"{a.line}:{a.column}: assertion failed: {a.statement}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_ASSERT


def cmd_census(args) -> int:
    space = _space(args)
    rep = census(space, _event(space, args.event), SchemeFilter.parse(args.scheme), jobs=args.jobs)
    sys.stdout.write(render_census(rep, args.format))
    return EXIT_OK


def cmd_nagarjuna(args) -> int:
    space = _space(args)
    a = _event(space, args.event)
    so = lift(space, args.universe)
    count = nagarjuna_census(so, a, args.scheme2, jobs=args.jobs)
    data = {
        "space": list(space.outcomes),
        "event": list(a.members),
        "event_mask": a.mask,
        "universe": args.universe,
        "scheme2": args.scheme2,
        "outcomes": so.as_space.n,
        "count": count,
    }
    sys.stdout.write(render_nagarjuna(data, args.format))
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        with capacity(args.max_dense_n):
            if args.command == "eval":
                cfg = RunConfig(args.path, args.script, args.format, args.jobs, args.max_dense_n)
                return cmd_eval(cfg)
            if args.command == "census":
                return cmd_census(args)
            return cmd_nagarjuna(args)
    except UsageError as e:
        print(f"koti: usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ExecutionError as e:
        print(f"koti: {e}", file=sys.stderr)
        return EXIT_CAPACITY if isinstance(e.cause, CapacityExceeded) else EXIT_USAGE
    except DslError as e:
        print(f"koti: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityExceeded as e:
        print(f"koti: capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except KotiError as e:
        print(f"koti: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
