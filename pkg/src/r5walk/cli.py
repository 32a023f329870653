"""Command-line harness: run, replicate, compare, selftest, env.

Exit codes are stable and disjoint by cause:

  0  success / records match
  1  repository dirty and no override given
  2  records do not match (replicate, compare)
  3  I/O, usage, or environment error
  4  self-test failure

``run`` refuses to produce a result file from a dirty tree unless
``--allow-dirty`` (or R5_ALLOW_DIRTY=1) is given, runs the golden-vector
self-test, generates the walk, writes the provenance-stamped record, and
prints the positions; the timestamp goes only into the file, so stdout is
byte-identical across invocations.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .errors import R5WalkError
from .provenance import (
    ResultRecord,
    build_record,
    canonical_json,
    capture_env,
    capture_vcs,
    compare_records,
    fingerprint_to_dict,
    read_record,
    self_test,
    write_record,
)
from .rng import SeedScheme, SeedSpec
from .walks import WalkModel, WalkParams, generate_walk

EXIT_OK = 0
EXIT_DIRTY = 1
EXIT_MISMATCH = 2
EXIT_USAGE_IO = 3
EXIT_SELFTEST = 4

DIRTY_MESSAGE = "Repository is dirty, please commit first"
ALLOW_DIRTY_ENV = "R5_ALLOW_DIRTY"


@dataclass(frozen=True)
class RunConfig:
    """Everything the run command needs."""

    walk: WalkParams
    out: Path
    allow_dirty: bool


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for mismatches.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE_IO, f"{self.prog}: error: {message}\n")


def _print_report(report, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(canonical_json(report.to_dict()))
    else:
        for line in report.lines():
            print(line)


def cmd_run(config: RunConfig) -> int:
    """Gate on VCS cleanliness, self-test, generate, persist, print."""
    vcs = capture_vcs(Path.cwd())
    if vcs.dirty and not config.allow_dirty:
        print(DIRTY_MESSAGE)
        return EXIT_DIRTY
    report = self_test()
    if not report.passed:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{status} {check.name}", file=sys.stderr)
        print(f"self-test failed: {report.first_failure}", file=sys.stderr)
        return EXIT_SELFTEST
    walk = generate_walk(config.walk)
    record = build_record(
        walk, config.walk, capture_env(), vcs, datetime.now(timezone.utc)
    )
    config.out.parent.mkdir(parents=True, exist_ok=True)
    write_record(record, config.out)
    print(walk)
    return EXIT_OK


def cmd_replicate(record_path, fmt: str = "text") -> int:
    """Re-run a record's parameters on this build and compare the data."""
    record = read_record(record_path)
    rerun = generate_walk(record.parameters)
    candidate = ResultRecord(
        schema_version=record.schema_version,
        data=rerun,
        parameters=record.parameters,
        timestamp=record.timestamp,
        revision=record.revision,
        dirty=record.dirty,
        system=record.system,
    )
    report = compare_records(record, candidate)
    _print_report(report, fmt)
    return EXIT_OK if report.match else EXIT_MISMATCH


def cmd_compare(path_a, path_b, strict: bool = False, fmt: str = "text") -> int:
    """Compare two result files."""
    report = compare_records(read_record(path_a), read_record(path_b), strict=strict)
    _print_report(report, fmt)
    return EXIT_OK if report.match else EXIT_MISMATCH


def cmd_selftest() -> int:
    """Print one pass/fail line per golden vector."""
    report = self_test()
    for check in report.checks:
        if check.passed:
            print(f"PASS {check.name}")
        else:
            print(f"FAIL {check.name}: expected {check.expected}, got {check.actual}")
    return EXIT_OK if report.passed else EXIT_SELFTEST


def cmd_env() -> int:
    """Print the environment fingerprint in canonical JSON."""
    sys.stdout.write(canonical_json(fingerprint_to_dict(capture_env())))
    return EXIT_OK


def _walk_params(args) -> WalkParams:
    return WalkParams(
        count=args.count,
        x0=args.x0,
        step=args.step,
        seed=SeedSpec(SeedScheme(args.seed_scheme), args.seed),
        model=WalkModel(args.model),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="r5walk", description="Reproducible random-walk experiment harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="generate a walk and write a provenance-stamped record")
    run.add_argument("--count", type=int, default=10, help="number of steps (default 10)")
    run.add_argument("--x0", type=int, default=0, help="initial position (default 0)")
    run.add_argument("--step", type=int, default=1, help="step size (default 1)")
    run.add_argument("--seed", type=int, default=0, help="seed value, any non-negative integer (default 0)")
    run.add_argument(
        "--seed-scheme",
        choices=[s.value for s in SeedScheme],
        default=SeedScheme.BIG_INT_ARRAY.value,
        help="seed interpretation (default bigint)",
    )
    run.add_argument(
        "--model",
        choices=[m.value for m in WalkModel],
        default=WalkModel.UNIFORM.value,
        help="sampling model (default uniform)",
    )
    run.add_argument("--out", type=Path, default=Path("results.json"), help="result file path")
    run.add_argument("--allow-dirty", action="store_true", help="run even if the repository is dirty")

    replicate = sub.add_parser("replicate", help="re-run a record's parameters and compare the data")
    replicate.add_argument("record", type=Path)
    replicate.add_argument("--format", choices=["text", "json"], default="text")

    compare = sub.add_parser("compare", help="compare two result files")
    compare.add_argument("a", type=Path)
    compare.add_argument("b", type=Path)
    compare.add_argument("--strict", action="store_true", help="also compare revision, dirty flag and system")
    compare.add_argument("--format", choices=["text", "json"], default="text")

    sub.add_parser("selftest", help="run the embedded golden-vector checks")
    sub.add_parser("env", help="print the environment fingerprint")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            allow_dirty = args.allow_dirty or os.environ.get(ALLOW_DIRTY_ENV) == "1"
            config = RunConfig(walk=_walk_params(args), out=args.out, allow_dirty=allow_dirty)
            return cmd_run(config)
        if args.command == "replicate":
            return cmd_replicate(args.record, fmt=args.format)
        if args.command == "compare":
            return cmd_compare(args.a, args.b, strict=args.strict, fmt=args.format)
        if args.command == "selftest":
            return cmd_selftest()
        return cmd_env()
    except (R5WalkError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE_IO


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
