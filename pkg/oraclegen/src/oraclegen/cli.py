"""Command-line front end for fixture harvesting."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .harvest import OracleUnavailableError, emit_fixture, emit_standard_set


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oraclegen",
        description="Harvest golden RNG fixtures from the reference generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    emit = sub.add_parser("emit", help="harvest one fixture")
    emit.add_argument("--oracle", choices=["A", "B"], required=True)
    emit.add_argument("--seed", required=True, help="non-negative decimal seed")
    emit.add_argument("--out", type=Path, required=True)

    regen = sub.add_parser("standard-set", help="regenerate the committed fixture set")
    regen.add_argument("fixtures_dir", type=Path)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "emit":
            emit_fixture(args.oracle, args.seed, args.out)
            print(args.out)
        else:
            for path in emit_standard_set(args.fixtures_dir):
                print(path)
        return 0
    except (OracleUnavailableError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
