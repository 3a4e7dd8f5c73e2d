#!/usr/bin/env python3
"""
ccspace - cognitive-consequence workbench
Entry point for the command line.
"""

import argparse
import logging
import sys

from src import __version__
from src.auditor.detector import ALL, COMMANDS
from src.cli import RunFlags, run
from src.config import log_level_from_env


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccspace",
        description="Check consequence operators, CWO families, limits and environments on a scenario.",
    )
    parser.add_argument("command", choices=COMMANDS + (ALL,))
    parser.add_argument("scenario", help="scenario JSON file")
    parser.add_argument("--format", choices=("text", "structured", "pdf"), default="text")
    parser.add_argument("--strict", action="store_true",
                        help="exit 2 when any check fails or a discrepancy is reported")
    parser.add_argument("--seed", type=int, help="seed for sampled checks")
    parser.add_argument("--epsilon", type=float, help="cognitive threshold for limit detection")
    parser.add_argument("--cap", type=int, help="enumeration cap for deductive sets")
    parser.add_argument("--output", "-o", help="write the report to this file")
    parser.add_argument("--verbose", "-v", action="store_true", help="log progress at INFO")
    parser.add_argument("--version", action="version", version=f"ccspace {__version__}")
    return parser


def main(argv=None) -> int:
    """Parse arguments, configure logging and run one command."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level="INFO" if args.verbose else log_level_from_env(),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    flags = RunFlags(
        format=args.format,
        strict=args.strict,
        seed=args.seed,
        epsilon=args.epsilon,
        cap=args.cap,
        output=args.output,
    )
    _, code = run(args.command, args.scenario, flags)
    return code


if __name__ == "__main__":
    sys.exit(main())
