"""
Main entry point for the chainring CLI.
"""

import argparse
import logging
import sys
from typing import List, Optional

from chainring.core import settings
from chainring.core.models import EXPERIMENTS
from chainring.errors import ChainRingError

from .commands import EXIT_USAGE, process_command
from .config import configure_logging, env_summary, load_environment
from .console import display_error

logger = logging.getLogger(__name__)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default="3^1^2:cyclic", help="Ring descriptor p^n^r:family")
    common.add_argument("--d", type=int, help="Dimension")
    common.add_argument("--k", type=int, help="Simplex order or matrix size")
    common.add_argument("--seed", type=int, default=0, help="Master seed")
    common.add_argument("--trials", type=int, default=100, help="Trials per size pair")
    common.add_argument("--sizes", help="Set sizes, e.g. 10:20,30:40 or 10,20")
    common.add_argument("--format", choices=("csv", "json"), default="csv", help="Report format")
    common.add_argument("--out", help="Write the report here instead of stdout")
    common.add_argument("--graph", choices=("product", "er"), default="product", help="Graph family")
    common.add_argument(
        "--mode",
        choices=("units_only", "all_values", "with_norms"),
        default="units_only",
        help="Simplex label mode",
    )
    common.add_argument("--workers", type=int, help="Thread pool size (default CHAINRING_WORKERS)")
    common.add_argument("--max-part", dest="max_part", type=int, help="Graph part guard (default CHAINRING_MAX_PART)")
    common.add_argument("--verbose", action="store_true", help="Enable verbose logging")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="chainring", description="chainring: finite valuation ring laboratory")
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    ring_parser = subparsers.add_parser("ring", parents=[common], help="Describe a ring")
    ring_parser.add_argument("action", choices=("info",))

    graph_parser = subparsers.add_parser("graph", parents=[common], help="Graph spectra")
    graph_parser.add_argument("action", choices=("spectrum",))
    graph_parser.add_argument("--dump", help="Write the graph in text form here")

    for name, text in (("verify", "Run seeded trials"), ("sweep", "Run a parameter sweep")):
        sub = subparsers.add_parser(name, parents=[common], help=text)
        sub.add_argument("experiment", choices=EXPERIMENTS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the CLI.

    Returns:
        0 when every asserted check passed, 1 when one failed, 2 on usage errors
    """
    load_environment()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    configure_logging(args.verbose)
    for key, value in env_summary():
        logger.debug(f"{key}: {value}")
    if args.workers is None:
        args.workers = settings.workers()
    if args.max_part is None:
        args.max_part = settings.max_part()

    try:
        return process_command(args)
    except ChainRingError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        display_error(str(e))
        return EXIT_USAGE
