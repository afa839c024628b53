"""
Command handlers for the chainring CLI.

Each handler takes the parsed arguments and returns the process exit code:
0 when every asserted check passed, 1 when one failed, 2 on usage errors.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, Optional

from chainring.core.harness import Harness, build_config
from chainring.core.models import ExperimentReport
from chainring.core.reporting import render
from chainring.graphs import build_graph
from chainring.ring.core import RingSpec, parse_descriptor

from .config import parse_sizes
from .console import display_ring, display_summary

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        logger.info(f"wrote {path}")
    else:
        sys.stdout.write(text)


def _config(args: argparse.Namespace, command: str, experiment: str):
    return build_config(
        command=command,
        experiment=experiment,
        ring=args.ring,
        d=args.d,
        k=args.k,
        seed=args.seed,
        trials=args.trials,
        sizes=parse_sizes(args.sizes) if args.sizes else None,
        format=args.format,
        graph=args.graph,
        mode=args.mode,
        workers=args.workers,
        max_part=args.max_part,
        out=args.out,
        dump=getattr(args, "dump", None),
    )


def _finish(report: ExperimentReport) -> int:
    _write(render(report, report.config.format), report.config.out)
    display_summary(report)
    return EXIT_PASS if report.all_passed else EXIT_FAIL


def ring_info_text(ring: RingSpec) -> str:
    """Plain ``key: value`` description of a ring."""
    lines = [
        f"descriptor: {ring.descriptor}",
        f"p: {ring.p}",
        f"n: {ring.n}",
        f"r: {ring.r}",
        f"q: {ring.q}",
        f"order: {ring.order}",
        f"units: {ring.unit_count}",
        f"nonunits: {ring.nonunit_count}",
        f"uniformizer: {ring.uniformizer.to_text()}",
    ]
    if ring.field_poly is not None:
        lines.append("field_poly: " + ",".join(str(c) for c in ring.field_poly))
    return "\n".join(lines) + "\n"


def handle_ring(args: argparse.Namespace, harness: Harness) -> int:
    ring = parse_descriptor(args.ring)
    _write(ring_info_text(ring), args.out)
    display_ring(ring)
    return EXIT_PASS


def handle_graph(args: argparse.Namespace, harness: Harness) -> int:
    """
    Run the spectrum check and print the singular values.

    Args:
        args: Parsed arguments
        harness: The harness

    Returns:
        Exit code
    """
    config = _config(args, "verify", "spectrum")
    report = harness.run(config)
    ring = parse_descriptor(report.config.ring)
    graph = build_graph(report.config.graph, ring, report.config.d, report.config.max_part)
    if report.config.out:
        with open(report.config.out, "w", encoding="utf-8", newline="") as out:
            graph.dump_spectrum(out)
    else:
        graph.dump_spectrum(sys.stdout)
    if report.config.dump:
        with open(report.config.dump, "w", encoding="utf-8", newline="") as out:
            graph.dump(out)
        logger.info(f"wrote graph dump to {report.config.dump}")
    display_summary(report)
    return EXIT_PASS if report.all_passed else EXIT_FAIL


def handle_verify(args: argparse.Namespace, harness: Harness) -> int:
    return _finish(harness.run(_config(args, "verify", args.experiment)))


def handle_sweep(args: argparse.Namespace, harness: Harness) -> int:
    return _finish(harness.run(_config(args, "sweep", args.experiment)))


# Command handlers dictionary
COMMANDS: Dict[str, Callable[[argparse.Namespace, Harness], int]] = {
    "ring": handle_ring,
    "graph": handle_graph,
    "verify": handle_verify,
    "sweep": handle_sweep,
}


def process_command(args: argparse.Namespace, harness: Optional[Harness] = None) -> int:
    """
    Dispatch a parsed command.

    Args:
        args: Parsed arguments with ``command`` set
        harness: Harness to run experiments with

    Returns:
        Exit code
    """
    handler = COMMANDS.get(args.command)
    if handler is None:
        return EXIT_USAGE
    return handler(args, harness or Harness())
