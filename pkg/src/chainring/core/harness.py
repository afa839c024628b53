"""
Harness that resolves an experiment plugin and runs it.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

from pydantic import ValidationError

from ..errors import ConfigError, RingConstructionError
from ..experiments.base import Experiment
from ..experiments.manager import ExperimentRegistry, default_registry
from ..ring.core import RingSpec, parse_descriptor
from .models import ExperimentConfig, ExperimentReport, ReportRow, ReportSummary
from .sampling import trial_generators

logger = logging.getLogger(__name__)


def build_config(**values: Any) -> ExperimentConfig:
    """
    Build an ExperimentConfig, naming the offending field on failure.

    Raises:
        ConfigError: If any field fails validation
    """
    try:
        return ExperimentConfig(**{k: v for k, v in values.items() if v is not None})
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "config"
        raise ConfigError(field, first["msg"]) from e


class Harness:
    """Runs experiments from an ExperimentRegistry."""

    def __init__(self, registry: Optional[ExperimentRegistry] = None):
        """
        Initialize a new Harness.

        Args:
            registry: Experiment registry; every built-in experiment when omitted
        """
        self.registry = registry or default_registry()

    def prepare(self, config: ExperimentConfig) -> Tuple[Experiment, RingSpec, ExperimentConfig]:
        """Resolve the plugin and ring and fill experiment defaults."""
        experiment = self.registry.resolve(config.experiment)
        try:
            ring = parse_descriptor(config.ring)
        except RingConstructionError as e:
            raise ConfigError("ring", str(e)) from e

        missing: Dict[str, Any] = {
            key: value
            for key, value in experiment.defaults(ring, config).items()
            if getattr(config, key) is None
        }
        if missing:
            config = config.model_copy(update=missing)
        for field in experiment.requires:
            if getattr(config, field) is None:
                raise ConfigError(field, f"required by experiment '{experiment.name}'")
        return experiment, ring, config

    def run(self, config: ExperimentConfig) -> ExperimentReport:
        """
        Run one verify or sweep command.

        Args:
            config: The configuration

        Returns:
            Report with rows in trial order
        """
        started = time.perf_counter()
        experiment, ring, config = self.prepare(config)
        logger.info(f"running {config.command} {experiment.name} over {ring.descriptor}")

        rows: Optional[List[ReportRow]] = None
        if config.command == "sweep":
            rows = experiment.sweep(config, ring)
        sizes = config.sizes or experiment.default_sizes(ring, config)
        if rows is None:
            rows = []
            for position, pair in enumerate(sizes):
                rows.extend(self._trials(experiment, config, ring, position, pair))

        wall_time = time.perf_counter() - started
        summary = ReportSummary.from_rows(rows, wall_time)
        logger.info(
            f"{experiment.name}: {summary.passed_rows}/{summary.asserted_rows} asserted rows passed "
            f"in {wall_time:.3f}s"
        )
        return ExperimentReport(
            config=config,
            rows=rows,
            summary=summary,
            metadata={
                "ring": ring.descriptor,
                "description": experiment.description,
                "sizes": [list(pair) for pair in sizes],
            },
        )

    def _trials(
        self,
        experiment: Experiment,
        config: ExperimentConfig,
        ring: RingSpec,
        position: int,
        sizes: Tuple[int, int],
    ) -> List[ReportRow]:
        trials = config.trials if experiment.randomized else 1
        generators = trial_generators(config.seed, trials, stream=position)

        def one(trial: int) -> List[ReportRow]:
            return experiment.verify(config, ring, trial, sizes, generators[trial])

        if config.workers > 1 and trials > 1:
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                batches = list(pool.map(one, range(trials)))
        else:
            batches = [one(trial) for trial in range(trials)]
        return [row for batch in batches for row in batch]
