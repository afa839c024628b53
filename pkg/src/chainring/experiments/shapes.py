"""
Simplex congruence classes and permanent value sets.
"""

import logging
from typing import Any, Dict

from ..core.models import ExperimentConfig
from ..core.sampling import random_point_set, random_subset
from ..counting import permanent_reduction_check, permanent_value_set, simplex_classes
from ..counting.permanents import REDUCED_LIMIT
from ..counting.simplices import SIMPLEX_LIMIT
from ..ring.core import RingSpec
from .base import Experiment

logger = logging.getLogger(__name__)


class SimplicesExperiment(Experiment):
    """Census of k-simplex classes; reported against the q^(r * labels) ceiling, not asserted."""

    requires = ("d", "k")

    @property
    def name(self) -> str:
        return "simplices"

    @property
    def description(self) -> str:
        return "Dot-product congruence classes of k-simplices"

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"d": 2, "k": 2}

    def default_sizes(self, ring, config):
        largest = int(SIMPLEX_LIMIT ** (1 / (config.k + 1)))
        size = min(ring.order ** config.d, largest, 4 * ring.order)
        return [(max(size, config.k + 1), 0)]

    def verify(self, config, ring, trial, sizes, rng):
        e = random_point_set(ring, config.d, sizes[0], rng)
        report = simplex_classes(e, config.k, config.mode)
        return [
            self.row(
                config,
                ring,
                trial,
                size_a=len(e),
                observed=report.count,
                bound=report.ceiling,
                asserted=False,
                note=f"mode={report.mode}; size_threshold={report.size_threshold:.12g}",
            )
        ]


class PermanentsExperiment(Experiment):
    """P_k(A^k) for a random A plus the reduction identity on a random (u, x, y)."""

    requires = ("k",)

    @property
    def name(self) -> str:
        return "permanents"

    @property
    def description(self) -> str:
        return "Permanent value sets and the constant-row reduction"

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"k": 2}

    def default_sizes(self, ring, config):
        if config.k <= 2:
            return [(max(1, ring.order // 2), 0)]
        largest = int(REDUCED_LIMIT ** (1 / (2 * config.k)))
        return [(max(1, min(ring.order, largest)), 0)]

    def verify(self, config, ring, trial, sizes, rng):
        k = config.k
        a = random_subset(ring.all_indices(), sizes[0], rng)
        report = permanent_value_set(ring, a, k)
        u = ring.element(int(random_subset(ring.unit_indices(), 1, rng)[0]))
        x = [ring.element(int(v)) for v in rng.integers(0, ring.order, size=k)]
        y = [ring.element(int(v)) for v in rng.integers(0, ring.order, size=k)]
        identity = permanent_reduction_check(u, x, y, k)
        if not identity:
            logger.warning(f"reduction identity failed for u={u.to_text()} over {ring.descriptor}")
        return [
            self.row(
                config,
                ring,
                trial,
                size_a=report.set_size,
                observed=report.size,
                bound=report.ring_order,
                asserted=False,
                note=f"unit_coverage={report.unit_coverage:.12g}; meets_threshold={report.meets_threshold}",
            ),
            self.row(
                config,
                ring,
                trial,
                observed=1.0 if identity else 0.0,
                main_term=1.0,
                passed=identity,
                note="reduction identity",
            ),
        ]
