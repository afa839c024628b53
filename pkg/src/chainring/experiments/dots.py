"""
Dot-product experiments: pair counts, energy and distinct values.
"""

import logging
from typing import Any, Dict, List, Tuple

from ..core.models import ExperimentConfig, ReportRow
from ..core.sampling import random_point_set, random_subset
from ..counting import count_pairs, distinct_dots, nica_subset_sweep, nu_spectrum
from ..counting.dots import SUBSET_SWEEP_LIMIT
from ..ring.core import RingSpec
from .base import Experiment

logger = logging.getLogger(__name__)


def half_universe(ring: RingSpec, d: int, nonunit_cube: bool = True) -> int:
    """Half of R^d, or of R^d minus (R^0)^d when ``nonunit_cube`` is False."""
    size = ring.order ** d
    if not nonunit_cube:
        size -= ring.nonunit_count ** d
    return max(1, size // 2)


class NicaExperiment(Experiment):
    """N_lambda(E, F) for a random unit lambda and random E, F in R^d."""

    requires = ("d",)

    @property
    def name(self) -> str:
        return "nica"

    @property
    def description(self) -> str:
        return "Pairs with a prescribed unit dot product against the Nica bound"

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"d": 2}

    def default_sizes(self, ring, config):
        half = half_universe(ring, config.d)
        return [(half, half)]

    def verify(self, config, ring, trial, sizes, rng):
        target = ring.element(int(random_subset(ring.unit_indices(), 1, rng)[0]))
        e = random_point_set(ring, config.d, sizes[0], rng)
        f = random_point_set(ring, config.d, sizes[1], rng)
        report = count_pairs(e, f, target)
        return [self.row(config, ring, trial, report, size_a=report.size_e, size_b=report.size_f)]

    def sweep(self, config, ring):
        """Every subset pair of R at d = 1, once per unit lambda."""
        if ring.order > SUBSET_SWEEP_LIMIT:
            logger.warning(
                f"subset sweep needs q^r <= {SUBSET_SWEEP_LIMIT}; {ring.descriptor} falls back to random trials"
            )
            return None
        step = config.model_copy(update={"d": 1})
        rows: List[ReportRow] = []
        for trial, unit in enumerate(ring.unit_indices().tolist()):
            report = nica_subset_sweep(ring, ring.element(unit))
            rows.append(
                self.row(
                    step,
                    ring,
                    trial,
                    size_a=report.checks,
                    observed=report.max_deviation_ratio,
                    main_term=0.0,
                    bound=1.0,
                    passed=report.passed,
                    note=f"lambda={report.target}; failures={report.failures}; unsolved={report.unsolved}",
                )
            )
        return rows


class EnergyExperiment(Experiment):
    """Energy of nu(t) over F x G against the line-mass bound."""

    requires = ("d",)

    @property
    def name(self) -> str:
        return "energy"

    @property
    def description(self) -> str:
        return "Dot-product energy against |F|^2|G|^2/q^r + q^((d-1)(2r-1))|F||G|m"

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"d": 2}

    def default_sizes(self, ring, config):
        half = half_universe(ring, config.d, nonunit_cube=False)
        return [(half, half)]

    def verify(self, config, ring, trial, sizes, rng):
        f = random_point_set(ring, config.d, sizes[0], rng, "avoid_nonunit_cube")
        g = random_point_set(ring, config.d, sizes[1], rng)
        _, report = nu_spectrum(f, g)
        return [self.row(config, ring, trial, report, size_a=len(f), size_b=len(g))]


class DistinctDotsExperiment(Experiment):
    """|F . G| against the Cauchy-Schwarz chain total^2/energy >= total^2/bound."""

    requires = ("d",)

    @property
    def name(self) -> str:
        return "distinct-dots"

    @property
    def description(self) -> str:
        return "Number of distinct dot products against the energy lower bound"

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"d": 2}

    def default_sizes(self, ring, config) -> List[Tuple[int, int]]:
        half = half_universe(ring, config.d, nonunit_cube=False)
        return [(half, half)]

    def verify(self, config, ring, trial, sizes, rng):
        f = random_point_set(ring, config.d, sizes[0], rng, "avoid_nonunit_cube")
        g = random_point_set(ring, config.d, sizes[1], rng)
        report = distinct_dots(f, g)
        note = f"energy_lower={report.energy_lower:.12g}"
        if report.threshold_ratio is not None:
            note += f"; threshold_ratio={report.threshold_ratio:.12g}"
        return [
            self.row(
                config,
                ring,
                trial,
                size_a=len(f),
                size_b=len(g),
                observed=report.size,
                bound=report.bound_lower,
                passed=report.passed,
                note=note,
            )
        ]
