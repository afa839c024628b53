"""
Monochromatic sum-product witnesses found directly and through the Erdős–Rényi graph.
"""

import logging

from ..core.sampling import random_subset
from ..sumproduct import find_witness_direct, find_witness_spectral, is_witness, make_pair, threshold_sweep
from .base import Experiment

logger = logging.getLogger(__name__)


class SumProductExperiment(Experiment):
    @property
    def name(self) -> str:
        return "sumproduct"

    @property
    def description(self) -> str:
        return "Units x, y with x + y in X1 and x y in X2"

    def default_sizes(self, ring, config):
        half = ring.unit_count // 2 + 1
        return [(min(half, ring.unit_count), min(half, ring.unit_count))]

    def verify(self, config, ring, trial, sizes, rng):
        units = ring.unit_indices()
        pair = make_pair(ring, random_subset(units, sizes[0], rng), random_subset(units, sizes[1], rng))
        direct = find_witness_direct(pair)
        spectral = find_witness_spectral(pair)
        agree = (direct is None) == (spectral.witness is None)
        verified = all(is_witness(pair, w) for w in (direct, spectral.witness) if w is not None)
        guaranteed = pair.meets_threshold or (ring.r == 1 and pair.product > 2 * ring.q)
        notes = [f"edges={spectral.edges}", f"residual={spectral.residual_edges}", f"collapsed={spectral.collapsed}"]
        if not agree:
            notes.append("direct and spectral finders disagree")
            logger.warning(f"witness finders disagree over {ring.descriptor} at trial {trial}")
        if guaranteed and direct is None:
            notes.append("no witness above the threshold")
        return [
            self.row(
                config,
                ring,
                trial,
                size_a=len(pair.x1),
                size_b=len(pair.x2),
                observed=spectral.edges,
                main_term=None,
                bound=spectral.mixing_lower,
                passed=agree and verified and spectral.passed and (direct is not None or not guaranteed),
                note="; ".join(notes),
            )
        ]

    def sweep(self, config, ring):
        sizes = config.sizes or self.default_sizes(ring, config)
        rows = []
        for position, point in enumerate(threshold_sweep(ring, config.trials, sizes, config.seed)):
            rows.append(
                self.row(
                    config,
                    ring,
                    position,
                    size_a=point.size_x1,
                    size_b=point.size_x2,
                    observed=point.rate,
                    bound=point.threshold,
                    passed=point.passed,
                    asserted=point.meets_threshold or point.meets_field_threshold,
                    note=f"found {point.found} of {point.trials}",
                )
            )
        return rows
