"""
Graph experiments: spectrum bounds, the mixing lemma and the variance bound.
"""

import logging
import math
from typing import Any, Dict, List, Tuple

import numpy as np

from ..core.models import TOLERANCE, ExperimentConfig, ReportRow
from ..core.sampling import random_vertex_set
from ..errors import GuardExceeded
from ..graphs import BipartiteGraph, build_graph, mixing_check, third_eigenvalue, variance_check
from ..graphs.builders import er_degree, er_part_size, product_degree, product_part_size
from ..ring.core import RingSpec
from .base import Experiment

logger = logging.getLogger(__name__)


def spectral_bound(ring: RingSpec, kind: str, d: int) -> float:
    """sqrt(q^((d-1)(2r-1))) for the product graph, sqrt(q^((d-2)(2r-1))) for Erdős–Rényi."""
    shift = 1 if kind == "product" else 2
    return math.sqrt(ring.q ** ((d - shift) * (2 * ring.r - 1)))


def expected_shape(ring: RingSpec, kind: str, d: int) -> Tuple[int, int]:
    if kind == "product":
        return product_part_size(ring, d), product_degree(ring, d)
    return er_part_size(ring, d), er_degree(ring, d)


class GraphExperiment(Experiment):
    """Shared graph setup; ``d`` defaults to 2 (product) or 3 (Erdős–Rényi)."""

    requires = ("d",)

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"d": 2 if config.graph == "product" else 3}

    def default_sizes(self, ring: RingSpec, config: ExperimentConfig) -> List[Tuple[int, int]]:
        size, _ = expected_shape(ring, config.graph, config.d)
        half = max(1, size // 2)
        return [(half, half)]

    def graph(self, config: ExperimentConfig, ring: RingSpec) -> BipartiteGraph:
        return build_graph(config.graph, ring, config.d, config.max_part)

    def connectivity_row(self, config: ExperimentConfig, ring: RingSpec, g: BipartiteGraph, trial: int) -> List[ReportRow]:
        if g.is_connected():
            return []
        logger.warning(f"{g.name} is disconnected; the third eigenvalue is not sigma_2")
        return [self.row(config, ring, trial, passed=False, note="disconnected graph")]


class MixingExperiment(GraphExperiment):
    @property
    def name(self) -> str:
        return "mixing"

    @property
    def description(self) -> str:
        return "Edge counts e(X, Y) against the expander mixing lemma"

    def verify(self, config, ring, trial, sizes, rng):
        g = self.graph(config, ring)
        rows = self.connectivity_row(config, ring, g, trial)
        xs = random_vertex_set(g.size_a, sizes[0], rng)
        ys = random_vertex_set(g.size_b, sizes[1], rng)
        report = mixing_check(g, xs, ys)
        rows.append(self.row(config, ring, trial, report, size_a=report.size_x, size_b=report.size_y))
        return rows


class VarianceExperiment(GraphExperiment):
    @property
    def name(self) -> str:
        return "variance"

    @property
    def description(self) -> str:
        return "Neighbour-count variance against lambda_3^2 |V|"

    def verify(self, config, ring, trial, sizes, rng):
        g = self.graph(config, ring)
        rows = self.connectivity_row(config, ring, g, trial)
        us = random_vertex_set(g.size_a, sizes[0], rng)
        vs = random_vertex_set(g.size_b, sizes[1], rng)
        report = variance_check(g, us, vs)
        rows.append(
            self.row(
                config,
                ring,
                trial,
                size_a=report.size_u,
                size_b=report.size_v,
                observed=report.lhs,
                main_term=0.0,
                bound=report.rhs,
                passed=report.passed,
            )
        )
        return rows


class SpectrumExperiment(GraphExperiment):
    """Part sizes, degrees, sigma_1 = degree and sigma_2 against the closed-form bound."""

    randomized = False

    @property
    def name(self) -> str:
        return "spectrum"

    @property
    def description(self) -> str:
        return "Singular values of the product or Erdős–Rényi graph"

    def verify(self, config, ring, trial, sizes, rng):
        g = self.graph(config, ring)
        rows = self.connectivity_row(config, ring, g, trial)
        size, degree = expected_shape(ring, config.graph, config.d)
        shape_ok = g.size_a == g.size_b == size and g.deg_a == g.deg_b == degree
        sigma = g.singular_values
        top_ok = abs(float(sigma[0]) - math.sqrt(g.deg_a * g.deg_b)) <= 1e-9 * max(1.0, float(sigma[0]))
        second = third_eigenvalue(g)
        bound = spectral_bound(ring, config.graph, config.d)
        notes = []
        if not shape_ok:
            notes.append(f"shape {g.size_a}/{g.deg_a}, expected {size}/{degree}")
        if not top_ok:
            notes.append(f"sigma_1 = {float(sigma[0]):.12g}")
        rows.append(
            self.row(
                config,
                ring,
                trial,
                size_a=g.size_a,
                size_b=g.size_b,
                observed=second,
                main_term=0.0,
                bound=bound,
                passed=shape_ok and top_ok and second <= bound + TOLERANCE,
                note="; ".join(notes) or None,
            )
        )
        return rows

    def sweep(self, config, ring):
        rows = []
        for d in range(2 if config.graph == "product" else 3, (config.d or 3) + 1):
            try:
                step = config.model_copy(update={"d": d})
                rows.extend(self.verify(step, ring, 0, (0, 0), np.random.default_rng(config.seed)))
            except GuardExceeded as e:
                logger.warning(f"spectrum sweep stopped at d={d}: {e}")
                break
        return rows
