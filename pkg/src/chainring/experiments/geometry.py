"""
Plane and volume experiments: incidences, rich lines, pinned areas and volumes.
"""

import logging
from typing import Any, Dict, List

import numpy as np

from ..core.models import ExperimentConfig, ReportRow
from ..core.sampling import random_point_set, random_subset
from ..errors import NoUnitCoordinate
from ..geometry import (
    duality_count,
    incidences,
    lifted_identity_holds,
    origin_areas,
    pinned_areas,
    pinned_point,
    pinned_volumes,
    rich_lines,
    volume_threshold,
)
from ..geometry.volumes import VOLUME_LIMIT
from ..graphs.builders import er_part_size
from ..linalg.vectors import PointVec, proj_class_array
from ..ring.core import RingSpec
from .base import Experiment

logger = logging.getLogger(__name__)


class PlaneExperiment(Experiment):
    """Experiments that live in R^2."""

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"d": 2}

    def default_sizes(self, ring, config):
        return [(max(1, ring.order ** 2 // 2), 0)]


class IncidencesExperiment(PlaneExperiment):
    @property
    def name(self) -> str:
        return "incidences"

    @property
    def description(self) -> str:
        return "Point-line incidences against |E||L|/q^r, counted directly and through the Erdős–Rényi graph"

    def default_sizes(self, ring, config):
        return [(max(1, ring.order ** 2 // 2), max(1, er_part_size(ring, 3) // 2))]

    def verify(self, config, ring, trial, sizes, rng):
        e = random_point_set(ring, 2, sizes[0], rng)
        classes = proj_class_array(ring, 3)
        lines = classes[random_subset(np.arange(classes.shape[0]), min(sizes[1], classes.shape[0]), rng)]
        report = incidences(e, lines)
        dual = duality_count(e, lines)
        passed = report.passed and dual == report.observed
        note = None if dual == report.observed else f"duality count {dual} != {int(report.observed)}"
        return [
            self.row(
                config,
                ring,
                trial,
                report,
                size_a=report.size_points,
                size_b=report.size_lines,
                passed=passed,
                note=note,
            )
        ]


class RichLinesExperiment(PlaneExperiment):
    @property
    def name(self) -> str:
        return "rich-lines"

    @property
    def description(self) -> str:
        return "Rich graph lines against q^(2r)/4 once |E| >= 3 q^(2r-1)"

    def default_sizes(self, ring, config):
        return [(min(ring.order ** 2, 3 * ring.q ** (2 * ring.r - 1)), 0)]

    def verify(self, config, ring, trial, sizes, rng):
        e = random_point_set(ring, 2, sizes[0], rng)
        report = rich_lines(e)
        rows = [
            self.row(
                config,
                ring,
                trial,
                size_a=len(e),
                observed=report.count,
                bound=report.required,
                passed=report.passed,
                asserted=report.guarantee,
                note=f"threshold={report.threshold}",
            )
        ]
        if len(e):
            point = pinned_point(e)
            rows.append(
                self.row(
                    config,
                    ring,
                    trial,
                    size_a=len(e),
                    observed=point.rich_line_count,
                    bound=point.required,
                    passed=point.passed,
                    asserted=point.guarantee,
                    note=f"pinned point {point.z}",
                )
            )
        return rows


class PinnedAreasExperiment(PlaneExperiment):
    """V_2^z(E) at the pinned point, its constructive subset and translation invariance."""

    @property
    def name(self) -> str:
        return "pinned-areas"

    @property
    def description(self) -> str:
        return "Pinned areas at the point on the most rich lines"

    def default_sizes(self, ring, config):
        return [(min(ring.order ** 2, 8 * ring.q ** (2 * ring.r - 1)), 0)]

    def verify(self, config, ring, trial, sizes, rng):
        e = random_point_set(ring, 2, max(1, sizes[0]), rng)
        z = PointVec.from_indices(ring, e.rows[pinned_point(e).z_index])
        report = pinned_areas(e, z)
        shift = PointVec.from_indices(ring, rng.integers(0, ring.order, size=2).tolist())
        moved = pinned_areas(e.translate(shift), z + shift)
        invariant = moved.values == report.values
        notes = [f"z={report.z}", f"selected={report.selected}", f"skipped={report.skipped_lines}"]
        if not invariant:
            notes.append("translation changed the pinned values")
        rows = [
            self.row(
                config,
                ring,
                trial,
                size_a=len(e),
                observed=report.size,
                main_term=ring.order,
                passed=report.passed and invariant,
                note="; ".join(notes),
            )
        ]
        areas = origin_areas(e)
        rows.append(
            self.row(
                config,
                ring,
                trial,
                size_a=len(e),
                observed=areas.size,
                bound=areas.size_threshold,
                passed=areas.passed,
                asserted=areas.regime,
                note="areas through the origin",
            )
        )
        return rows


class VolumesExperiment(Experiment):
    """Pinned volumes by slicing, cross-checked by brute force, plus the lifted determinant identity."""

    requires = ("d",)

    @property
    def name(self) -> str:
        return "volumes"

    @property
    def description(self) -> str:
        return "Pinned d-dimensional volumes through induction on the dimension"

    def defaults(self, ring: RingSpec, config: ExperimentConfig) -> Dict[str, Any]:
        return {"d": 3}

    def default_sizes(self, ring, config):
        largest = int(VOLUME_LIMIT ** (1 / config.d))
        return [(max(1, min(ring.order ** config.d, largest, 9 * ring.order)), 0)]

    def verify(self, config, ring, trial, sizes, rng):
        d = config.d
        e = random_point_set(ring, d, max(1, sizes[0]), rng)
        guarantee = len(e) >= volume_threshold(ring, d)
        rows: List[ReportRow] = []
        try:
            report = pinned_volumes(e)
        except NoUnitCoordinate as err:
            rows.append(
                self.row(config, ring, trial, size_a=len(e), passed=not guarantee, asserted=guarantee, note=str(err))
            )
        else:
            rows.append(
                self.row(
                    config,
                    ring,
                    trial,
                    size_a=len(e),
                    size_b=report.slice_size,
                    observed=len(report.inductive_values),
                    bound=len(report.direct_values),
                    passed=report.passed,
                    note=f"z={report.z}; guarantee={report.guarantee}",
                )
            )
        rows.append(self._lifted_row(config, ring, trial, rng))
        return rows

    def _lifted_row(self, config: ExperimentConfig, ring: RingSpec, trial: int, rng: np.random.Generator) -> ReportRow:
        d = config.d
        layer_rows = rng.integers(0, ring.order, size=(d, d))
        layer_rows[:, -1] = 0
        layer = [PointVec.from_indices(ring, row.tolist()) for row in layer_rows]
        pin = rng.integers(0, ring.order, size=d)
        pin[-1] = int(random_subset(ring.unit_indices(), 1, rng)[0])
        holds = lifted_identity_holds(layer, PointVec.from_indices(ring, pin.tolist()))
        return self.row(
            config,
            ring,
            trial,
            observed=1.0 if holds else 0.0,
            main_term=1.0,
            passed=holds,
            note="lifted determinant identity",
        )
