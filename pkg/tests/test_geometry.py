"""
Tests for lines, incidences, rich lines, pinned areas and pinned volumes.
"""

import itertools
import unittest

import numpy as np

from tests import ROOT  # noqa: F401
from chainring.core.sampling import random_point_set, trial_generators
from chainring.counting import PointSet
from chainring.errors import NoUnitCoordinate, PreconditionViolation
from chainring.geometry import (
    Line,
    duality_count,
    enumerate_graph_lines,
    graph_line_array,
    incidences,
    lifted_identity_holds,
    lines_from_text,
    origin_areas,
    pinned_areas,
    pinned_point,
    pinned_values,
    pinned_volumes,
    rich_lines,
    simplex_volume,
)
from chainring.geometry.volumes import richest_slice
from chainring.linalg import PointVec, vector_universe
from chainring.ring import make_ring

Z9 = make_ring(3, 1, 2)
F3 = make_ring(3, 1, 1)


def plane(ring):
    return PointSet(ring, 2, vector_universe(ring, 2))


def pt(ring, *values):
    return PointVec.from_indices(ring, [ring(v).index for v in values])


class TestLines(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(len(enumerate_graph_lines(Z9)), 81)
        lines = enumerate_graph_lines(F3)
        self.assertEqual(len(lines), 9)
        for line in lines:
            self.assertEqual(line.point_rows().shape[0], 3)

    def test_pairwise_intersections(self):
        point_sets = [set(map(tuple, ln.point_rows().tolist())) for ln in enumerate_graph_lines(Z9)]
        for a, b in itertools.combinations(point_sets, 2):
            self.assertLessEqual(len(a & b), 3)

    def test_graph_line(self):
        line = Line.graph(Z9(2), Z9(1))
        self.assertEqual(line.kind, "graph")
        self.assertTrue(line.contains(pt(Z9, 1, 3)))
        self.assertFalse(line.contains(pt(Z9, 1, 4)))
        self.assertEqual(Line(Z9, (4, 7, 2)), line)

    def test_text_round_trip(self):
        line = Line.graph(Z9(5), Z9(3))
        self.assertEqual(lines_from_text(Z9, [line.to_text()]), [line])

    def test_rejects_nonunit_coefficients(self):
        with self.assertRaises(NoUnitCoordinate):
            Line(Z9, (3, 6, 0))


class TestIncidences(unittest.TestCase):
    def test_full_plane(self):
        report = incidences(plane(Z9), graph_line_array(Z9))
        self.assertEqual(report.observed, 729)
        self.assertEqual(report.deviation, 0)
        self.assertTrue(report.passed)
        self.assertEqual(duality_count(plane(Z9), graph_line_array(Z9)), 729)

    def test_empty(self):
        report = incidences(PointSet(Z9, 2), enumerate_graph_lines(Z9))
        self.assertEqual(report.observed, 0)
        self.assertTrue(report.passed)

    def test_repeated_lines_count_once(self):
        e = plane(Z9)
        line = Line.graph(Z9(2), Z9(1))
        scaled = np.asarray(Z9.vmul(4, np.asarray(line.coeffs, dtype=np.int64)), dtype=np.int64)
        repeated = np.stack([np.asarray(line.coeffs), np.asarray(line.coeffs), scaled])
        report = incidences(e, repeated)
        self.assertEqual(report.size_lines, 1)
        self.assertEqual(report.observed, 9)
        self.assertEqual(duality_count(e, repeated), report.observed)
        self.assertEqual(incidences(e, [line, line]).observed, 9)

    def test_random_sets_agree_with_duality(self):
        coeffs = graph_line_array(Z9)
        for rng in trial_generators(3, 200):
            e = random_point_set(Z9, 2, int(rng.integers(1, 82)), rng)
            picks = np.sort(rng.choice(coeffs.shape[0], size=int(rng.integers(1, 82)), replace=False))
            report = incidences(e, coeffs[picks])
            self.assertTrue(report.passed)
            self.assertEqual(duality_count(e, coeffs[picks]), report.observed)


class TestRichLines(unittest.TestCase):
    def test_full_plane(self):
        report = rich_lines(plane(Z9))
        self.assertEqual(report.count, 81)
        self.assertEqual(report.threshold, 4)
        self.assertAlmostEqual(report.required, 20.25)
        self.assertTrue(report.guarantee)
        self.assertTrue(report.passed)

    def test_empty_and_single_line(self):
        self.assertEqual(rich_lines(PointSet(Z9, 2)).count, 0)
        line = Line.graph(Z9(1), Z9(0))
        report = rich_lines(PointSet(Z9, 2, line.point_rows()))
        self.assertGreaterEqual(report.count, 1)
        self.assertIn(line.to_text(), report.lines)
        self.assertFalse(report.guarantee)

    def test_pinned_point(self):
        report = pinned_point(plane(Z9))
        self.assertEqual(report.rich_line_count, 9)
        self.assertEqual(report.z_index, 0)
        self.assertFalse(report.guarantee)
        self.assertTrue(report.passed)

    def test_pinned_point_collinear(self):
        e = PointSet.from_ints(F3, [[0, 0], [1, 1], [2, 2]])
        self.assertEqual(pinned_point(e).rich_line_count, 1)
        with self.assertRaises(PreconditionViolation):
            pinned_point(PointSet(F3, 2))


class TestPinnedAreas(unittest.TestCase):
    def test_full_plane(self):
        report = pinned_areas(plane(Z9), pt(Z9, 0, 0))
        self.assertEqual(report.values, list(range(9)))
        self.assertEqual(report.rich_lines_through_z, 9)
        self.assertTrue(report.selection_valid)
        self.assertTrue(report.constructive_subset)
        self.assertTrue(report.passed)

    def test_collinear(self):
        line = Line.graph(Z9(2), Z9(0))
        report = pinned_areas(PointSet(Z9, 2, line.point_rows()), pt(Z9, 0, 0))
        self.assertEqual(report.values, [0])

    def test_pin_must_belong(self):
        with self.assertRaises(PreconditionViolation):
            pinned_areas(PointSet.from_ints(Z9, [[1, 1]]), pt(Z9, 0, 0))

    def test_random_set_against_brute_force(self):
        rng = np.random.default_rng(72)
        e = random_point_set(Z9, 2, 72, rng)
        z = e.points[0]
        report = pinned_areas(e, z)
        brute = set()
        for x in e.points:
            for y in e.points:
                a, b = x - z, y - z
                brute.add((a[0] * b[1] - a[1] * b[0]).index)
        self.assertEqual(set(report.values), brute)
        self.assertTrue(report.passed)

    def test_translation_invariance(self):
        rng = np.random.default_rng(9)
        e = random_point_set(Z9, 2, 30, rng)
        z = e.points[3]
        shift = pt(Z9, 4, 7)
        moved = pinned_areas(e.translate(shift), z + shift)
        self.assertEqual(moved.values, pinned_areas(e, z).values)

    def test_origin_areas(self):
        report = origin_areas(plane(Z9))
        self.assertTrue(report.regime)
        self.assertEqual(report.values, list(range(9)))
        self.assertTrue(report.passed)
        small = origin_areas(PointSet.from_ints(Z9, [[1, 0], [0, 1]]))
        self.assertFalse(small.regime)
        self.assertEqual(small.values, [0, 1, 8])


class TestPinnedVolumes(unittest.TestCase):
    def test_simplex_volume(self):
        vertices = [pt(F3, 0, 0), pt(F3, 1, 0), pt(F3, 0, 1)]
        self.assertEqual(simplex_volume(vertices), F3(1))

    def test_full_cube(self):
        cube = PointSet(F3, 3, vector_universe(F3, 3))
        self.assertEqual(pinned_values(cube, pt(F3, 0, 0, 0)), {0, 1, 2})
        report = pinned_volumes(cube)
        self.assertEqual(report.inductive_values, [0, 1, 2])
        self.assertEqual(report.direct_values, [0, 1, 2])
        self.assertTrue(report.passed)

    def test_collinear(self):
        e = PointSet.from_ints(F3, [[0, 0, 0], [1, 1, 1], [2, 2, 2]])
        self.assertEqual(pinned_values(e, pt(F3, 0, 0, 0)), {0})

    def test_random_set(self):
        rng = np.random.default_rng(200)
        e = random_point_set(Z9, 3, 200, rng)
        report = pinned_volumes(e)
        self.assertTrue(report.subset_holds)
        self.assertEqual(report.d, 3)
        self.assertGreater(report.slice_size, 0)

    def test_plane_base_case_is_constructive(self):
        rng = np.random.default_rng(71)
        for size in (30, 60, 81):
            e = random_point_set(Z9, 2, size, rng)
            report = pinned_volumes(e)
            z = PointVec.from_text(Z9, report.z)
            areas = pinned_areas(e, z)
            self.assertEqual(report.inductive_values, areas.constructive_values)
            self.assertEqual(report.direct_values, areas.values)
            self.assertTrue(report.passed)

    def test_lifted_values_come_from_the_slice(self):
        rng = np.random.default_rng(73)
        e = random_point_set(Z9, 3, 150, rng)
        report = pinned_volumes(e)
        t, layer = richest_slice(e)
        self.assertEqual((report.slice_value, report.slice_size), (t, len(layer)))
        lower = pinned_volumes(PointSet(Z9, 2, layer.rows[:, :-1]))
        z_last = PointVec.from_text(Z9, report.z).coords[-1] - Z9(t)
        scaled = sorted({(z_last * Z9(v)).index for v in lower.inductive_values})
        self.assertEqual(report.inductive_values, scaled)

    def test_no_unit_coordinate(self):
        e = PointSet.from_ints(Z9, [[1, 0, 0], [0, 1, 3], [1, 1, 6]])
        with self.assertRaises(NoUnitCoordinate):
            pinned_volumes(e)

    def test_lifted_identity(self):
        for rng in trial_generators(13, 200):
            layer = [
                PointVec.from_indices(Z9, rng.integers(0, 9, size=2).tolist() + [0]) for _ in range(3)
            ]
            head = rng.integers(0, 9, size=2).tolist()
            unit = int(rng.choice(Z9.unit_indices()))
            self.assertTrue(lifted_identity_holds(layer, PointVec.from_indices(Z9, head + [unit])))
        with self.assertRaises(NoUnitCoordinate):
            lifted_identity_holds(layer, PointVec.from_indices(Z9, [0, 0, 3]))


if __name__ == "__main__":
    unittest.main()
