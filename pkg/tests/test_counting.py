"""
Tests for dot-product pair counts, energy, distinct dots, simplices and permanents.
"""

import itertools
import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from tests import ROOT  # noqa: F401
from chainring.core.sampling import random_point_set, trial_generators
from chainring.counting import (
    PointSet,
    count_pairs,
    distinct_dots,
    max_line_mass,
    nica_subset_sweep,
    nu_spectrum,
    permanent_reduction_check,
    permanent_value_set,
    reduced_closed_form,
    simplex_classes,
)
from chainring.counting.simplices import expected_tuple_count
from chainring.errors import GuardExceeded, NotAUnit, PreconditionViolation
from chainring.linalg import PointVec, SquareMatrix, dot, permanent_leibniz, vector_universe
from chainring.ring import make_ring

Z9 = make_ring(3, 1, 2)
F3 = make_ring(3, 1, 1)


def points(ring, rows):
    return PointSet.from_ints(ring, rows)


class TestPairCounts(unittest.TestCase):
    def test_line_example(self):
        full = PointSet(Z9, 1, vector_universe(Z9, 1))
        report = count_pairs(full, full, Z9.one)
        self.assertEqual(report.observed, 6)
        self.assertEqual(report.main_term, 9)
        self.assertAlmostEqual(report.bound, 9.0)
        self.assertTrue(report.passed)

    def test_plane_example(self):
        full = PointSet(Z9, 2, vector_universe(Z9, 2))
        report = count_pairs(full, full, Z9.one)
        self.assertEqual(report.observed, 648)
        self.assertEqual(report.size_e * report.size_f, 6561)
        self.assertTrue(report.passed)

    def test_empty(self):
        empty = PointSet(Z9, 2)
        report = count_pairs(empty, PointSet(Z9, 2, vector_universe(Z9, 2)), Z9.one)
        self.assertEqual(report.observed, 0)
        self.assertTrue(report.passed)

    def test_nonunit_target(self):
        full = PointSet(Z9, 1, vector_universe(Z9, 1))
        with self.assertRaises(PreconditionViolation):
            count_pairs(full, full, Z9(3))
        report = count_pairs(full, full, Z9(3), allow_nonunit=True)
        self.assertEqual(report.note, "non-unit lambda (exploration)")

    def test_random_sets(self):
        units = Z9.unit_indices().tolist()
        for rng in trial_generators(7, 1000):
            sizes = rng.integers(1, 82, size=2).tolist()
            e = random_point_set(Z9, 2, sizes[0], rng)
            f = random_point_set(Z9, 2, sizes[1], rng)
            target = Z9(int(rng.choice(units)))
            self.assertTrue(count_pairs(e, f, target).passed)

    def test_subset_sweep(self):
        for ring in (F3, make_ring(5, 1, 1), Z9):
            report = nica_subset_sweep(ring, ring.one)
            self.assertEqual(report.checks, 4 ** ring.order)
            self.assertTrue(report.passed)
            self.assertLessEqual(report.max_deviation_ratio, 1.0 + 1e-9)
        for unit in Z9.unit_indices().tolist():
            report = nica_subset_sweep(Z9, Z9(unit))
            self.assertEqual(report.checks, 4 ** 9)
            self.assertTrue(report.passed, report.target)

    def test_subset_sweep_guard(self):
        ring = make_ring(13, 1, 1)
        with self.assertRaises(GuardExceeded):
            nica_subset_sweep(ring, ring.one)


class TestEnergy(unittest.TestCase):
    def test_singletons(self):
        spectrum, report = nu_spectrum(points(Z9, [[1, 2]]), points(Z9, [[4, 0]]))
        self.assertEqual(spectrum.energy, 1)
        self.assertEqual(spectrum.total, 1)
        self.assertTrue(report.passed)

    def test_full_universe(self):
        universe = PointSet(Z9, 2, vector_universe(Z9, 2, "avoid_nonunit_cube"))
        spectrum, report = nu_spectrum(universe, universe)
        self.assertEqual(spectrum.total, 72 * 72)
        self.assertEqual(sum(spectrum.counts), spectrum.total)
        self.assertEqual(report.line_mass, 6)
        self.assertLessEqual(report.class_multiplicity, report.line_mass)
        self.assertTrue(report.passed)

    def test_rejects_nonunit_points(self):
        with self.assertRaises(PreconditionViolation):
            nu_spectrum(points(Z9, [[3, 6]]), points(Z9, [[1, 1]]))

    def test_random_sets(self):
        for rng in trial_generators(11, 200):
            sizes = rng.integers(1, 73, size=2).tolist()
            f = random_point_set(Z9, 2, sizes[0], rng, "avoid_nonunit_cube")
            g = random_point_set(Z9, 2, sizes[1], rng)
            _, report = nu_spectrum(f, g)
            self.assertTrue(report.passed, report.note)

    def test_line_mass(self):
        self.assertEqual(max_line_mass(points(Z9, [[1, 2]])), 1)
        self.assertEqual(max_line_mass(points(Z9, [[1, 0], [2, 0], [0, 1]])), 2)
        orbit = points(Z9, [[s, 3 * s] for s in (1, 2, 4, 5, 7, 8)])
        self.assertEqual(max_line_mass(orbit), Z9.unit_count)


class TestDistinctDots(unittest.TestCase):
    def test_full_universe(self):
        universe = PointSet(Z9, 2, vector_universe(Z9, 2, "avoid_nonunit_cube"))
        report = distinct_dots(universe, universe)
        self.assertEqual(report.size, 9)
        self.assertTrue(report.passed)

    def test_axis(self):
        report = distinct_dots(points(Z9, [[1, 0]]), points(Z9, [[t, 0] for t in range(9)]))
        self.assertEqual(report.values, list(range(9)))

    def test_orthogonal(self):
        report = distinct_dots(points(Z9, [[1, 1]]), points(Z9, [[1, -1]]))
        self.assertEqual(report.values, [0])
        self.assertEqual(report.size, 1)

    def test_chain(self):
        rng = np.random.default_rng(4)
        f = random_point_set(Z9, 2, 20, rng, "avoid_nonunit_cube")
        g = random_point_set(Z9, 2, 30, rng)
        report = distinct_dots(f, g)
        self.assertGreaterEqual(report.size + 1e-9, report.energy_lower)
        self.assertGreaterEqual(report.energy_lower + 1e-9, report.bound_lower)


class TestSimplices(unittest.TestCase):
    def test_pairs_in_plane(self):
        full = PointSet(Z9, 2, vector_universe(Z9, 2))
        self.assertEqual(simplex_classes(full, 1, "units_only").count, 6)
        self.assertEqual(simplex_classes(full, 1, "all_values").count, 9)

    def test_triangles_match_brute_force(self):
        full = PointSet(F3, 2, vector_universe(F3, 2))
        report = simplex_classes(full, 2, "all_values")
        pts = full.points
        expected = {
            (dot(a, b).index, dot(a, c).index, dot(b, c).index)
            for a, b, c in itertools.permutations(pts, 3)
        }
        self.assertEqual(report.count, len(expected))
        self.assertEqual(report.tuples, expected_tuple_count(9, 2))
        self.assertLessEqual(report.count, report.ceiling)

    def test_with_norms(self):
        full = PointSet(F3, 2, vector_universe(F3, 2))
        report = simplex_classes(full, 1, "with_norms")
        self.assertEqual(report.labels, 3)
        self.assertEqual(report.ceiling, 27)

    def test_count_ignores_point_order(self):
        rng = np.random.default_rng(31)
        e = random_point_set(Z9, 2, 25, rng)
        expected = simplex_classes(e, 2, "all_values").count
        for _ in range(5):
            shuffled = PointSet(Z9, 2, rng.permutation(e.rows))
            self.assertEqual(simplex_classes(shuffled, 2, "all_values").count, expected)
        self.assertEqual(simplex_classes(e, 2, "all_values").count, expected)

    def test_count_invariant_under_unit_scaling(self):
        rng = np.random.default_rng(37)
        e = random_point_set(Z9, 2, 20, rng)
        # scaling every point by a unit multiplies each label by its square
        scaled = PointSet(Z9, 2, np.asarray(Z9.vmul(2, e.rows), dtype=np.int64))
        for mode in ("units_only", "all_values", "with_norms"):
            self.assertEqual(simplex_classes(scaled, 2, mode).count, simplex_classes(e, 2, mode).count)

    def test_too_few_points(self):
        with self.assertRaises(PreconditionViolation):
            simplex_classes(points(Z9, [[1, 1]]), 1)


class TestPermanents(unittest.TestCase):
    def test_two_by_two(self):
        self.assertEqual(permanent_value_set(Z9, [1, 2], 2).values, [2, 3, 4, 5, 6, 8])
        self.assertEqual(permanent_value_set(Z9, [0], 2).values, [0])

    def test_two_by_two_matches_oracle(self):
        rng = np.random.default_rng(41)
        for ring in (Z9, make_ring(3, 2, 2)):
            for _ in range(8):
                a = rng.choice(ring.order, size=int(rng.integers(1, 5)), replace=False).tolist()
                oracle = {
                    permanent_leibniz(SquareMatrix.from_indices(ring, [[w, x], [y, z]])).index
                    for w, x, y, z in itertools.product(a, repeat=4)
                }
                self.assertEqual(permanent_value_set(ring, a, 2).values, sorted(oracle))

    def test_order_coprime(self):
        with self.assertRaises(PreconditionViolation):
            permanent_value_set(Z9, [1, 2], 3)
        with self.assertRaises(PreconditionViolation):
            permanent_value_set(Z9, [1, 2], 6)

    def test_reduced_family(self):
        ring = make_ring(5, 1, 1)
        report = permanent_value_set(ring, range(5), 3, u=1)
        self.assertTrue(report.reduced)
        self.assertEqual(report.values, list(range(5)))
        with self.assertRaises(PreconditionViolation):
            permanent_value_set(ring, [2, 3], 3, u=1)

    def test_reduction_examples(self):
        one = Z9.one
        self.assertTrue(permanent_reduction_check(one, [Z9(1), Z9(2)], [Z9(4), Z9(5)]))
        x = [one, one, one]
        self.assertEqual(reduced_closed_form(one, x, x), Z9(6))
        with self.assertRaises(NotAUnit):
            permanent_reduction_check(Z9(3), x, x)

    @settings(max_examples=300, deadline=None)
    @given(
        st.sampled_from([Z9, make_ring(3, 2, 2)]),
        st.integers(2, 4),
        st.data(),
    )
    def test_reduction_identity(self, ring, k, data):
        units = ring.unit_indices().tolist()
        u = ring.element(data.draw(st.sampled_from(units)))
        draw = st.integers(0, ring.order - 1)
        x = [ring.element(data.draw(draw)) for _ in range(k)]
        y = [ring.element(data.draw(draw)) for _ in range(k)]
        self.assertTrue(permanent_reduction_check(u, x, y))

    def test_reduction_identity_seeded(self):
        for ring in (Z9, make_ring(3, 2, 2), make_ring(5, 1, 2)):
            units = ring.unit_indices()
            for rng in trial_generators(53, 3400):
                k = int(rng.integers(2, 5))
                u = ring.element(int(rng.choice(units)))
                x = [ring.element(int(v)) for v in rng.integers(0, ring.order, size=k)]
                y = [ring.element(int(v)) for v in rng.integers(0, ring.order, size=k)]
                self.assertTrue(permanent_reduction_check(u, x, y))

    def test_threshold(self):
        report = permanent_value_set(Z9, range(9), 2)
        self.assertAlmostEqual(report.threshold_exponent, 5 / 3)
        self.assertTrue(report.meets_threshold)
        self.assertEqual(report.size, 9)
        self.assertEqual(report.unit_coverage, 1.0)
        self.assertTrue(math.isclose(report.ratio, 1.0))


class TestPointSet(unittest.TestCase):
    def test_duplicates_removed(self):
        s = points(Z9, [[1, 2], [1, 2], [0, 1]])
        self.assertEqual(len(s), 2)
        self.assertIn(PointVec.from_indices(Z9, [1, 2]), s)
        self.assertEqual(PointSet.from_points(s.points), s)
        self.assertTrue(s.avoids_nonunit_cube())
        self.assertFalse(points(Z9, [[3, 0]]).avoids_nonunit_cube())

    def test_rotate(self):
        s = points(Z9, [[1, 2]]).rotate()
        self.assertEqual(s.rows.tolist(), [[7, 1]])


if __name__ == "__main__":
    unittest.main()
