"""
Tests for sum-product witnesses and the threshold sweep.
"""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from tests import ROOT  # noqa: F401
from chainring.core.sampling import random_subset, trial_generators
from chainring.errors import PreconditionViolation
from chainring.ring import make_ring
from chainring.sumproduct import (
    find_witness_direct,
    find_witness_spectral,
    is_witness,
    make_pair,
    sumproduct_threshold,
    threshold_sweep,
)

Z9 = make_ring(3, 1, 2)
Z25 = make_ring(5, 1, 2)
F5 = make_ring(5, 1, 1)


def units(ring):
    return ring.unit_indices().tolist()


class TestWitness(unittest.TestCase):
    def test_example(self):
        pair = make_pair(Z9, [1], [7])
        self.assertEqual(find_witness_direct(pair), (2, 8))
        self.assertTrue(is_witness(pair, (2, 8)))
        self.assertFalse(is_witness(pair, (1, 0)))

    def test_full_unit_group(self):
        for ring in (Z9, Z25, F5):
            pair = make_pair(ring, units(ring), units(ring))
            witness = find_witness_direct(pair)
            self.assertIsNotNone(witness)
            self.assertTrue(is_witness(pair, witness))
            report = find_witness_spectral(pair)
            self.assertTrue(report.found)
            self.assertTrue(report.passed)

    def test_rejects_nonunits(self):
        with self.assertRaises(PreconditionViolation):
            make_pair(Z9, [3], [1])
        with self.assertRaises(PreconditionViolation):
            make_pair(Z9, [1], [0])

    def test_empty_x2(self):
        pair = make_pair(Z9, units(Z9), [])
        self.assertIsNone(find_witness_direct(pair))
        report = find_witness_spectral(pair)
        self.assertEqual(report.edges, 0)
        self.assertEqual(report.residual_edges, 0)
        self.assertFalse(report.found)

    def test_threshold(self):
        self.assertAlmostEqual(sumproduct_threshold(Z9), 60.75)
        self.assertFalse(make_pair(Z9, units(Z9), units(Z9)).meets_threshold)
        self.assertTrue(make_pair(Z25, units(Z25), units(Z25)).meets_threshold)

    def test_edge_lower_bound_holds(self):
        for ring in (Z9, Z25, make_ring(3, 1, 3), make_ring(7, 1, 1)):
            pool = ring.unit_indices()
            for rng in trial_generators(61, 60):
                s1, s2 = rng.integers(1, pool.size + 1, size=2).tolist()
                pair = make_pair(ring, random_subset(pool, s1, rng), random_subset(pool, s2, rng))
                report = find_witness_spectral(pair)
                self.assertGreaterEqual(report.edges + 1e-6, report.displayed_lower)
                self.assertTrue(report.displayed_passed)

    @settings(max_examples=1000, deadline=None)
    @given(st.sampled_from([Z9, Z25]), st.data())
    def test_direct_and_spectral_agree(self, ring, data):
        pool = units(ring)
        x1 = data.draw(st.lists(st.sampled_from(pool), max_size=len(pool)))
        x2 = data.draw(st.lists(st.sampled_from(pool), max_size=len(pool)))
        pair = make_pair(ring, x1, x2)
        direct = find_witness_direct(pair)
        spectral = find_witness_spectral(pair)
        self.assertEqual(direct is not None, spectral.found)
        self.assertTrue(spectral.witness_valid)
        self.assertTrue(spectral.displayed_passed)
        self.assertTrue(spectral.mixing_passed)
        self.assertTrue(spectral.squares_passed)


class TestThresholdSweep(unittest.TestCase):
    def test_field_threshold(self):
        points = threshold_sweep(F5, 30, [(1, 1), (4, 3)], seed=1)
        low, high = points
        self.assertFalse(low.meets_field_threshold)
        self.assertTrue(low.passed)
        self.assertTrue(high.meets_field_threshold)
        self.assertEqual(high.rate, 1.0)
        self.assertTrue(high.passed)

    def test_above_threshold(self):
        points = threshold_sweep(Z25, 10, [(20, 20), (15, 15)], seed=3)
        for point in points:
            self.assertTrue(point.meets_threshold)
            self.assertEqual(point.found, point.trials)

    def test_determinism(self):
        first = threshold_sweep(Z9, 20, [(3, 3)], seed=5)
        second = threshold_sweep(Z9, 20, [(3, 3)], seed=5)
        self.assertEqual(first, second)

    def test_oversized(self):
        with self.assertRaises(PreconditionViolation):
            threshold_sweep(Z9, 1, [(7, 1)])


if __name__ == "__main__":
    unittest.main()
