"""
Tests for vectors, projective classes, determinants and permanents.
"""

import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from tests import ROOT  # noqa: F401
from chainring.errors import DimensionMismatch, MatrixSizeError, NoUnitCoordinate
from chainring.linalg import (
    PointVec,
    SquareMatrix,
    canonical_rows,
    det,
    det_batch,
    dot,
    enumerate_proj_classes,
    line_through_origin,
    permanent,
    permanent_leibniz,
    proj_class,
    proj_class_array,
    proj_class_count,
    vector_universe,
)
from chainring.ring import make_ring

Z9 = make_ring(3, 1, 2)


def vec(*values):
    return PointVec.from_indices(Z9, values)


def matrix(rows, ring=Z9):
    return SquareMatrix.from_indices(ring, rows)


class TestVectors(unittest.TestCase):
    def test_dot(self):
        self.assertEqual(dot(vec(1, 0), vec(0, 1)).index, 0)
        self.assertEqual(dot(vec(2, 3), vec(3, 3)).index, 6)
        self.assertEqual(dot(vec(4, 7), vec(0, 0)).index, 0)
        with self.assertRaises(DimensionMismatch):
            dot(vec(1, 2), vec(1, 2, 3))

    def test_all_nonunit(self):
        self.assertTrue(vec(3, 6).all_nonunit())
        self.assertFalse(vec(3, 1).all_nonunit())

    def test_text_form(self):
        x = vec(5, 3, 0)
        self.assertEqual(PointVec.from_text(Z9, x.to_text()), x)
        with self.assertRaises(ValueError):
            PointVec.from_text(Z9, "5|3")

    def test_proj_class(self):
        self.assertEqual(proj_class(vec(2, 4)).rep, vec(1, 2))
        self.assertEqual(proj_class(vec(3, 1)).rep, vec(3, 1))
        with self.assertRaises(NoUnitCoordinate):
            proj_class(vec(3, 3))

    def test_proj_class_is_unit_invariant(self):
        x = vec(6, 5, 2)
        for unit in Z9.unit_indices().tolist():
            self.assertEqual(proj_class(x.scale(Z9.element(unit))), proj_class(x))

    def test_line_through_origin(self):
        line = line_through_origin(vec(1, 0))
        self.assertEqual(line, frozenset(vec(s, 0) for s in [1, 2, 4, 5, 7, 8]))
        self.assertIn(vec(2, 2), line_through_origin(vec(1, 1)))
        with self.assertRaises(NoUnitCoordinate):
            line_through_origin(vec(0, 3))

    def test_universe_sizes(self):
        self.assertEqual(vector_universe(Z9, 2).shape, (81, 2))
        self.assertEqual(vector_universe(Z9, 2, "avoid_nonunit_cube").shape[0], 72)
        self.assertEqual(vector_universe(Z9, 2, "units_only").shape[0], 36)

    def test_canonical_rows_agree_with_proj_class(self):
        rows = vector_universe(Z9, 2)
        canon, valid = canonical_rows(Z9, rows)
        for row, rep, ok in zip(rows.tolist(), canon.tolist(), valid.tolist()):
            x = PointVec.from_indices(Z9, row)
            if ok:
                self.assertEqual(proj_class(x).rep.indices, tuple(rep))
            else:
                self.assertTrue(x.all_nonunit())

    def test_proj_class_enumeration(self):
        for ring, d in [(Z9, 2), (Z9, 3), (make_ring(3, 1, 1), 3), (make_ring(5, 1, 1), 2)]:
            self.assertEqual(proj_class_array(ring, d).shape[0], proj_class_count(ring.q, ring.r, d))
        classes = enumerate_proj_classes(make_ring(3, 1, 1), 2)
        self.assertEqual([c.rep.indices for c in classes], [(0, 1), (1, 0), (1, 1), (1, 2)])


class TestDeterminants(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(det(matrix([[1, 0], [0, 1]])).index, 1)
        self.assertEqual(det(matrix([[3, 0], [0, 3]])).index, 0)
        self.assertEqual(det(matrix([[1, 2], [3, 4]])).index, 7)

    def test_size_limit(self):
        with self.assertRaises(MatrixSizeError):
            det(matrix(np.eye(7, dtype=int).tolist()))

    def test_batch_matches_scalar(self):
        rng = np.random.default_rng(3)
        mats = rng.integers(0, 9, size=(50, 3, 3))
        batch = det_batch(Z9, mats)
        for m, value in zip(mats, batch.tolist()):
            self.assertEqual(det(matrix(m.tolist())).index, value)

    def test_determinant_is_multiplicative(self):
        rng = np.random.default_rng(17)
        for ring in (Z9, make_ring(3, 2, 2)):
            for k in (2, 3):
                a = rng.integers(0, ring.order, size=(1500, k, k))
                b = rng.integers(0, ring.order, size=(1500, k, k))
                # (AB)_ij is row i of A dotted with column j of B
                ab = np.stack([ring.vdot(x, y.T) for x, y in zip(a, b)])
                expected = ring.vmul(det_batch(ring, a), det_batch(ring, b))
                np.testing.assert_array_equal(det_batch(ring, ab), expected)

    def test_cyclic_determinant_matches_integer_determinant(self):
        rng = np.random.default_rng(11)
        for m in rng.integers(0, 9, size=(30, 3, 3)):
            expected = int(round(np.linalg.det(m.astype(float)))) % 9
            self.assertEqual(det(matrix(m.tolist())).index, expected)


class TestPermanents(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(permanent(matrix([[1, 0], [0, 1]])).index, 1)
        self.assertEqual(permanent(matrix([[1, 2], [3, 4]])).index, 1)
        self.assertEqual(permanent(matrix([[1] * 3] * 3)).index, 6)

    def test_size_limit(self):
        with self.assertRaises(MatrixSizeError):
            permanent(matrix([[1] * 9] * 9))

    @settings(max_examples=1000, deadline=None)
    @given(
        st.sampled_from([Z9, make_ring(3, 2, 2), make_ring(5, 1, 2)]),
        st.integers(1, 4),
        st.data(),
    )
    def test_ryser_matches_leibniz(self, ring, k, data):
        rows = [[data.draw(st.integers(0, ring.order - 1)) for _ in range(k)] for _ in range(k)]
        m = SquareMatrix.from_indices(ring, rows)
        self.assertEqual(permanent(m), permanent_leibniz(m))

    def test_ryser_matches_leibniz_larger_orders(self):
        rng = np.random.default_rng(23)
        for ring in (Z9, make_ring(3, 2, 2)):
            for k in (5, 6):
                for rows in rng.integers(0, ring.order, size=(10, k, k)):
                    m = SquareMatrix.from_indices(ring, rows.tolist())
                    self.assertEqual(permanent(m), permanent_leibniz(m))


if __name__ == "__main__":
    unittest.main()
