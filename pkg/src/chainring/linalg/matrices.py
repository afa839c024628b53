"""
Square matrices over R: determinants and permanents.

R has zero divisors, so determinants use the Leibniz expansion rather than
elimination. Permanents use Ryser's inclusion-exclusion formula, which needs
only ring addition, subtraction and multiplication.
"""

import itertools
from typing import List, Sequence, Tuple

import numpy as np

from ..errors import DimensionMismatch, MatrixSizeError, MixedRingError
from ..ring.core import RingElement, RingSpec

DET_MAX_SIZE = 6
PERMANENT_MAX_SIZE = 8


class SquareMatrix:
    """k x k matrix of ring elements."""

    __slots__ = ("entries", "ring")

    def __init__(self, entries: Sequence[Sequence[RingElement]]):
        rows = tuple(tuple(row) for row in entries)
        k = len(rows)
        if k == 0 or any(len(row) != k for row in rows):
            raise DimensionMismatch("matrix must be square and non-empty")
        ring = rows[0][0].ring
        for row in rows:
            for e in row:
                if e.ring is not ring and e.ring != ring:
                    raise MixedRingError("matrix entries from different rings")
        self.entries: Tuple[Tuple[RingElement, ...], ...] = rows
        self.ring: RingSpec = ring

    @classmethod
    def from_indices(cls, ring: RingSpec, rows: Sequence[Sequence[int]]) -> "SquareMatrix":
        return cls([[RingElement(int(v), ring) for v in row] for row in rows])

    @property
    def k(self) -> int:
        return len(self.entries)

    def index_array(self) -> np.ndarray:
        return np.array([[e.index for e in row] for row in self.entries], dtype=np.int64)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(e.to_text() for e in row) for row in self.entries)
        return f"SquareMatrix[{body}]"


def permutation_sign(perm: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones."""
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def _signed_permutations(k: int) -> List[Tuple[Tuple[int, ...], int]]:
    return [(perm, permutation_sign(perm)) for perm in itertools.permutations(range(k))]


def det(m: SquareMatrix) -> RingElement:
    """Leibniz determinant over the commutative ring (k <= 6)."""
    if m.k > DET_MAX_SIZE:
        raise MatrixSizeError(f"determinant limited to {DET_MAX_SIZE}x{DET_MAX_SIZE}, got {m.k}")
    value = det_batch(m.ring, m.index_array()[None, :, :])[0]
    return RingElement(int(value), m.ring)


def det_batch(ring: RingSpec, mats: np.ndarray) -> np.ndarray:
    """Leibniz determinants of a stack of index matrices of shape (N, k, k)."""
    mats = np.asarray(mats, dtype=np.int64)
    k = mats.shape[1]
    if k > DET_MAX_SIZE:
        raise MatrixSizeError(f"determinant limited to {DET_MAX_SIZE}x{DET_MAX_SIZE}, got {k}")
    positive = np.zeros(mats.shape[0], dtype=np.int64)
    negative = np.zeros(mats.shape[0], dtype=np.int64)
    for perm, sign in _signed_permutations(k):
        term = mats[:, 0, perm[0]]
        for i in range(1, k):
            term = ring.vmul(term, mats[:, i, perm[i]])
        if sign > 0:
            positive = ring.vadd(positive, term)
        else:
            negative = ring.vadd(negative, term)
    return np.asarray(ring.vsub(positive, negative), dtype=np.int64)


def permanent(m: SquareMatrix) -> RingElement:
    """Ryser inclusion-exclusion permanent (k <= 8).

    Per(M) = (-1)^k * sum over nonempty S of (-1)^|S| prod_i sum_{j in S} a_ij

    Column subsets are visited in Gray-code order, so each step adds or
    removes one column from the running row sums.
    """
    k = m.k
    if k > PERMANENT_MAX_SIZE:
        raise MatrixSizeError(f"permanent limited to {PERMANENT_MAX_SIZE}x{PERMANENT_MAX_SIZE}, got {k}")
    ring = m.ring
    a = m.index_array()
    row_sums = np.zeros(k, dtype=np.int64)
    even, odd = 0, 0
    gray, size = 0, 0
    for step in range(1, 1 << k):
        j = (step & -step).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            row_sums = np.asarray(ring.vadd(row_sums, a[:, j]), dtype=np.int64)
            size += 1
        else:
            row_sums = np.asarray(ring.vsub(row_sums, a[:, j]), dtype=np.int64)
            size -= 1
        product = 1
        for value in row_sums.tolist():
            product = ring.vmul(product, value)
        if (k - size) % 2 == 0:
            even = ring.vadd(even, product)
        else:
            odd = ring.vadd(odd, product)
    return RingElement(int(ring.vsub(even, odd)), ring)


def permanent_leibniz(m: SquareMatrix) -> RingElement:
    """Naive k!-term permanent, kept as an independent oracle."""
    if m.k > PERMANENT_MAX_SIZE:
        raise MatrixSizeError(f"permanent limited to {PERMANENT_MAX_SIZE}x{PERMANENT_MAX_SIZE}, got {m.k}")
    total = m.ring.zero
    for perm in itertools.permutations(range(m.k)):
        term = m.ring.one
        for i, j in enumerate(perm):
            term = term * m.entries[i][j]
        total = total + term
    return total
