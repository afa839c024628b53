"""
Finite point sets in R^d, stored as sorted integer index rows.
"""

from typing import Iterable, List, Optional

import numpy as np

from ..errors import DimensionMismatch, PreconditionViolation
from ..linalg.vectors import PointVec, encode_rows
from ..ring.core import RingSpec


class PointSet:
    """A set of points of R^d without duplicates.

    Points are kept as an (m, d) int64 array in canonical (lexicographic)
    order; ``points`` materializes PointVec objects on demand.
    """

    __slots__ = ("ring", "d", "rows")

    def __init__(self, ring: RingSpec, d: int, rows: Optional[np.ndarray] = None):
        if d < 1:
            raise DimensionMismatch("dimension must be positive")
        if rows is None:
            rows = np.zeros((0, d), dtype=np.int64)
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, d)
        if rows.size and (rows.min() < 0 or rows.max() >= ring.order):
            raise ValueError(f"indices outside [0, {ring.order})")
        if rows.shape[0]:
            # unique codes come back sorted, so rows end up in canonical order
            _, first = np.unique(encode_rows(ring, rows), return_index=True)
            rows = rows[first]
        rows = np.array(rows, dtype=np.int64)
        rows.setflags(write=False)
        self.ring = ring
        self.d = d
        self.rows = rows

    @classmethod
    def from_points(cls, points: Iterable[PointVec], ring: Optional[RingSpec] = None, d: Optional[int] = None) -> "PointSet":
        pts = list(points)
        if not pts:
            if ring is None or d is None:
                raise ValueError("ring and d are required for an empty point set")
            return cls(ring, d)
        ring = ring or pts[0].ring
        d = d or pts[0].d
        for pt in pts:
            if pt.d != d:
                raise DimensionMismatch(f"point {pt.to_text()} is not in R^{d}")
        return cls(ring, d, np.array([pt.indices for pt in pts], dtype=np.int64))

    @classmethod
    def from_ints(cls, ring: RingSpec, rows: Iterable[Iterable[int]], d: Optional[int] = None) -> "PointSet":
        """Points from integer coordinates embedded through Z -> R."""
        data = [[int(ring(int(v)).index) for v in row] for row in rows]
        if d is None:
            if not data:
                raise ValueError("d is required for an empty point set")
            d = len(data[0])
        return cls(ring, d, np.array(data, dtype=np.int64).reshape(-1, d))

    def __len__(self) -> int:
        return self.rows.shape[0]

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, pt: PointVec) -> bool:
        return self.index_of(pt) is not None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.ring == other.ring and self.d == other.d and np.array_equal(self.rows, other.rows)

    def __repr__(self) -> str:
        return f"PointSet({len(self)} points in R^{self.d} over {self.ring.descriptor})"

    @property
    def points(self) -> List[PointVec]:
        return [PointVec.from_indices(self.ring, row) for row in self.rows.tolist()]

    @property
    def codes(self) -> np.ndarray:
        return encode_rows(self.ring, self.rows)

    def index_of(self, pt: PointVec) -> Optional[int]:
        if pt.d != self.d or not len(self):
            return None
        code = int(encode_rows(self.ring, np.asarray([pt.indices]))[0])
        pos = int(np.searchsorted(self.codes, code))
        if pos < len(self) and int(self.codes[pos]) == code:
            return pos
        return None

    def nonunit_mask(self) -> np.ndarray:
        """True for rows lying in (R^0)^d."""
        return ~self.ring.is_unit_array(self.rows).any(axis=1)

    def avoids_nonunit_cube(self) -> bool:
        return not bool(self.nonunit_mask().any())

    def require_unit_coordinates(self, what: str = "set") -> None:
        """Raise unless no point lies in (R^0)^d."""
        mask = self.nonunit_mask()
        if mask.any():
            bad = PointVec.from_indices(self.ring, self.rows[np.argmax(mask)])
            raise PreconditionViolation(f"{what} meets (R^0)^{self.d} at {bad.to_text()}")

    def translate(self, v: PointVec) -> "PointSet":
        shift = np.asarray(v.indices, dtype=np.int64)
        return PointSet(self.ring, self.d, self.ring.vadd(self.rows, shift[None, :]))

    def rotate(self) -> "PointSet":
        """(p1, p2) -> (-p2, p1) in R^2."""
        if self.d != 2:
            raise DimensionMismatch("rotation is defined in R^2 only")
        rotated = np.stack([self.ring.vneg(self.rows[:, 1]), self.rows[:, 0]], axis=1)
        return PointSet(self.ring, 2, rotated)

    def subset(self, positions: Iterable[int]) -> "PointSet":
        return PointSet(self.ring, self.d, self.rows[np.asarray(list(positions), dtype=np.int64)])
