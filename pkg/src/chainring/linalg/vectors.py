"""
Vectors over R, dot products and projective classes of R^d minus (R^0)^d.
"""

import logging
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np
from typing_extensions import Literal, Self

from ..errors import DimensionMismatch, GuardExceeded, MixedRingError, NoUnitCoordinate
from ..ring.core import RingElement, RingSpec, inv

logger = logging.getLogger(__name__)

Constraint = Literal["none", "avoid_nonunit_cube", "units_only"]

UNIVERSE_LIMIT = 10_000_000


class PointVec:
    """A point of R^d."""

    __slots__ = ("coords", "ring")

    def __init__(self, coords: Sequence[RingElement]):
        coords = tuple(coords)
        if not coords:
            raise DimensionMismatch("a point needs at least one coordinate")
        ring = coords[0].ring
        for c in coords[1:]:
            if c.ring is not ring and c.ring != ring:
                raise MixedRingError("coordinates from different rings")
        self.coords: Tuple[RingElement, ...] = coords
        self.ring: RingSpec = ring

    @classmethod
    def from_indices(cls, ring: RingSpec, indices: Iterable[int]) -> "PointVec":
        return cls([RingElement(int(i), ring) for i in indices])

    @classmethod
    def from_text(cls, ring: RingSpec, text: str) -> "PointVec":
        """Parse ``(e1|e2|...)`` with elements in digit text form."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"malformed point '{text}'")
        return cls([ring.element_from_text(part) for part in body[1:-1].split("|")])

    @property
    def d(self) -> int:
        return len(self.coords)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(c.index for c in self.coords)

    def all_nonunit(self) -> bool:
        """True iff the point lies in (R^0)^d."""
        return not any(c.is_unit for c in self.coords)

    def scale(self, s: RingElement) -> Self:
        return type(self)([s * c for c in self.coords])

    def _check(self, other: "PointVec") -> None:
        if other.d != self.d:
            raise DimensionMismatch(f"dimensions {self.d} and {other.d}")

    def __add__(self, other: "PointVec") -> "PointVec":
        self._check(other)
        return PointVec([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "PointVec") -> "PointVec":
        self._check(other)
        return PointVec([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "PointVec":
        return PointVec([-a for a in self.coords])

    def __getitem__(self, i: int) -> RingElement:
        return self.coords[i]

    def __len__(self) -> int:
        return self.d

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointVec):
            return NotImplemented
        return self.indices == other.indices and self.ring == other.ring

    def __lt__(self, other: "PointVec") -> bool:
        return self.indices < other.indices

    def __hash__(self) -> int:
        return hash((self.indices, self.ring))

    def __repr__(self) -> str:
        return f"PointVec{self.to_text()}"

    def to_text(self) -> str:
        return "(" + "|".join(c.to_text() for c in self.coords) + ")"


class ProjClass:
    """Projective class [x] of a vector with at least one unit coordinate.

    The representative has its first unit coordinate equal to 1.
    """

    __slots__ = ("rep",)

    def __init__(self, rep: PointVec):
        self.rep = rep

    @property
    def d(self) -> int:
        return self.rep.d

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjClass):
            return NotImplemented
        return self.rep == other.rep

    def __lt__(self, other: "ProjClass") -> bool:
        return self.rep < other.rep

    def __hash__(self) -> int:
        return hash(("proj", self.rep))

    def __repr__(self) -> str:
        return f"ProjClass{self.to_text()}"

    def to_text(self) -> str:
        return "[" + "|".join(c.to_text() for c in self.rep.coords) + "]"


def dot(x: PointVec, y: PointVec) -> RingElement:
    """x_1 y_1 + ... + x_d y_d."""
    if x.d != y.d:
        raise DimensionMismatch(f"cannot dot vectors of dimension {x.d} and {y.d}")
    total = x.ring.zero
    for a, b in zip(x.coords, y.coords):
        total = total + a * b
    return total


def first_unit_position(x: PointVec) -> int:
    for i, c in enumerate(x.coords):
        if c.is_unit:
            return i
    raise NoUnitCoordinate(f"{x.to_text()} lies in (R^0)^{x.d}")


def proj_class(x: PointVec) -> ProjClass:
    """Canonical class of x: scale so the first unit coordinate becomes 1."""
    pivot = first_unit_position(x)
    return ProjClass(x.scale(inv(x.coords[pivot])))


def line_through_origin(x: PointVec) -> FrozenSet[PointVec]:
    """The orbit l_x = {s x : s in R^*}."""
    first_unit_position(x)
    ring = x.ring
    arr = np.asarray(x.indices, dtype=np.int64)
    units = ring.unit_indices()
    scaled = np.asarray(ring.vmul(units[:, None], arr[None, :]), dtype=np.int64)
    return frozenset(PointVec.from_indices(ring, row) for row in scaled.tolist())


# ----------------------------------------------------------------------
# Vectorized helpers over index arrays of shape (m, d)


def encode_rows(ring: RingSpec, rows: np.ndarray) -> np.ndarray:
    """Integer code of each row, first coordinate most significant.

    Codes increase with the lexicographic (canonical) order of index tuples.
    """
    rows = np.asarray(rows, dtype=np.int64)
    codes = np.zeros(rows.shape[0], dtype=np.int64)
    for k in range(rows.shape[1]):
        codes = codes * ring.order + rows[:, k]
    return codes


def vector_universe(ring: RingSpec, d: int, constraint: Constraint = "none") -> np.ndarray:
    """All vectors of R^d satisfying the constraint, in canonical order, as an (m, d) array."""
    size = ring.order ** d
    if size > UNIVERSE_LIMIT:
        raise GuardExceeded(f"R^{d} over {ring.descriptor}", size, UNIVERSE_LIMIT)
    grids = np.indices((ring.order,) * d, dtype=np.int64).reshape(d, -1).T
    if constraint == "none":
        return grids
    unit = ring.is_unit_array(grids)
    if constraint == "avoid_nonunit_cube":
        return grids[unit.any(axis=1)]
    if constraint == "units_only":
        return grids[unit.all(axis=1)]
    raise ValueError(f"unknown constraint '{constraint}'")


def canonical_rows(ring: RingSpec, rows: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Projective representatives of each row.

    Returns:
        (canonical rows, mask of rows that have a unit coordinate); rows in
        (R^0)^d are returned unchanged with mask False
    """
    rows = np.asarray(rows, dtype=np.int64)
    unit = ring.is_unit_array(rows)
    valid = unit.any(axis=1)
    pivot = np.argmax(unit, axis=1)
    pivots = rows[np.arange(rows.shape[0]), pivot]
    scale = np.where(valid, ring.vinv(pivots), 1)
    canon = np.asarray(ring.vmul(scale[:, None], rows), dtype=np.int64)
    return canon, valid


def proj_class_array(ring: RingSpec, d: int) -> np.ndarray:
    """Canonical representatives of all projective classes of R^d, in canonical order."""
    vectors = vector_universe(ring, d, "avoid_nonunit_cube")
    unit = ring.is_unit_array(vectors)
    pivot = np.argmax(unit, axis=1)
    is_rep = vectors[np.arange(vectors.shape[0]), pivot] == 1
    reps = vectors[is_rep]
    logger.debug(f"{reps.shape[0]} projective classes in R^{d} over {ring.descriptor}")
    return reps


def enumerate_proj_classes(ring: RingSpec, d: int) -> List[ProjClass]:
    """All projective classes of R^d minus (R^0)^d."""
    return [ProjClass(PointVec.from_indices(ring, row)) for row in proj_class_array(ring, d).tolist()]


def proj_class_count(q: int, r: int, d: int) -> int:
    """q^((d-1)(r-1)) (q^d - 1)/(q - 1)."""
    return q ** ((d - 1) * (r - 1)) * (q ** d - 1) // (q - 1)
