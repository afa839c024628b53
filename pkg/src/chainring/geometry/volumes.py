"""
Pinned areas in R^2 and pinned volumes in R^d.

The volume of the simplex (x^0, ..., x^d) is the determinant of the
(d+1) x (d+1) matrix whose first row is all ones and whose columns below
are the points. V_d^z(E) collects the volumes of simplices with one vertex
at z and the others in E.
"""

import logging
from typing import List, Optional, Set, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..errors import GuardExceeded, NoUnitCoordinate, PreconditionViolation
from ..counting.pointsets import PointSet
from ..linalg.matrices import SquareMatrix, det, det_batch
from ..linalg.vectors import PointVec
from ..ring.core import RingElement, RingSpec
from .lines import incidence_matrix, pinned_point, rich_line_array

logger = logging.getLogger(__name__)

VOLUME_LIMIT = 200_000_000
CHUNK = 200_000


def _signed(ring: RingSpec, values: np.ndarray, d: int) -> np.ndarray:
    # ones-row determinant = (-1)^d det(x^1 - z, ..., x^d - z)
    return np.asarray(ring.vneg(values) if d % 2 else values, dtype=np.int64)


def volume_matrix(points: List[PointVec]) -> SquareMatrix:
    """Ones row on top, one column per point."""
    ring = points[0].ring
    d = points[0].d
    rows = [[ring.one] * len(points)] + [[pt.coords[i] for pt in points] for i in range(d)]
    return SquareMatrix(rows)


def simplex_volume(points: List[PointVec]) -> RingElement:
    if len(points) != points[0].d + 1:
        raise PreconditionViolation(f"a simplex in R^{points[0].d} has {points[0].d + 1} vertices")
    return det(volume_matrix(points))


def pinned_values(e: PointSet, z: PointVec, early_exit: bool = True) -> Set[int]:
    """V_d^z(E) by brute force over d-tuples of E; stops once every value of R is seen."""
    ring, d = e.ring, e.d
    size = len(e)
    if size ** d > VOLUME_LIMIT:
        raise GuardExceeded(f"pinned volumes in R^{d}", size ** d, VOLUME_LIMIT)
    if not size:
        return set()
    diffs = np.asarray(ring.vsub(e.rows, np.asarray(z.indices, dtype=np.int64)[None, :]), dtype=np.int64)
    seen = np.zeros(ring.order, dtype=bool)
    tail = np.indices((size,) * (d - 1), dtype=np.int64).reshape(d - 1, -1).T if d > 1 else None
    for first in range(size):
        if tail is None:
            cols = np.asarray([[first]], dtype=np.int64)
        else:
            cols = np.concatenate([np.full((tail.shape[0], 1), first, dtype=np.int64), tail], axis=1)
        for start in range(0, cols.shape[0], CHUNK):
            block = cols[start:start + CHUNK]
            # matrix columns are the translated points
            mats = np.transpose(diffs[block], (0, 2, 1))
            seen[_signed(ring, det_batch(ring, mats), d)] = True
        if early_exit and seen.all():
            break
    return set(np.flatnonzero(seen).tolist())


def all_volumes(e: PointSet, early_exit: bool = True) -> Set[int]:
    """V_d(E): union of the pinned sets over every vertex of E."""
    values: Set[int] = set()
    for z in e.points:
        values |= pinned_values(e, z, early_exit)
        if early_exit and len(values) == e.ring.order:
            break
    return values


# ----------------------------------------------------------------------
# Pinned areas


class PinnedAreasReport(BaseModel):
    """Direct V_2^z(E) and the one-point-per-rich-line construction F . G."""
    z: str = Field(..., description="Pin in text form")
    values: List[int] = Field(..., description="V_2^z(E), canonical indices")
    size: int = Field(..., description="|V_2^z(E)|")
    rich_lines_through_z: int = Field(..., description="Rich lines through z")
    selected: int = Field(..., description="|F|: points kept, one per rich line")
    skipped_lines: int = Field(..., description="Rich lines with no point private to them")
    constructive_values: List[int] = Field(..., description="F . G, canonical indices")
    selection_valid: bool = Field(..., description="No two selected points share a rich line through z")
    constructive_subset: bool = Field(..., description="F . G is contained in V_2^z(E)")

    @property
    def passed(self) -> bool:
        return self.selection_valid and self.constructive_subset


def pinned_areas(e: PointSet, z: PointVec) -> PinnedAreasReport:
    """{det(x - z, y - z) : x, y in E} and the constructive subset F . G.

    Raises:
        PreconditionViolation: If z is not in E
    """
    if e.d != 2:
        raise PreconditionViolation("pinned areas are defined in R^2")
    if z not in e:
        raise PreconditionViolation(f"{z.to_text()} is not in E")
    ring = e.ring
    direct = pinned_values(e, z, early_exit=False)

    moved = e.translate(-z)
    origin = np.zeros(2, dtype=np.int64)
    rich = rich_line_array(moved)
    through = rich[incidence_matrix(ring, rich, origin[None, :])[:, 0]]
    on_line = incidence_matrix(ring, through, moved.rows)
    nonzero = np.any(moved.rows != 0, axis=1)
    private = on_line & (on_line.sum(axis=0) == 1)[None, :] & nonzero[None, :]

    chosen: List[int] = []
    skipped = 0
    for row in private:
        candidates = np.flatnonzero(row)
        if candidates.size:
            chosen.append(int(candidates[0]))
        else:
            skipped += 1
    f = moved.subset(chosen)
    g = moved.rotate()
    constructive: Set[int] = set()
    if len(f) and len(g):
        constructive = set(np.unique(ring.vdot(f.rows, g.rows)).tolist())
    valid = bool(np.all(on_line[:, chosen].sum(axis=0) <= 1)) if chosen else True
    if skipped:
        logger.debug(f"pinned areas at {z.to_text()}: skipped {skipped} rich lines without a private point")
    return PinnedAreasReport(
        z=z.to_text(),
        values=sorted(direct),
        size=len(direct),
        rich_lines_through_z=through.shape[0],
        selected=len(chosen),
        skipped_lines=skipped,
        constructive_values=sorted(constructive),
        selection_valid=valid,
        constructive_subset=constructive <= direct,
    )


class OriginAreasReport(BaseModel):
    """{det(x, y) : x, y in E} read as the dot products E . E' with E' = {(y, -x)}."""
    values: List[int] = Field(..., description="Attained determinants")
    size: int = Field(..., description="Number of attained determinants")
    size_threshold: float = Field(..., description="q^(2r - 1/2)")
    regime: bool = Field(..., description="|E|^2 > q^(4r-1), where every unit must appear")
    passed: bool = Field(..., serialization_alias="pass", description="All units attained whenever in regime")


def origin_areas(e: PointSet) -> OriginAreasReport:
    ring = e.ring
    if e.d != 2:
        raise PreconditionViolation("areas are defined in R^2")
    values: Set[int] = set()
    if len(e):
        swapped = np.stack([e.rows[:, 1], ring.vneg(e.rows[:, 0])], axis=1)
        values = set(np.unique(ring.vdot(e.rows, swapped)).tolist())
    regime = len(e) ** 2 > ring.q ** (4 * ring.r - 1)
    units = set(ring.unit_indices().tolist())
    return OriginAreasReport(
        values=sorted(values),
        size=len(values),
        size_threshold=ring.q ** (2 * ring.r - 0.5),
        regime=regime,
        passed=(not regime) or units <= values,
    )


# ----------------------------------------------------------------------
# Pinned volumes by induction on d


class PinnedVolumesReport(BaseModel):
    z: str = Field(..., description="Pin in text form (original coordinates)")
    d: int = Field(..., description="Dimension")
    slice_value: Optional[int] = Field(default=None, description="t of the richest slice x_d = t")
    slice_size: Optional[int] = Field(default=None, description="|E ∩ H_t|")
    inductive_values: List[int] = Field(..., description="Values produced by the induction")
    direct_values: List[int] = Field(..., description="V_d^z(E) by brute force")
    size_threshold: float = Field(..., description="8 q^(r-1) q^(r(d-1))")
    guarantee: bool = Field(..., description="|E| >= size_threshold")

    @property
    def subset_holds(self) -> bool:
        return set(self.inductive_values) <= set(self.direct_values)

    @property
    def passed(self) -> bool:
        return self.subset_holds


def volume_threshold(ring: RingSpec, d: int) -> int:
    """8 q^(r-1) q^(r(d-1)): the size from which a pin with every value is guaranteed."""
    return 8 * ring.q ** (ring.r - 1) * ring.q ** (ring.r * (d - 1))


def richest_slice(e: PointSet) -> Tuple[int, PointSet]:
    """(t, E ∩ {x_d = t}) with the most points; ties go to the lowest t."""
    counts = np.bincount(e.rows[:, -1], minlength=e.ring.order)
    t = int(np.argmax(counts))
    return t, PointSet(e.ring, e.d, e.rows[e.rows[:, -1] == t])


def _inductive(e: PointSet) -> Tuple[PointVec, Set[int], Optional[int], Optional[int]]:
    """(pin, values) in the coordinates of E."""
    ring, d = e.ring, e.d
    if d == 2:
        z = PointVec.from_indices(ring, e.rows[pinned_point(e).z_index])
        # constructive F . G at the richest pin
        return z, set(pinned_areas(e, z).constructive_values), None, None

    t, layer = richest_slice(e)
    shift = np.zeros(d, dtype=np.int64)
    shift[-1] = t
    moved_rows = np.asarray(ring.vsub(e.rows, shift[None, :]), dtype=np.int64)
    units = ring.is_unit_array(moved_rows[:, -1])
    if not units.any():
        raise NoUnitCoordinate(f"no point with a unit last coordinate after moving x_{d} = {t} to 0")
    z = moved_rows[int(np.argmax(units))]

    projected = PointSet(ring, d - 1, layer.rows[:, :-1])
    _, lower, _, _ = _inductive(projected)
    # expanding the lifted determinant along the last row leaves z_d times the slice volume
    values = np.asarray(ring.vmul(int(z[-1]), np.asarray(sorted(lower), dtype=np.int64)), dtype=np.int64)
    pin = np.asarray(ring.vadd(z, shift), dtype=np.int64)
    return PointVec.from_indices(ring, pin), set(values.tolist()), t, len(layer)


def pinned_volumes(e: PointSet) -> PinnedVolumesReport:
    """Pinned volumes through the slicing induction, cross-checked by brute force.

    Raises:
        NoUnitCoordinate: If no point has a unit last coordinate once the
            richest slice is moved to x_d = 0
        PreconditionViolation: If E is empty or d < 2
    """
    if e.d < 2:
        raise PreconditionViolation("volumes need d >= 2")
    if not len(e):
        raise PreconditionViolation("pinned volumes of an empty set")
    ring, d = e.ring, e.d
    z, values, t, layer = _inductive(e)
    direct = pinned_values(e, z, early_exit=False) if d == 2 else _pinned_checked(e, z, values)
    threshold = volume_threshold(ring, d)
    return PinnedVolumesReport(
        z=z.to_text(),
        d=d,
        slice_value=t,
        slice_size=layer,
        inductive_values=sorted(values),
        direct_values=sorted(direct),
        size_threshold=threshold,
        guarantee=len(e) >= threshold,
    )


def _pinned_checked(e: PointSet, z: PointVec, expected: Set[int]) -> Set[int]:
    direct = pinned_values(e, z, early_exit=True)
    if not expected <= direct:
        logger.warning(f"inductive volumes at {z.to_text()} not found by brute force")
    return direct


def lifted_identity_holds(layer: List[PointVec], z: PointVec) -> bool:
    """det of the lifted (d+1)-matrix equals z_d times the slice determinant.

    ``layer`` holds d points with last coordinate zero; ``z`` has a unit last
    coordinate.
    """
    d = z.d
    if len(layer) != d or any(pt.coords[-1].index for pt in layer):
        raise PreconditionViolation(f"need {d} points on x_{d} = 0")
    if not z.coords[-1].is_unit:
        raise NoUnitCoordinate(f"z_{d} of {z.to_text()} is not a unit")
    full = simplex_volume(list(layer) + [z])
    slice_points = [PointVec(pt.coords[:-1]) for pt in layer]
    return full == z.coords[-1] * simplex_volume(slice_points)
