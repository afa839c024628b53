"""
Lines a x + b y + c = 0 in R^2, incidences and rich lines.
"""

import logging
import math
from typing import Iterable, List, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field
from typing_extensions import Literal

from ..core.models import TOLERANCE, BoundCheck
from ..errors import DimensionMismatch, NoUnitCoordinate, PreconditionViolation
from ..graphs.builders import er_edges_between
from ..linalg.vectors import PointVec, canonical_rows, encode_rows
from ..counting.pointsets import PointSet
from ..ring.core import RingElement, RingSpec

logger = logging.getLogger(__name__)

LineKind = Literal["general", "graph"]


class Line:
    """Projective class of coefficients (a, b, c) with a unit among them."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingSpec, coeffs: Sequence[int]):
        row = np.asarray(coeffs, dtype=np.int64).reshape(1, 3)
        canon, valid = canonical_rows(ring, row)
        if not valid[0]:
            raise NoUnitCoordinate(f"coefficients {tuple(int(c) for c in row[0])} lie in (R^0)^3")
        self.ring = ring
        self.coeffs = tuple(int(c) for c in canon[0])

    @classmethod
    def graph(cls, slope: RingElement, intercept: RingElement) -> "Line":
        """The line y = slope * x + intercept."""
        ring = slope.ring
        return cls(ring, (slope.index, int(ring.vneg(1)), intercept.index))

    @property
    def kind(self) -> LineKind:
        return "graph" if self.coeffs[1] % self.ring.q else "general"

    def contains(self, pt: PointVec) -> bool:
        if pt.d != 2:
            raise DimensionMismatch("lines live in R^2")
        a, b, c = self.coeffs
        x, y = pt.indices
        ring = self.ring
        return int(ring.vadd(ring.vadd(ring.vmul(a, x), ring.vmul(b, y)), c)) == 0

    def point_rows(self) -> np.ndarray:
        """All points of the line, canonical order."""
        idx = self.ring.all_indices()
        plane = np.stack(np.meshgrid(idx, idx, indexing="ij"), axis=-1).reshape(-1, 2)
        return plane[incidence_matrix(self.ring, np.asarray([self.coeffs]), plane)[0]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Line):
            return NotImplemented
        return self.coeffs == other.coeffs and self.ring == other.ring

    def __lt__(self, other: "Line") -> bool:
        return self.coeffs < other.coeffs

    def __hash__(self) -> int:
        return hash(("line", self.coeffs, self.ring))

    def __repr__(self) -> str:
        return f"Line{self.to_text()}"

    def to_text(self) -> str:
        return "[" + "|".join(self.ring.element(c).to_text() for c in self.coeffs) + "]"


LineLike = Union[Sequence[Line], np.ndarray]


def line_array(ring: RingSpec, lines: LineLike) -> np.ndarray:
    """Distinct line classes as canonical coefficient rows, sorted.

    Raises:
        NoUnitCoordinate: If a row has no unit coefficient
    """
    if isinstance(lines, np.ndarray):
        rows = lines.reshape(-1, 3).astype(np.int64)
    elif not lines:
        rows = np.zeros((0, 3), dtype=np.int64)
    else:
        rows = np.asarray([ln.coeffs for ln in lines], dtype=np.int64)
    if not rows.shape[0]:
        return rows
    canon, valid = canonical_rows(ring, rows)
    if not valid.all():
        bad = rows[int(np.argmin(valid))].tolist()
        raise NoUnitCoordinate(f"line coefficients {bad} have no unit")
    return np.unique(canon, axis=0)


def homogeneous(ring: RingSpec, rows: np.ndarray) -> np.ndarray:
    """(x, y) -> (x, y, 1)."""
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, 2)
    return np.concatenate([rows, np.ones((rows.shape[0], 1), dtype=np.int64)], axis=1)


def incidence_matrix(ring: RingSpec, coeffs: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Boolean (lines x points) matrix of a x + b y + c = 0."""
    coeffs = np.asarray(coeffs, dtype=np.int64).reshape(-1, 3)
    if not coeffs.shape[0] or not len(points):
        return np.zeros((coeffs.shape[0], len(points)), dtype=bool)
    return ring.vdot(coeffs, homogeneous(ring, points)) == 0


def graph_line_array(ring: RingSpec) -> np.ndarray:
    """Canonical coefficients of the q^(2r) lines y = a x + b, sorted."""
    idx = ring.all_indices()
    slopes, intercepts = np.meshgrid(idx, idx, indexing="ij")
    minus_one = np.full(slopes.size, int(ring.vneg(1)), dtype=np.int64)
    rows = np.stack([slopes.ravel(), minus_one, intercepts.ravel()], axis=1)
    canon, _ = canonical_rows(ring, rows)
    return canon[np.argsort(encode_rows(ring, canon), kind="stable")]


def enumerate_graph_lines(ring: RingSpec) -> List[Line]:
    """All lines of the form y = a x + b, in canonical order."""
    return [Line(ring, row) for row in graph_line_array(ring).tolist()]


# ----------------------------------------------------------------------
# Incidences


class IncidenceReport(BoundCheck):
    """I(E, L) against |E||L|/q^r within q^((2r-1)/2) sqrt(|E||L|)."""
    size_points: int = Field(..., description="|E|")
    size_lines: int = Field(..., description="|L|")


def incidences(e: PointSet, lines: LineLike) -> IncidenceReport:
    if e.d != 2:
        raise DimensionMismatch("incidences are counted in R^2")
    ring = e.ring
    coeffs = line_array(ring, lines)
    observed = int(np.count_nonzero(incidence_matrix(ring, coeffs, e.rows)))
    product = len(e) * coeffs.shape[0]
    main = product / ring.order
    bound = ring.q ** ((2 * ring.r - 1) / 2) * math.sqrt(product)
    return IncidenceReport(
        observed=observed,
        main_term=main,
        bound=bound,
        passed=abs(observed - main) <= bound + TOLERANCE,
        size_points=len(e),
        size_lines=coeffs.shape[0],
    )


def duality_count(e: PointSet, lines: LineLike) -> int:
    """Edges between {[x, y, 1]} and the line classes in the Erdős–Rényi graph over R^3."""
    ring = e.ring
    return er_edges_between(ring, 3, homogeneous(ring, e.rows), line_array(ring, lines))


# ----------------------------------------------------------------------
# Rich lines and the pinned point


def rich_threshold(ring: RingSpec) -> int:
    """q^(r-1) + 1: more points than two distinct lines can share."""
    return ring.q ** (ring.r - 1) + 1


def _line_masses(e: PointSet, coeffs: np.ndarray) -> np.ndarray:
    return incidence_matrix(e.ring, coeffs, e.rows).sum(axis=1)


class RichLinesReport(BaseModel):
    lines: List[str] = Field(..., description="Rich lines in text form")
    count: int = Field(..., description="Number of rich lines")
    threshold: int = Field(..., description="Points a line needs to be rich")
    required: float = Field(..., description="q^(2r)/4")
    guarantee: bool = Field(..., description="|E| >= 3 q^(2r-1)")
    passed: bool = Field(..., serialization_alias="pass", description="count >= required whenever guaranteed")


def rich_line_array(e: PointSet, threshold: Optional[int] = None) -> np.ndarray:
    coeffs = graph_line_array(e.ring)
    if not len(e):
        return coeffs[:0]
    limit = rich_threshold(e.ring) if threshold is None else threshold
    return coeffs[_line_masses(e, coeffs) >= limit]


def rich_lines(e: PointSet, threshold: Optional[int] = None) -> RichLinesReport:
    """Graph lines carrying at least ``threshold`` points of E."""
    if e.d != 2:
        raise DimensionMismatch("rich lines live in R^2")
    ring = e.ring
    limit = rich_threshold(ring) if threshold is None else threshold
    rich = rich_line_array(e, limit)
    required = ring.order ** 2 / 4
    guarantee = len(e) >= 3 * ring.q ** (2 * ring.r - 1)
    return RichLinesReport(
        lines=[Line(ring, row).to_text() for row in rich.tolist()],
        count=rich.shape[0],
        threshold=limit,
        required=required,
        guarantee=guarantee,
        passed=(not guarantee) or rich.shape[0] + TOLERANCE >= required,
    )


class PinnedPointReport(BaseModel):
    z: str = Field(..., description="Chosen point in text form")
    z_index: int = Field(..., description="Position of z in E")
    rich_line_count: int = Field(..., description="Rich lines through z")
    required: float = Field(..., description="q^r/8")
    guarantee: bool = Field(..., description="|E| >= 8 q^(2r-1)")
    passed: bool = Field(..., serialization_alias="pass", description="count >= required whenever guaranteed")


def pinned_point(e: PointSet) -> PinnedPointReport:
    """Point of E on the most rich lines; ties go to the lowest canonical point.

    Raises:
        PreconditionViolation: If E is empty
    """
    if not len(e):
        raise PreconditionViolation("pinned point of an empty set")
    ring = e.ring
    rich = rich_line_array(e)
    through = incidence_matrix(ring, rich, e.rows).sum(axis=0)
    best = int(np.argmax(through)) if through.size else 0
    count = int(through[best]) if through.size else 0
    required = ring.order / 8
    guarantee = len(e) >= 8 * ring.q ** (2 * ring.r - 1)
    return PinnedPointReport(
        z=PointVec.from_indices(ring, e.rows[best]).to_text(),
        z_index=best,
        rich_line_count=count,
        required=required,
        guarantee=guarantee,
        passed=(not guarantee) or count + TOLERANCE >= required,
    )


def lines_from_text(ring: RingSpec, texts: Iterable[str]) -> List[Line]:
    """Parse ``[a|b|c]`` forms."""
    lines = []
    for text in texts:
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"malformed line '{text}'")
        parts = [ring.element_from_text(s).index for s in body[1:-1].split("|")]
        if len(parts) != 3:
            raise ValueError(f"a line needs three coefficients: '{text}'")
        lines.append(Line(ring, parts))
    return lines
