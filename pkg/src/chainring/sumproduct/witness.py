"""
Monochromatic sum-product witnesses: x, y units with x + y in X1 and x y in X2.

The spectral path writes x = x1/2 - z, y = x1/2 + z, which turns the problem
into (x1/2)^2 - x2 = z^2, and looks for edges between two vertex sets of
the Erdős–Rényi graph over R^3:

    U = {[a3, 1, a1]},  V = {[-a4, a2, 1]},  edge iff a1 + a2 = a3 a4

with a1 = (x1/2)^2, a2 = -x2 and a3, a4 unit squares. Solutions with z in
R^0 are picked up by a residual layer with a3 = z^2 (z non-unit), a4 = 1.
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.models import TOLERANCE
from ..core.sampling import random_subset, trial_generators
from ..errors import PreconditionViolation
from ..graphs.builders import er_degree, er_edges_between, er_part_size, er_third_eigenvalue
from ..linalg.vectors import canonical_rows, encode_rows
from ..ring.core import RingSpec

logger = logging.getLogger(__name__)

Witness = Tuple[int, int]


class UnitSetPair(BaseModel):
    """Two sets of units X1, X2."""
    model_config = ConfigDict(frozen=True)

    ring: RingSpec = Field(..., description="Ambient ring")
    x1: Tuple[int, ...] = Field(..., description="X1, canonical indices of units")
    x2: Tuple[int, ...] = Field(..., description="X2, canonical indices of units")

    @field_validator("x1", "x2")
    @classmethod
    def _sorted(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(sorted(set(v)))

    @model_validator(mode="after")
    def _units_only(self) -> "UnitSetPair":
        for name in ("x1", "x2"):
            for v in getattr(self, name):
                if not 0 <= v < self.ring.order or v % self.ring.q == 0:
                    raise ValueError(f"{name} contains {v}, which is not a unit of {self.ring.descriptor}")
        return self

    @property
    def product(self) -> int:
        return len(self.x1) * len(self.x2)

    @property
    def threshold(self) -> float:
        return sumproduct_threshold(self.ring)

    @property
    def meets_threshold(self) -> bool:
        return self.product > self.threshold


def sumproduct_threshold(ring: RingSpec) -> float:
    """q^(4r-1) / (q^r - q^(r-1))^2."""
    return ring.q ** (4 * ring.r - 1) / ring.unit_count ** 2


def make_pair(ring: RingSpec, x1: Sequence[int], x2: Sequence[int]) -> UnitSetPair:
    """Build a pair, turning invalid members into PreconditionViolation."""
    try:
        return UnitSetPair(ring=ring, x1=tuple(int(v) for v in x1), x2=tuple(int(v) for v in x2))
    except ValueError as e:
        raise PreconditionViolation(str(e)) from e


def is_witness(pair: UnitSetPair, witness: Witness) -> bool:
    ring = pair.ring
    x, y = witness
    return (
        x % ring.q != 0
        and y % ring.q != 0
        and int(ring.vadd(x, y)) in pair.x1
        and int(ring.vmul(x, y)) in pair.x2
    )


def find_witness_direct(pair: UnitSetPair) -> Optional[Witness]:
    """First (x, y) in canonical scan order over R^* x R^*, or None."""
    ring = pair.ring
    units = ring.unit_indices()
    sums = ring.vadd(units[:, None], units[None, :])
    products = ring.vmul(units[:, None], units[None, :])
    hits = np.isin(sums, pair.x1) & np.isin(products, pair.x2)
    if not hits.any():
        return None
    i, j = np.unravel_index(int(np.argmax(hits)), hits.shape)
    return int(units[i]), int(units[j])


# ----------------------------------------------------------------------
# Spectral path


class SpectralWitnessReport(BaseModel):
    witness: Optional[Tuple[int, int]] = Field(default=None, description="Reconstructed (x, y)")
    witness_valid: bool = Field(default=True, description="Witness satisfies both memberships")
    edges: int = Field(..., description="e(U, V) in the unit-square layer")
    residual_edges: int = Field(..., description="Edges of the layer with z in R^0")
    size_a1: int = Field(..., description="|A1| = |{(x1/2)^2}|")
    size_a2: int = Field(..., description="|A2| = |X2|")
    size_a3: int = Field(..., description="|A3| = |{z^2 : z unit}|")
    size_a4: int = Field(..., description="|A4| = |A3|")
    collapsed: int = Field(..., description="Vertex tuples that fell into an already used class")
    displayed_lower: float = Field(..., description="|A1||A2||A3||A4|/q^r - q^((2r-1)/2) sqrt(...)")
    displayed_passed: bool = Field(..., description="edges >= displayed_lower")
    mixing_lower: float = Field(..., description="a|U||V|/|B| - lambda_3 sqrt(|U||V|) in the graph itself")
    mixing_passed: bool = Field(..., description="edges >= mixing_lower")
    squares_passed: bool = Field(..., description="|A1| >= |X1|/2 and |A3| >= |R^*|/2")

    @property
    def found(self) -> bool:
        return self.witness is not None

    @property
    def passed(self) -> bool:
        return self.witness_valid and self.displayed_passed and self.mixing_passed and self.squares_passed


def _squares(ring: RingSpec, values: np.ndarray) -> np.ndarray:
    return np.unique(np.asarray(ring.vmul(values, values), dtype=np.int64))


def _collapsed(ring: RingSpec, rows: np.ndarray) -> Tuple[int, int]:
    """(distinct classes among ``rows``, rows that fell into an already used class)."""
    if not rows.shape[0]:
        return 0, 0
    canon, _ = canonical_rows(ring, rows)
    distinct = np.unique(encode_rows(ring, canon)).size
    return distinct, int(rows.shape[0] - distinct)


def _layer_rows(ring: RingSpec, a3: np.ndarray, a1: np.ndarray, a4: np.ndarray, a2: np.ndarray):
    one = np.ones(1, dtype=np.int64)
    u = np.stack(np.meshgrid(a3, one, a1, indexing="ij"), axis=-1).reshape(-1, 3)
    minus_a4 = np.asarray(ring.vneg(a4), dtype=np.int64)
    v = np.stack(np.meshgrid(minus_a4, a2, one, indexing="ij"), axis=-1).reshape(-1, 3)
    return u, v


def _reconstruct(pair: UnitSetPair, targets: Sequence[int], a2: int) -> Optional[Witness]:
    """Witness from a1 + a2 = w with w in ``targets``; tries every x1 and root z."""
    ring = pair.ring
    half = int(ring.vinv(2))
    for x1 in pair.x1:
        mid = int(ring.vmul(x1, half))
        w = int(ring.vadd(ring.vmul(mid, mid), a2))
        if w not in targets:
            continue
        for z in ring.square_roots(w):
            witness = (int(ring.vsub(mid, z.index)), int(ring.vadd(mid, z.index)))
            if is_witness(pair, witness):
                return witness
    return None


def find_witness_spectral(pair: UnitSetPair) -> SpectralWitnessReport:
    """Edge count between U and V in the Erdős–Rényi graph over R^3, and a witness if any."""
    ring = pair.ring
    if ring.p == 2:
        raise PreconditionViolation("2 must be invertible")
    half = int(ring.vinv(2))

    x1 = np.asarray(pair.x1, dtype=np.int64)
    a1 = _squares(ring, np.asarray(ring.vmul(x1, half), dtype=np.int64))
    a2 = np.unique(np.asarray(ring.vneg(np.asarray(pair.x2, dtype=np.int64)), dtype=np.int64))
    a3 = _squares(ring, ring.unit_indices())
    a4 = a3
    residual = _squares(ring, ring.nonunit_indices())

    u, v = _layer_rows(ring, a3, a1, a4, a2)
    size_u, lost_u = _collapsed(ring, u)
    size_v, lost_v = _collapsed(ring, v)
    edges = er_edges_between(ring, 3, u, v)

    ru, rv = _layer_rows(ring, residual, a1, np.ones(1, dtype=np.int64), a2)
    residual_edges = er_edges_between(ring, 3, ru, rv)

    witness = None
    if edges or residual_edges:
        # every unit square is a3 a4 for some a3, a4, so the targets are the layer products
        targets = set(a3.tolist())
        if residual_edges:
            targets |= set(residual.tolist())
        for value in a2.tolist():
            witness = _reconstruct(pair, targets, value)
            if witness is not None:
                break

    product = float(a1.size * a2.size * a3.size * a4.size)
    displayed = product / ring.order - ring.q ** ((2 * ring.r - 1) / 2) * math.sqrt(product)
    sizes = float(size_u * size_v)
    mixing = er_degree(ring, 3) * sizes / er_part_size(ring, 3) - er_third_eigenvalue(ring, 3) * math.sqrt(sizes)
    report = SpectralWitnessReport(
        witness=witness,
        witness_valid=witness is None or is_witness(pair, witness),
        edges=edges,
        residual_edges=residual_edges,
        size_a1=a1.size,
        size_a2=a2.size,
        size_a3=a3.size,
        size_a4=a4.size,
        collapsed=lost_u + lost_v,
        displayed_lower=displayed,
        displayed_passed=edges + TOLERANCE >= displayed,
        mixing_lower=mixing,
        mixing_passed=edges + TOLERANCE >= mixing,
        squares_passed=2 * a1.size >= x1.size and 2 * a3.size >= ring.unit_count,
    )
    if (edges or residual_edges) and witness is None:
        logger.warning(f"edges found over {ring.descriptor} but no witness reconstructed")
    return report


# ----------------------------------------------------------------------
# Threshold sweep


class SweepPoint(BaseModel):
    size_x1: int = Field(..., description="|X1|")
    size_x2: int = Field(..., description="|X2|")
    trials: int = Field(..., description="Pairs drawn")
    found: int = Field(..., description="Pairs with a witness")
    rate: float = Field(..., description="found / trials")
    threshold: float = Field(..., description="q^(4r-1)/(q^r - q^(r-1))^2")
    meets_threshold: bool = Field(..., description="|X1||X2| exceeds the threshold")
    field_threshold: Optional[float] = Field(default=None, description="2q when r = 1")
    meets_field_threshold: bool = Field(default=False, description="|X1||X2| > 2q when r = 1")
    passed: bool = Field(..., serialization_alias="pass", description="rate = 1 whenever a threshold is met")


def threshold_sweep(
    ring: RingSpec,
    trials: int,
    sizes: Sequence[Tuple[int, int]],
    seed: int = 0,
) -> List[SweepPoint]:
    """Witness rates of seeded random unit-set pairs for each size pair."""
    units = ring.unit_indices()
    threshold = sumproduct_threshold(ring)
    field = 2.0 * ring.q if ring.r == 1 else None
    points = []
    for position, (s1, s2) in enumerate(sizes):
        if not (0 <= s1 <= units.size and 0 <= s2 <= units.size):
            raise PreconditionViolation(f"sizes ({s1}, {s2}) exceed |R^*| = {units.size}")
        found = 0
        for rng in trial_generators(seed, trials, stream=position):
            pair = make_pair(ring, random_subset(units, s1, rng), random_subset(units, s2, rng))
            witness = find_witness_direct(pair)
            if witness is not None:
                found += 1
        product = s1 * s2
        meets = product > threshold
        meets_field = field is not None and product > field
        rate = found / trials if trials else 1.0
        points.append(
            SweepPoint(
                size_x1=s1,
                size_x2=s2,
                trials=trials,
                found=found,
                rate=rate,
                threshold=threshold,
                meets_threshold=meets,
                field_threshold=field,
                meets_field_threshold=meets_field,
                passed=not (meets or meets_field) or found == trials,
            )
        )
        logger.debug(f"sumproduct sweep {s1}x{s2} over {ring.descriptor}: rate {rate:.3f}")
    return points
