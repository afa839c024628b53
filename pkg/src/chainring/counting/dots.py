"""
Dot-product statistics between point sets: pair counts for a fixed value,
the distribution nu(t) and its energy, line masses and distinct values.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..core.models import TOLERANCE, BoundCheck
from ..errors import GuardExceeded, PreconditionViolation
from ..linalg.vectors import canonical_rows, encode_rows
from ..ring.core import RingElement, RingSpec
from .pointsets import PointSet

logger = logging.getLogger(__name__)

SUBSET_SWEEP_LIMIT = 12
PAIR_LIMIT = 50_000_000


def _dot_matrix(e: PointSet, f: PointSet) -> np.ndarray:
    if e.d != f.d:
        raise PreconditionViolation(f"point sets live in R^{e.d} and R^{f.d}")
    if len(e) * len(f) > PAIR_LIMIT:
        raise GuardExceeded("dot-product pairs", len(e) * len(f), PAIR_LIMIT)
    if not len(e) or not len(f):
        return np.zeros((len(e), len(f)), dtype=np.int64)
    return e.ring.vdot(e.rows, f.rows)


# ----------------------------------------------------------------------
# Pairs with a prescribed dot product


class NicaReport(BoundCheck):
    """N_lambda(E, F) against |E||F|/q^r with error q^((d-1)(r-1/2)) sqrt(|E||F|)."""
    size_e: int = Field(..., description="|E|")
    size_f: int = Field(..., description="|F|")
    target: str = Field(..., description="lambda in digit text form")
    solvable_regime: bool = Field(
        default=False, description="|E||F| > q^(d(2r-1)+1), where every unit value must be attained"
    )


def nica_bound(ring: RingSpec, d: int, size_e: int, size_f: int) -> float:
    return ring.q ** ((d - 1) * (ring.r - 0.5)) * math.sqrt(size_e * size_f)


def solvability_threshold(ring: RingSpec, d: int) -> int:
    """q^(d(2r-1)+1): above this |E||F| the main term beats the error term."""
    return ring.q ** (d * (2 * ring.r - 1) + 1)


def count_pairs(e: PointSet, f: PointSet, target: RingElement, allow_nonunit: bool = False) -> NicaReport:
    """Exact number of (a, b) in E x F with a . b = target, checked against the Nica bound.

    Args:
        e: First point set
        f: Second point set (same ring and dimension)
        target: The value lambda; must be a unit unless ``allow_nonunit``
        allow_nonunit: Count anyway for exploration; the row is then marked

    Raises:
        PreconditionViolation: If lambda is not a unit and no override is given
    """
    if not target.is_unit and not allow_nonunit:
        raise PreconditionViolation(f"lambda = {target.to_text()} is not a unit")
    ring, d = e.ring, e.d
    observed = int(np.count_nonzero(_dot_matrix(e, f) == target.index))
    main = len(e) * len(f) / ring.order
    bound = nica_bound(ring, d, len(e), len(f))
    passed = abs(observed - main) <= bound + TOLERANCE
    solvable = len(e) * len(f) > solvability_threshold(ring, d)
    note = None
    if solvable and target.is_unit and observed == 0:
        passed = False
        note = "no solution above the solvability threshold"
    elif not target.is_unit:
        note = "non-unit lambda (exploration)"
    return NicaReport(
        observed=observed,
        main_term=main,
        bound=bound,
        passed=passed,
        note=note,
        size_e=len(e),
        size_f=len(f),
        target=target.to_text(),
        solvable_regime=solvable,
    )


class SubsetSweepReport(BaseModel):
    """Every pair of subsets of R (d = 1) checked at once."""
    target: str = Field(..., description="lambda in digit text form")
    checks: int = Field(..., description="Number of (E, F) pairs checked")
    failures: int = Field(..., description="Pairs violating the bound")
    solvable_pairs: int = Field(..., description="Pairs above the solvability threshold")
    unsolved: int = Field(..., description="Solvable pairs with no solution")
    max_deviation_ratio: float = Field(..., description="max |N - |E||F|/q^r| / bound over nonempty pairs")

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.unsolved == 0


def nica_subset_sweep(ring: RingSpec, target: RingElement) -> SubsetSweepReport:
    """Check the pair-count bound for all 2^|R| x 2^|R| subset pairs of R.

    With S the 0/1 subset-membership matrix and M the incidence of
    a * b = lambda, every count is an entry of S M S^T.
    """
    if ring.order > SUBSET_SWEEP_LIMIT:
        raise GuardExceeded(f"subset sweep over {ring.descriptor}", ring.order, SUBSET_SWEEP_LIMIT)
    if not target.is_unit:
        raise PreconditionViolation(f"lambda = {target.to_text()} is not a unit")
    size = ring.order
    idx = ring.all_indices()
    incidence = (np.asarray(ring.vmul(idx[:, None], idx[None, :])) == target.index).astype(np.int64)
    masks = np.arange(1 << size, dtype=np.int64)
    subsets = (masks[:, None] >> np.arange(size)[None, :]) & 1
    counts = subsets @ incidence @ subsets.T
    sizes = subsets.sum(axis=1)
    products = np.outer(sizes, sizes)
    main = products / ring.order
    bound = np.sqrt(products.astype(np.float64))
    deviation = np.abs(counts - main)
    failures = int(np.count_nonzero(deviation > bound + TOLERANCE))
    solvable = products > solvability_threshold(ring, 1)
    unsolved = int(np.count_nonzero(solvable & (counts == 0)))
    nonempty = products > 0
    ratio = float(np.max(deviation[nonempty] / bound[nonempty])) if nonempty.any() else 0.0
    logger.debug(f"subset sweep over {ring.descriptor}: {counts.size} pairs, {failures} failures")
    return SubsetSweepReport(
        target=target.to_text(),
        checks=int(counts.size),
        failures=failures,
        solvable_pairs=int(np.count_nonzero(solvable)),
        unsolved=unsolved,
        max_deviation_ratio=ratio,
    )


# ----------------------------------------------------------------------
# The distribution nu(t)


class NuSpectrum(BaseModel):
    """nu(t) = |{(x, y) in F x G : x . y = t}| for every t in R."""
    counts: List[int] = Field(..., description="nu(t) indexed by the canonical index of t")
    total: int = Field(..., description="sum of nu(t)")
    energy: int = Field(..., description="sum of nu(t)^2")

    @property
    def support(self) -> List[int]:
        return [t for t, c in enumerate(self.counts) if c]

    def count(self, t: RingElement) -> int:
        return self.counts[t.index]


class EnergyReport(BoundCheck):
    """Energy against |F|^2|G|^2/q^r + q^((d-1)(2r-1)) |F||G| m."""
    line_mass: int = Field(..., description="m = max |F ∩ l_x|")
    class_multiplicity: int = Field(
        ..., description="Largest number of (x, -t) pairs sharing one projective class of R^(2d)"
    )


def max_line_mass(f: PointSet) -> int:
    """max over x of |F ∩ l_x|, l_x = {s x : s a unit}.

    Two points share an orbit iff they have the same projective class, so the
    maximum is the largest class multiplicity in F. Points of (R^0)^d lie on
    no l_x and are ignored.
    """
    if not len(f):
        return 0
    canon, valid = canonical_rows(f.ring, f.rows)
    if not valid.any():
        return 0
    _, counts = np.unique(encode_rows(f.ring, canon[valid]), return_counts=True)
    return int(counts.max())


def class_multiplicity(f: PointSet, g: PointSet) -> int:
    """Largest number of vectors (x, -t), x in F and t in G, in one class of R^(2d)."""
    if not len(f) or not len(g):
        return 0
    ring = f.ring
    if len(f) * len(g) > PAIR_LIMIT:
        raise GuardExceeded("energy class census", len(f) * len(g), PAIR_LIMIT)
    left = np.repeat(f.rows, len(g), axis=0)
    right = np.tile(np.asarray(ring.vneg(g.rows), dtype=np.int64), (len(f), 1))
    canon, valid = canonical_rows(ring, np.concatenate([left, right], axis=1))
    canon = canon[valid]
    if not canon.shape[0]:
        return 0
    _, counts = np.unique(canon, axis=0, return_counts=True)
    return int(counts.max())


def nu_spectrum(f: PointSet, g: PointSet) -> Tuple[NuSpectrum, EnergyReport]:
    """Exact nu(t) and the energy bound check.

    Raises:
        PreconditionViolation: If F meets (R^0)^d
    """
    f.require_unit_coordinates("F")
    ring, d = f.ring, f.d
    dots = _dot_matrix(f, g)
    counts = np.bincount(dots.ravel(), minlength=ring.order).astype(np.int64)
    total = int(counts.sum())
    energy = int(np.sum(counts * counts))
    spectrum = NuSpectrum(counts=counts.tolist(), total=total, energy=energy)

    m = max_line_mass(f)
    multiplicity = class_multiplicity(f, g)
    main = len(f) ** 2 * len(g) ** 2 / ring.order
    bound = ring.q ** ((d - 1) * (2 * ring.r - 1)) * len(f) * len(g) * m
    passed = energy <= main + bound + TOLERANCE and multiplicity <= m
    note = None if multiplicity <= m else f"class multiplicity {multiplicity} exceeds m = {m}"
    report = EnergyReport(
        observed=energy,
        main_term=main,
        bound=bound,
        passed=passed,
        note=note,
        line_mass=m,
        class_multiplicity=multiplicity,
    )
    return spectrum, report


# ----------------------------------------------------------------------
# Distinct dot products


class DistinctDotsReport(BaseModel):
    """Support of nu with the Cauchy-Schwarz lower-bound chain."""
    values: List[int] = Field(..., description="Distinct dot products (canonical indices)")
    size: int = Field(..., description="Number of distinct dot products")
    ring_order: int = Field(..., description="q^r")
    energy_lower: float = Field(..., description="total^2 / energy")
    bound_lower: float = Field(..., description="total^2 / (right-hand side of the energy bound)")
    threshold_ratio: Optional[float] = Field(
        default=None, description="m q^((d-1)(2r-1)+r) / (|F||G|); small values predict full coverage"
    )
    passed: bool = Field(..., serialization_alias="pass", description="size >= energy_lower >= bound_lower")


def distinct_dots(f: PointSet, g: PointSet) -> DistinctDotsReport:
    """{x . y : x in F, y in G} and its lower-bound chain."""
    spectrum, energy = nu_spectrum(f, g)
    ring, d = f.ring, f.d
    values = spectrum.support
    total = spectrum.total
    if total == 0:
        return DistinctDotsReport(
            values=[], size=0, ring_order=ring.order, energy_lower=0.0, bound_lower=0.0, passed=True
        )
    energy_lower = total * total / spectrum.energy
    bound_lower = total * total / (energy.main_term + energy.bound)
    passed = len(values) + TOLERANCE >= energy_lower and energy_lower + TOLERANCE >= bound_lower
    ratio = energy.line_mass * ring.q ** ((d - 1) * (2 * ring.r - 1) + ring.r) / total
    return DistinctDotsReport(
        values=values,
        size=len(values),
        ring_order=ring.order,
        energy_lower=energy_lower,
        bound_lower=bound_lower,
        threshold_ratio=ratio,
        passed=passed,
    )
