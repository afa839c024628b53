"""
Value sets of permanents of matrices with entries from A ⊆ R.

For k = 2 the value set {ad + bc} is enumerated exactly. For k >= 3 the
value set is taken over the family M(u, x, y): first row x, second row y,
remaining k - 2 rows constant u. Expanding along the constant rows gives

    Per(M(u, x, y)) = (k-2)! u^(k-2) sum_{i != j} x_i y_j
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from ..errors import GuardExceeded, NotAUnit, PreconditionViolation
from ..linalg.matrices import SquareMatrix, permanent
from ..ring.core import RingElement, RingSpec

logger = logging.getLogger(__name__)

REDUCED_LIMIT = 20_000_000


class PermanentReport(BaseModel):
    """|P_k(A^k)| against q^r."""
    values: List[int] = Field(..., description="Attained permanents (canonical indices)")
    size: int = Field(..., description="Number of attained values")
    ring_order: int = Field(..., description="q^r")
    unit_coverage: float = Field(..., description="Fraction of R^* attained")
    k: int = Field(..., description="Matrix order")
    set_size: int = Field(..., description="|A|")
    reduced: bool = Field(..., description="Whether the reduced family M(u, x, y) was used")
    threshold_exponent: float = Field(..., description="((k-1)(2r-1) + r) / (2k-1)")
    size_threshold: float = Field(..., description="q to the threshold exponent")

    @property
    def meets_threshold(self) -> bool:
        return self.set_size >= self.size_threshold

    @property
    def ratio(self) -> float:
        return self.size / self.ring_order


def _check_order(ring: RingSpec, k: int) -> None:
    if k < 2:
        raise PreconditionViolation("matrix order must be at least 2")
    if math.gcd(k, ring.order) != 1:
        raise PreconditionViolation(f"gcd({k}, {ring.order}) != 1")


def reduced_coefficient(ring: RingSpec, u: int, k: int) -> int:
    """(k-2)! u^(k-2) as a canonical index."""
    return int(ring.vmul(ring(math.factorial(k - 2)).index, ring.vpow(u, k - 2)))


def permanent_value_set(
    ring: RingSpec,
    a: Sequence[int],
    k: int,
    u: Optional[int] = None,
) -> PermanentReport:
    """Attained permanents of k x k matrices over A.

    Args:
        ring: The ring
        a: Canonical indices of A
        k: Matrix order, coprime to q^r
        u: Constant-row value for k >= 3; every unit of A when omitted

    Raises:
        PreconditionViolation: If gcd(k, q^r) != 1 or u is not in A
        GuardExceeded: If the enumeration is too large
    """
    _check_order(ring, k)
    elements = np.unique(np.asarray(list(a), dtype=np.int64))
    if k == 2:
        products = np.unique(np.asarray(ring.vmul(elements[:, None], elements[None, :])))
        values = np.unique(np.asarray(ring.vadd(products[:, None], products[None, :])))
    else:
        if u is not None:
            if u not in set(elements.tolist()):
                raise PreconditionViolation(f"u = {ring.element(u).to_text()} is not in A")
            constants = np.asarray([u], dtype=np.int64)
        else:
            constants = elements[ring.is_unit_array(elements)]
        values = _reduced_values(ring, elements, k, constants)

    values = np.asarray(values, dtype=np.int64)
    units = int(np.count_nonzero(ring.is_unit_array(values))) if values.size else 0
    exponent = ((k - 1) * (2 * ring.r - 1) + ring.r) / (2 * k - 1)
    return PermanentReport(
        values=values.tolist(),
        size=int(values.size),
        ring_order=ring.order,
        unit_coverage=units / ring.unit_count,
        k=k,
        set_size=int(elements.size),
        reduced=k > 2,
        threshold_exponent=exponent,
        size_threshold=ring.q ** exponent,
    )


def _reduced_values(ring: RingSpec, elements: np.ndarray, k: int, constants: np.ndarray) -> np.ndarray:
    """Values of (k-2)! u^(k-2) sum_{i != j} x_i y_j over x, y in A^k."""
    count = elements.size ** k
    if count * count > REDUCED_LIMIT:
        raise GuardExceeded(f"reduced {k}x{k} permanent family", count * count, REDUCED_LIMIT)
    if not constants.size or not elements.size:
        return np.zeros(0, dtype=np.int64)
    grid = _tuples(elements, k)
    sums = np.zeros(grid.shape[0], dtype=np.int64)
    for i in range(k):
        sums = np.asarray(ring.vadd(sums, grid[:, i]), dtype=np.int64)
    # sum_{i != j} x_i y_j = (sum x)(sum y) - x . y
    cross = ring.vsub(ring.vmul(sums[:, None], sums[None, :]), ring.vdot(grid, grid))
    inner = np.unique(np.asarray(cross, dtype=np.int64))
    coeffs = np.unique(np.asarray([reduced_coefficient(ring, int(c), k) for c in constants], dtype=np.int64))
    return np.unique(np.asarray(ring.vmul(coeffs[:, None], inner[None, :]), dtype=np.int64))


def _tuples(elements: np.ndarray, k: int) -> np.ndarray:
    """All k-tuples over the given elements, in canonical order."""
    grid = np.indices((elements.size,) * k, dtype=np.int64).reshape(k, -1).T
    return elements[grid]


def reduced_matrix(u: RingElement, x: Sequence[RingElement], y: Sequence[RingElement]) -> SquareMatrix:
    """M(u, x, y): rows x, y, then k - 2 rows of u."""
    k = len(x)
    rows = [list(x), list(y)] + [[u] * k for _ in range(k - 2)]
    return SquareMatrix(rows)


def reduced_closed_form(u: RingElement, x: Sequence[RingElement], y: Sequence[RingElement]) -> RingElement:
    """(k-2)! u^(k-2) sum_{i != j} x_i y_j."""
    ring = u.ring
    k = len(x)
    total = ring.zero
    for i in range(k):
        for j in range(k):
            if i != j:
                total = total + x[i] * y[j]
    return ring(math.factorial(k - 2)) * u ** (k - 2) * total


def permanent_reduction_check(
    u: RingElement,
    x: Sequence[RingElement],
    y: Sequence[RingElement],
    k: Optional[int] = None,
) -> bool:
    """Ryser permanent of M(u, x, y) equals the closed form.

    Raises:
        NotAUnit: If u is not a unit
    """
    if not u.is_unit:
        raise NotAUnit(f"u = {u.to_text()} is not a unit")
    k = k or len(x)
    if len(x) != k or len(y) != k or k < 2:
        raise PreconditionViolation(f"x and y must both have length k = {k} >= 2")
    return permanent(reduced_matrix(u, x, y)) == reduced_closed_form(u, x, y)
