"""
Census of dot-product congruence classes of k-simplices.

A k-simplex is an ordered (k+1)-tuple of distinct points; its class is the
tuple of labels x_i . x_j. Three label sets are supported:

* ``units_only``: i < j, counting only tuples whose labels are all units
* ``all_values``: i < j, any label
* ``with_norms``: i <= j, any label (norms included)
"""

import logging
import math
from itertools import combinations, combinations_with_replacement
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, Field
from typing_extensions import Literal

from ..errors import GuardExceeded, PreconditionViolation
from .pointsets import PointSet

logger = logging.getLogger(__name__)

SimplexMode = Literal["units_only", "all_values", "with_norms"]

SIMPLEX_LIMIT = 100_000_000


class SimplexReport(BaseModel):
    """Number of congruence classes against the q^(r * labels) ceiling."""
    count: int = Field(..., description="Distinct label tuples")
    mode: str = Field(..., description="Label mode")
    k: int = Field(..., description="Simplex order")
    labels: int = Field(..., description="Labels per tuple")
    ceiling: int = Field(..., description="Number of possible label tuples, q^(r * labels)")
    tuples: int = Field(..., description="Ordered tuples of distinct points examined")
    threshold_exponent: float = Field(..., description="((d-1)(2r-1) + r(k+1)) / 2")
    size_threshold: float = Field(..., description="q to the threshold exponent")

    @property
    def ratio(self) -> float:
        return self.count / self.ceiling


def label_pairs(k: int, mode: str) -> List[Tuple[int, int]]:
    if mode == "with_norms":
        return list(combinations_with_replacement(range(k + 1), 2))
    return list(combinations(range(k + 1), 2))


def simplex_classes(e: PointSet, k: int, mode: SimplexMode = "units_only") -> SimplexReport:
    """Count distinct label tuples over ordered (k+1)-tuples of distinct points of E.

    Raises:
        PreconditionViolation: If E has fewer than k+1 points
        GuardExceeded: If |E|^(k+1) exceeds the enumeration limit
    """
    if mode not in ("units_only", "all_values", "with_norms"):
        raise ValueError(f"unknown simplex mode '{mode}'")
    if k < 1:
        raise PreconditionViolation("simplex order must be at least 1")
    size = len(e)
    if size < k + 1:
        raise PreconditionViolation(f"need at least {k + 1} points, got {size}")
    if size ** (k + 1) > SIMPLEX_LIMIT:
        raise GuardExceeded(f"{k}-simplex census", size ** (k + 1), SIMPLEX_LIMIT)

    ring, d = e.ring, e.d
    gram = ring.vdot(e.rows, e.rows)
    pairs = label_pairs(k, mode)
    # tuples for positions 1..k, shared by every choice of the first point
    rest = np.indices((size,) * k, dtype=np.int64).reshape(k, -1).T
    rest = rest[_distinct(rest)]

    seen = []
    examined = 0
    for first in range(size):
        tuples = rest[np.all(rest != first, axis=1)]
        tuples = np.concatenate([np.full((tuples.shape[0], 1), first, dtype=np.int64), tuples], axis=1)
        examined += tuples.shape[0]
        labels = np.stack([gram[tuples[:, i], tuples[:, j]] for i, j in pairs], axis=1)
        if mode == "units_only":
            labels = labels[ring.is_unit_array(labels).all(axis=1)]
        if labels.shape[0]:
            seen.append(np.unique(labels, axis=0))
    count = np.unique(np.concatenate(seen), axis=0).shape[0] if seen else 0

    exponent = ((d - 1) * (2 * ring.r - 1) + ring.r * (k + 1)) / 2
    logger.debug(f"{k}-simplex census ({mode}) over {size} points: {count} classes")
    return SimplexReport(
        count=count,
        mode=mode,
        k=k,
        labels=len(pairs),
        ceiling=ring.order ** len(pairs),
        tuples=examined,
        threshold_exponent=exponent,
        size_threshold=ring.q ** exponent,
    )


def _distinct(rows: np.ndarray) -> np.ndarray:
    mask = np.ones(rows.shape[0], dtype=bool)
    for i, j in combinations(range(rows.shape[1]), 2):
        mask &= rows[:, i] != rows[:, j]
    return mask


def expected_tuple_count(size: int, k: int) -> int:
    """size (size-1) ... (size-k): ordered tuples of distinct points."""
    return math.perm(size, k + 1)
