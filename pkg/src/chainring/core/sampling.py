"""
Seeded random sets.

Every trial draws from its own generator, spawned from the master seed, so
a trial's sets do not depend on the order in which trials run.
"""

from typing import List, Sequence

import numpy as np

from ..counting.pointsets import PointSet
from ..errors import PreconditionViolation
from ..linalg.vectors import Constraint, vector_universe
from ..ring.core import RingSpec


def trial_generators(seed: int, trials: int, stream: int = 0) -> List[np.random.Generator]:
    """One independent generator per trial index; ``stream`` separates unrelated batches."""
    children = np.random.SeedSequence(seed, spawn_key=(stream,)).spawn(trials)
    return [np.random.default_rng(child) for child in children]


def random_subset(elements: Sequence[int], size: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform sample without replacement, returned sorted."""
    pool = np.asarray(elements, dtype=np.int64)
    if not 0 <= size <= pool.size:
        raise PreconditionViolation(f"cannot draw {size} from {pool.size} elements")
    return np.sort(rng.choice(pool, size=size, replace=False)) if size else pool[:0]


def random_point_set(
    ring: RingSpec,
    d: int,
    size: int,
    rng: np.random.Generator,
    constraint: Constraint = "none",
) -> PointSet:
    """Uniform ``size``-subset of the constrained universe of R^d.

    Raises:
        PreconditionViolation: If size exceeds the universe
    """
    universe = vector_universe(ring, d, constraint)
    if not 0 <= size <= universe.shape[0]:
        raise PreconditionViolation(
            f"size {size} exceeds the {constraint} universe of R^{d} ({universe.shape[0]} points)"
        )
    picks = np.sort(rng.choice(universe.shape[0], size=size, replace=False))
    return PointSet(ring, d, universe[picks])


def random_vertex_set(count: int, size: int, rng: np.random.Generator) -> List[int]:
    return random_subset(np.arange(count), min(size, count), rng).tolist()
