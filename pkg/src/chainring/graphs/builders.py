"""
The product graph P_{q,r}(R) and the Erdős–Rényi graph E_{q,d}(R).
"""

import functools
import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

import numpy as np

from ..core import settings
from ..errors import GuardExceeded
from ..linalg.vectors import canonical_rows, encode_rows, proj_class_array, proj_class_count, vector_universe
from ..ring.core import RingSpec
from .bipartite import BipartiteGraph, third_eigenvalue

logger = logging.getLogger(__name__)

ROW_CHUNK = 512
# Erdős–Rényi graphs up to this part size are built and cached for edge counts
SMALL_GRAPH_PART = 2000


def product_part_size(ring: RingSpec, d: int) -> int:
    """|R^d minus (R^0)^d| = q^(dr) - q^(d(r-1))."""
    return ring.q ** (d * ring.r) - ring.q ** (d * (ring.r - 1))


def product_degree(ring: RingSpec, d: int) -> int:
    return ring.q ** ((d - 1) * ring.r)


def er_part_size(ring: RingSpec, d: int) -> int:
    return proj_class_count(ring.q, ring.r, d)


def er_degree(ring: RingSpec, d: int) -> int:
    """q^((d-2)(r-1)) (q^(d-1) - 1)/(q - 1)."""
    return ring.q ** ((d - 2) * (ring.r - 1)) * (ring.q ** (d - 1) - 1) // (ring.q - 1)


def _row_text(ring: RingSpec, open_: str, close: str) -> Callable[[np.ndarray], str]:
    def render(row: np.ndarray) -> str:
        return open_ + "|".join(ring.element(int(v)).to_text() for v in row) + close

    return render


def _biadjacency(
    ring: RingSpec,
    left: np.ndarray,
    right: np.ndarray,
    target: int,
    workers: int,
) -> np.ndarray:
    """Rows chunk by chunk: entry (i, j) is 1 iff left_i . right_j == target."""
    adj = np.zeros((left.shape[0], right.shape[0]), dtype=np.uint8)

    def fill(start: int) -> None:
        stop = min(start + ROW_CHUNK, left.shape[0])
        adj[start:stop] = ring.vdot(left[start:stop], right) == target

    starts = range(0, left.shape[0], ROW_CHUNK)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, starts))
    else:
        for start in starts:
            fill(start)
    return adj


def build_product_graph(
    ring: RingSpec,
    d: int,
    max_part: Optional[int] = None,
    workers: Optional[int] = None,
) -> BipartiteGraph:
    """x ~ y iff x . y = 1, on two copies of R^d minus (R^0)^d.

    Raises:
        GuardExceeded: If the part size exceeds ``max_part``
    """
    limit = max_part or settings.max_part()
    size = product_part_size(ring, d)
    if size > limit:
        raise GuardExceeded(f"product graph over {ring.descriptor}, d={d}", size, limit)
    started = time.perf_counter()
    vectors = vector_universe(ring, d, "avoid_nonunit_cube")
    adj = _biadjacency(ring, vectors, vectors, 1, workers or settings.workers())
    graph = BipartiteGraph(
        adj,
        labels_a=vectors,
        labels_b=vectors,
        name=f"P({ring.descriptor},d={d})",
        label_text=_row_text(ring, "(", ")"),
    )
    logger.debug(f"built {graph!r} in {time.perf_counter() - started:.3f}s")
    return graph


def build_er_graph(
    ring: RingSpec,
    d: int,
    max_part: Optional[int] = None,
    workers: Optional[int] = None,
) -> BipartiteGraph:
    """[x] ~ [y] iff x . y = 0, on two copies of the projective classes of R^d.

    Raises:
        GuardExceeded: If the class count exceeds ``max_part``
    """
    limit = max_part or settings.max_part()
    size = er_part_size(ring, d)
    if size > limit:
        raise GuardExceeded(f"Erdős–Rényi graph over {ring.descriptor}, d={d}", size, limit)
    started = time.perf_counter()
    classes = proj_class_array(ring, d)
    adj = _biadjacency(ring, classes, classes, 0, workers or settings.workers())
    graph = BipartiteGraph(
        adj,
        labels_a=classes,
        labels_b=classes,
        name=f"E({ring.descriptor},d={d})",
        label_text=_row_text(ring, "[", "]"),
    )
    logger.debug(f"built {graph!r} in {time.perf_counter() - started:.3f}s")
    return graph


@functools.lru_cache(maxsize=8)
def cached_er_graph(ring: RingSpec, d: int, max_part: Optional[int] = None) -> BipartiteGraph:
    return build_er_graph(ring, d, max_part)


@functools.lru_cache(maxsize=8)
def cached_product_graph(ring: RingSpec, d: int, max_part: Optional[int] = None) -> BipartiteGraph:
    return build_product_graph(ring, d, max_part)


def build_graph(kind: str, ring: RingSpec, d: int, max_part: Optional[int] = None) -> BipartiteGraph:
    """Dispatch on ``product`` or ``er`` through the shared cache."""
    if kind == "product":
        return cached_product_graph(ring, d, max_part)
    if kind == "er":
        return cached_er_graph(ring, d, max_part)
    raise ValueError(f"unknown graph kind '{kind}'")


def class_codes(ring: RingSpec, rows: np.ndarray) -> np.ndarray:
    """Sorted distinct codes of the projective classes of ``rows`` (rows in (R^0)^d dropped)."""
    rows = np.asarray(rows, dtype=np.int64)
    if not rows.shape[0]:
        return np.zeros(0, dtype=np.int64)
    canon, valid = canonical_rows(ring, rows)
    return np.unique(encode_rows(ring, canon[valid]))


def er_edges_between(ring: RingSpec, d: int, u_rows: np.ndarray, v_rows: np.ndarray) -> int:
    """e([U], [V]) in E_{q,d}(R) without building the graph.

    Uses the cached graph when it fits under SMALL_GRAPH_PART, otherwise the
    dot products of the class representatives, which form the same block of
    the biadjacency.
    """
    us = class_codes(ring, u_rows)
    vs = class_codes(ring, v_rows)
    if not us.size or not vs.size:
        return 0
    if er_part_size(ring, d) <= SMALL_GRAPH_PART:
        graph = cached_er_graph(ring, d)
        labels = encode_rows(ring, graph.labels_a)
        return graph.edges_between(np.searchsorted(labels, us), np.searchsorted(labels, vs))
    left = _decode(ring, us, d)
    right = _decode(ring, vs, d)
    return int(np.count_nonzero(_biadjacency(ring, left, right, 0, settings.workers())))


def _decode(ring: RingSpec, codes: np.ndarray, d: int) -> np.ndarray:
    rows = np.zeros((codes.size, d), dtype=np.int64)
    rest = codes.copy()
    for k in range(d - 1, -1, -1):
        rows[:, k] = rest % ring.order
        rest //= ring.order
    return rows


def er_third_eigenvalue(ring: RingSpec, d: int) -> float:
    """Computed sigma_2 for small graphs, otherwise the proven bound sqrt(q^((d-2)(2r-1)))."""
    if er_part_size(ring, d) <= SMALL_GRAPH_PART:
        return third_eigenvalue(cached_er_graph(ring, d))
    return math.sqrt(ring.q ** ((d - 2) * (2 * ring.r - 1)))
