"""
Biregular bipartite graphs with a cached singular-value spectrum.
"""

import logging
import math
import threading
from typing import Iterable, List, Optional, Sequence, TextIO

import numpy as np
from pydantic import BaseModel, Field
from scipy import linalg as sla
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from ..core.models import TOLERANCE, BoundCheck
from ..errors import NotBiregular, VertexOutOfRange

logger = logging.getLogger(__name__)


class BipartiteGraph:
    """Bipartite graph given by a 0/1 biadjacency matrix.

    Both parts carry integer-index label rows (one row per vertex) so set
    experiments can be mapped onto vertex subsets. Instances are immutable
    once built; the spectrum is computed on first use and shared.
    """

    def __init__(
        self,
        biadjacency: np.ndarray,
        labels_a: Optional[np.ndarray] = None,
        labels_b: Optional[np.ndarray] = None,
        name: str = "graph",
        label_text=None,
    ):
        adj = np.asarray(biadjacency, dtype=np.uint8)
        if adj.ndim != 2:
            raise ValueError("biadjacency must be two-dimensional")
        row_deg = adj.sum(axis=1, dtype=np.int64)
        col_deg = adj.sum(axis=0, dtype=np.int64)
        if row_deg.size and np.any(row_deg != row_deg[0]):
            raise NotBiregular(f"{name}: row degrees range over {row_deg.min()}..{row_deg.max()}")
        if col_deg.size and np.any(col_deg != col_deg[0]):
            raise NotBiregular(f"{name}: column degrees range over {col_deg.min()}..{col_deg.max()}")
        adj.setflags(write=False)
        self.biadjacency = adj
        self.labels_a = labels_a
        self.labels_b = labels_b
        self.name = name
        self.deg_a = int(row_deg[0]) if row_deg.size else 0
        self.deg_b = int(col_deg[0]) if col_deg.size else 0
        self._label_text = label_text
        self._singular_values: Optional[np.ndarray] = None
        self._lock = threading.Lock()

    @property
    def size_a(self) -> int:
        return self.biadjacency.shape[0]

    @property
    def size_b(self) -> int:
        return self.biadjacency.shape[1]

    @property
    def edge_count(self) -> int:
        return self.size_a * self.deg_a

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph({self.name}, part_a={self.size_a}, part_b={self.size_b}, "
            f"deg_a={self.deg_a}, deg_b={self.deg_b})"
        )

    # ------------------------------------------------------------------
    # Spectrum

    @property
    def singular_values(self) -> np.ndarray:
        """Descending singular values of the biadjacency."""
        if self._singular_values is None:
            with self._lock:
                if self._singular_values is None:
                    values = sla.svdvals(self.biadjacency.astype(np.float64))
                    values = np.clip(np.sort(values)[::-1], 0.0, None)
                    values.setflags(write=False)
                    logger.debug(f"{self.name}: computed {values.size} singular values")
                    self._singular_values = values
        return self._singular_values

    def adjacency_eigenvalues(self) -> np.ndarray:
        """Eigenvalues of the full (|A|+|B|) symmetric adjacency, descending."""
        m, n = self.biadjacency.shape
        full = np.zeros((m + n, m + n), dtype=np.float64)
        full[:m, m:] = self.biadjacency
        full[m:, :m] = self.biadjacency.T
        return np.sort(sla.eigvalsh(full))[::-1]

    def is_connected(self) -> bool:
        m, n = self.biadjacency.shape
        rows, cols = np.nonzero(self.biadjacency)
        data = np.ones(rows.size, dtype=np.int8)
        sparse = csr_matrix((data, (rows, cols + m)), shape=(m + n, m + n))
        count, _ = connected_components(sparse, directed=False)
        return count == 1

    # ------------------------------------------------------------------
    # Vertex sets

    def _check_ids(self, ids: Iterable[int], size: int, part: str) -> np.ndarray:
        arr = np.unique(np.asarray(list(ids), dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= size):
            bad = arr[(arr < 0) | (arr >= size)][0]
            raise VertexOutOfRange(f"vertex {bad} not in part {part} of size {size}")
        return arr

    def neighbors(self, a_vertex: int) -> np.ndarray:
        """B-side neighbours of an A vertex, ascending."""
        self._check_ids([a_vertex], self.size_a, "A")
        return np.flatnonzero(self.biadjacency[a_vertex])

    def edges_between(self, xs: Iterable[int], ys: Iterable[int]) -> int:
        x = self._check_ids(xs, self.size_a, "A")
        y = self._check_ids(ys, self.size_b, "B")
        if not x.size or not y.size:
            return 0
        return int(self.biadjacency[np.ix_(x, y)].sum(dtype=np.int64))

    def neighbor_counts(self, us: Iterable[int], vs: Iterable[int]) -> np.ndarray:
        """N_V(u) = |N(u) ∩ V| for each u in U."""
        u = self._check_ids(us, self.size_a, "A")
        v = self._check_ids(vs, self.size_b, "B")
        if not u.size:
            return np.zeros(0, dtype=np.int64)
        if not v.size:
            return np.zeros(u.size, dtype=np.int64)
        return self.biadjacency[np.ix_(u, v)].sum(axis=1, dtype=np.int64)

    # ------------------------------------------------------------------
    # Text dumps

    def label_of(self, part: str, vertex: int) -> str:
        labels = self.labels_a if part == "A" else self.labels_b
        if labels is None:
            return str(vertex)
        if self._label_text is not None:
            return self._label_text(labels[vertex])
        return "(" + "|".join(str(int(v)) for v in np.atleast_1d(labels[vertex])) + ")"

    def dump(self, stream: TextIO) -> None:
        """Header line then one ``label: neighbours`` line per A vertex."""
        stream.write(
            f"part_a={self.size_a} part_b={self.size_b} deg_a={self.deg_a} deg_b={self.deg_b}\n"
        )
        for i in range(self.size_a):
            nbrs = " ".join(str(j) for j in np.flatnonzero(self.biadjacency[i]).tolist())
            stream.write(f"{self.label_of('A', i)}: {nbrs}\n")

    def dump_spectrum(self, stream: TextIO) -> None:
        for value in self.singular_values.tolist():
            stream.write(f"{value:.12g}\n")


class MixingReport(BoundCheck):
    """Edge count between X and Y against the mixing-lemma prediction."""
    size_x: int = Field(..., description="|X|")
    size_y: int = Field(..., description="|Y|")
    third_eigenvalue: float = Field(..., description="lambda_3 = sigma_2")


class VarianceReport(BaseModel):
    """Neighbour-count variance against lambda_3^2 |V|."""
    lhs: float = Field(..., description="sum over U of (N_V(u) - a|V|/|B|)^2")
    rhs: float = Field(..., description="lambda_3^2 |V|")
    passed: bool = Field(..., serialization_alias="pass", description="lhs <= rhs + tolerance")
    size_u: int = Field(..., description="|U|")
    size_v: int = Field(..., description="|V|")


def third_eigenvalue(g: BipartiteGraph) -> float:
    """lambda_3 of the bipartite graph, i.e. the second singular value of the biadjacency."""
    sv = g.singular_values
    if sv.size < 2:
        return 0.0
    return float(sv[1])


def mixing_check(g: BipartiteGraph, xs: Sequence[int], ys: Sequence[int]) -> MixingReport:
    """Compare e(X, Y) with a|X||Y|/|B| within lambda_3 sqrt(|X||Y|)."""
    x = set(int(v) for v in xs)
    y = set(int(v) for v in ys)
    observed = g.edges_between(x, y)
    predicted = g.deg_a * len(x) * len(y) / g.size_b
    lam = third_eigenvalue(g)
    bound = lam * math.sqrt(len(x) * len(y))
    return MixingReport(
        observed=observed,
        main_term=predicted,
        bound=bound,
        passed=abs(observed - predicted) <= bound + TOLERANCE,
        size_x=len(x),
        size_y=len(y),
        third_eigenvalue=lam,
    )


def variance_check(g: BipartiteGraph, us: Sequence[int], vs: Sequence[int]) -> VarianceReport:
    """Sum of squared deviations of N_V(u) from a|V|/|B| against lambda_3^2 |V|."""
    u = sorted(set(int(v) for v in us))
    v = sorted(set(int(w) for w in vs))
    counts = g.neighbor_counts(u, v).astype(np.float64)
    expected = g.deg_a * len(v) / g.size_b
    lhs = float(np.sum((counts - expected) ** 2))
    lam = third_eigenvalue(g)
    rhs = lam * lam * len(v)
    return VarianceReport(lhs=lhs, rhs=rhs, passed=lhs <= rhs + TOLERANCE, size_u=len(u), size_v=len(v))


def graph_from_edges(m: int, n: int, edges: List[Sequence[int]], name: str = "graph") -> BipartiteGraph:
    """Small helper for hand-built graphs (complete, matchings)."""
    adj = np.zeros((m, n), dtype=np.uint8)
    for a, b in edges:
        adj[a, b] = 1
    return BipartiteGraph(adj, name=name)
