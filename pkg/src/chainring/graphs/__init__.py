"""
Product and Erdős–Rényi graphs over R, spectra, mixing and variance checks.
"""

from .bipartite import (
    BipartiteGraph,
    MixingReport,
    VarianceReport,
    graph_from_edges,
    mixing_check,
    third_eigenvalue,
    variance_check,
)
from .builders import (
    build_er_graph,
    build_graph,
    build_product_graph,
    cached_er_graph,
    cached_product_graph,
    class_codes,
    er_degree,
    er_edges_between,
    er_part_size,
    er_third_eigenvalue,
    product_degree,
    product_part_size,
)

__all__ = [
    "BipartiteGraph",
    "MixingReport",
    "VarianceReport",
    "build_er_graph",
    "build_graph",
    "build_product_graph",
    "cached_er_graph",
    "cached_product_graph",
    "class_codes",
    "er_degree",
    "er_edges_between",
    "er_part_size",
    "er_third_eigenvalue",
    "graph_from_edges",
    "mixing_check",
    "product_degree",
    "product_part_size",
    "third_eigenvalue",
    "variance_check",
]
