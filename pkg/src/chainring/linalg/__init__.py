"""
Vectors and small matrices over finite valuation rings.
"""

from .matrices import SquareMatrix, det, det_batch, permanent, permanent_leibniz
from .vectors import (
    PointVec,
    ProjClass,
    canonical_rows,
    dot,
    encode_rows,
    enumerate_proj_classes,
    line_through_origin,
    proj_class,
    proj_class_array,
    proj_class_count,
    vector_universe,
)

__all__ = [
    "PointVec",
    "ProjClass",
    "SquareMatrix",
    "canonical_rows",
    "det",
    "det_batch",
    "dot",
    "encode_rows",
    "enumerate_proj_classes",
    "line_through_origin",
    "permanent",
    "permanent_leibniz",
    "proj_class",
    "proj_class_array",
    "proj_class_count",
    "vector_universe",
]
