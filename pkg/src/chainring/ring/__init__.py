"""
Finite valuation rings: construction, exact arithmetic, enumeration.
"""

from .core import (
    RingElement,
    RingSpec,
    add,
    enumerate_elements,
    enumerate_units,
    inv,
    make_ring,
    mul,
    neg,
    parse_descriptor,
    sub,
    valuation,
)

__all__ = [
    "RingElement",
    "RingSpec",
    "add",
    "enumerate_elements",
    "enumerate_units",
    "inv",
    "make_ring",
    "mul",
    "neg",
    "parse_descriptor",
    "sub",
    "valuation",
]
