"""
Sum-product witnesses over the unit group.
"""

from .witness import (
    SpectralWitnessReport,
    SweepPoint,
    UnitSetPair,
    find_witness_direct,
    find_witness_spectral,
    is_witness,
    make_pair,
    sumproduct_threshold,
    threshold_sweep,
)

__all__ = [
    "SpectralWitnessReport",
    "SweepPoint",
    "UnitSetPair",
    "find_witness_direct",
    "find_witness_spectral",
    "is_witness",
    "make_pair",
    "sumproduct_threshold",
    "threshold_sweep",
]
