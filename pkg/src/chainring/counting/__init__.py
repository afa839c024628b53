"""
Dot-product statistics, simplex census and permanent value sets.
"""

from .dots import (
    DistinctDotsReport,
    EnergyReport,
    NicaReport,
    NuSpectrum,
    SubsetSweepReport,
    class_multiplicity,
    count_pairs,
    distinct_dots,
    max_line_mass,
    nica_subset_sweep,
    nu_spectrum,
)
from .permanents import (
    PermanentReport,
    permanent_reduction_check,
    permanent_value_set,
    reduced_closed_form,
    reduced_matrix,
)
from .pointsets import PointSet
from .simplices import SimplexReport, simplex_classes

__all__ = [
    "DistinctDotsReport",
    "EnergyReport",
    "NicaReport",
    "NuSpectrum",
    "PermanentReport",
    "PointSet",
    "SimplexReport",
    "SubsetSweepReport",
    "class_multiplicity",
    "count_pairs",
    "distinct_dots",
    "max_line_mass",
    "nica_subset_sweep",
    "nu_spectrum",
    "permanent_reduction_check",
    "permanent_value_set",
    "reduced_closed_form",
    "reduced_matrix",
    "simplex_classes",
]
