"""
Lines, incidences and rich lines in R^2; pinned areas and volumes.
"""

from .lines import (
    IncidenceReport,
    Line,
    PinnedPointReport,
    RichLinesReport,
    duality_count,
    enumerate_graph_lines,
    graph_line_array,
    incidences,
    lines_from_text,
    pinned_point,
    rich_lines,
    rich_threshold,
)
from .volumes import (
    OriginAreasReport,
    PinnedAreasReport,
    PinnedVolumesReport,
    all_volumes,
    lifted_identity_holds,
    origin_areas,
    pinned_areas,
    pinned_values,
    pinned_volumes,
    simplex_volume,
    volume_threshold,
)

__all__ = [
    "IncidenceReport",
    "Line",
    "OriginAreasReport",
    "PinnedAreasReport",
    "PinnedPointReport",
    "PinnedVolumesReport",
    "RichLinesReport",
    "all_volumes",
    "duality_count",
    "enumerate_graph_lines",
    "graph_line_array",
    "incidences",
    "lifted_identity_holds",
    "lines_from_text",
    "origin_areas",
    "pinned_areas",
    "pinned_point",
    "pinned_values",
    "pinned_volumes",
    "rich_lines",
    "rich_threshold",
    "simplex_volume",
    "volume_threshold",
]
