"""
CSV and JSON rendering of experiment reports.

Both formats are deterministic for a given report: wall time is never
written and floats are printed at fixed precision in CSV.
"""

import csv
import io
import json
from typing import Any, List

from .models import ExperimentReport, ReportRow

CSV_COLUMNS: List[str] = [
    field.serialization_alias or name for name, field in ReportRow.model_fields.items()
]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def to_csv(report: ExperimentReport) -> str:
    """One header line and one line per row; unused columns are empty."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        data = row.model_dump(by_alias=True)
        writer.writerow([_cell(data[column]) for column in CSV_COLUMNS])
    return buffer.getvalue()


def to_json(report: ExperimentReport) -> str:
    return json.dumps(report.model_dump(mode="json", by_alias=True), indent=2) + "\n"


def render(report: ExperimentReport, fmt: str) -> str:
    """
    Render a report.

    Args:
        report: The report
        fmt: ``csv`` or ``json``

    Returns:
        The rendered text
    """
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    raise ValueError(f"unknown format '{fmt}'")
