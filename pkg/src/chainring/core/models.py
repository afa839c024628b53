"""
Base Pydantic models for chainring configuration and reports.
"""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

# Slack allowed when comparing floating-point bounds.
TOLERANCE = 1e-6

EXPERIMENTS = (
    "nica",
    "mixing",
    "variance",
    "energy",
    "distinct-dots",
    "simplices",
    "incidences",
    "rich-lines",
    "pinned-areas",
    "volumes",
    "permanents",
    "sumproduct",
    "spectrum",
)


class BoundCheck(BaseModel):
    """An asymptotic statement made checkable at fixed parameters."""
    model_config = ConfigDict(populate_by_name=True)

    observed: float = Field(..., description="Exact observed quantity")
    main_term: float = Field(..., description="Predicted main term")
    bound: float = Field(..., description="Allowed error (or threshold) at these parameters")
    passed: bool = Field(..., serialization_alias="pass", description="Whether the inequality holds")
    note: Optional[str] = Field(default=None, description="Free-form remark")

    @property
    def deviation(self) -> float:
        return abs(self.observed - self.main_term)


class ReportRow(BaseModel):
    """One row of the flat report table shared by every experiment."""
    model_config = ConfigDict(populate_by_name=True)

    experiment: str = Field(..., description="Experiment name")
    family: str = Field(..., description="Ring family")
    p: int = Field(..., description="Characteristic")
    n: int = Field(..., description="Residue field degree")
    r: int = Field(..., description="Nilpotency degree")
    d: Optional[int] = Field(default=None, description="Dimension")
    k: Optional[int] = Field(default=None, description="Simplex or matrix order")
    trial: int = Field(default=0, description="Trial index")
    size_a: Optional[int] = Field(default=None, description="Size of the first set")
    size_b: Optional[int] = Field(default=None, description="Size of the second set")
    observed: Optional[float] = Field(default=None, description="Observed quantity")
    main_term: Optional[float] = Field(default=None, description="Predicted main term")
    bound: Optional[float] = Field(default=None, description="Error bound or threshold")
    passed: bool = Field(default=True, serialization_alias="pass", description="Whether every asserted check held")
    asserted: bool = Field(default=True, description="Whether the row carries an assertion")
    note: Optional[str] = Field(default=None, description="Free-form remark")


class ReportSummary(BaseModel):
    """Aggregate over the rows of one run."""
    rows: int = Field(default=0, description="Number of rows")
    asserted_rows: int = Field(default=0, description="Rows that carry an assertion")
    passed_rows: int = Field(default=0, description="Asserted rows that passed")
    pass_rate: float = Field(default=1.0, description="passed_rows / asserted_rows")
    max_deviation_ratio: Optional[float] = Field(
        default=None, description="Largest |observed - main_term| / bound over rows with a positive bound"
    )
    wall_time: float = Field(default=0.0, exclude=True, description="Seconds spent; kept out of serialized reports")

    @classmethod
    def from_rows(cls, rows: List[ReportRow], wall_time: float = 0.0) -> "ReportSummary":
        asserted = [row for row in rows if row.asserted]
        passed = sum(1 for row in asserted if row.passed)
        ratios = [
            abs(row.observed - row.main_term) / row.bound
            for row in rows
            if row.observed is not None and row.main_term is not None and row.bound
        ]
        return cls(
            rows=len(rows),
            asserted_rows=len(asserted),
            passed_rows=passed,
            pass_rate=passed / len(asserted) if asserted else 1.0,
            max_deviation_ratio=max(ratios) if ratios else None,
            wall_time=wall_time,
        )


class ExperimentConfig(BaseModel):
    """Configuration for one experiment run."""
    command: str = Field(default="verify", description="'verify' (seeded trials) or 'sweep'")
    experiment: str = Field(..., description="Experiment name")
    ring: str = Field(default="3^1^2:cyclic", description="Ring descriptor p^n^r:family")
    d: Optional[int] = Field(default=None, description="Dimension")
    k: Optional[int] = Field(default=None, description="Simplex order or matrix size")
    seed: int = Field(default=0, description="Master seed; determines all randomness")
    trials: int = Field(default=100, description="Number of seeded trials")
    sizes: List[Tuple[int, int]] = Field(default_factory=list, description="Set-size pairs")
    format: str = Field(default="csv", description="Output format: csv or json")
    graph: str = Field(default="product", description="Graph family: product or er")
    mode: str = Field(default="units_only", description="Simplex census mode")
    workers: int = Field(default=1, description="Thread pool size for trials")
    max_part: int = Field(default=20000, description="Graph part size guard")
    out: Optional[str] = Field(default=None, description="Report output path (stdout if omitted)")
    dump: Optional[str] = Field(default=None, description="Graph or spectrum dump path")

    @field_validator("command")
    @classmethod
    def _command(cls, v: str) -> str:
        if v not in ("verify", "sweep"):
            raise ValueError("command must be 'verify' or 'sweep'")
        return v

    @field_validator("format")
    @classmethod
    def _format(cls, v: str) -> str:
        if v not in ("csv", "json"):
            raise ValueError("format must be 'csv' or 'json'")
        return v

    @field_validator("graph")
    @classmethod
    def _graph(cls, v: str) -> str:
        if v not in ("product", "er"):
            raise ValueError("graph must be 'product' or 'er'")
        return v

    @field_validator("mode")
    @classmethod
    def _mode(cls, v: str) -> str:
        if v not in ("units_only", "all_values", "with_norms"):
            raise ValueError("mode must be units_only, all_values or with_norms")
        return v

    @field_validator("seed")
    @classmethod
    def _seed(cls, v: int) -> int:
        if not 0 <= v < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v

    @field_validator("trials", "workers", "max_part")
    @classmethod
    def _positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be positive")
        return v

    @field_validator("d", "k")
    @classmethod
    def _dimension(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v < 1:
            raise ValueError("must be positive")
        return v


class ExperimentReport(BaseModel):
    """Structured result of one theorem-verification run."""
    config: ExperimentConfig = Field(..., description="Echo of the configuration")
    rows: List[ReportRow] = Field(default_factory=list, description="Per-trial rows in trial order")
    summary: ReportSummary = Field(default_factory=ReportSummary, description="Aggregate results")
    metadata: Dict[str, Any] = Field(default_factory=dict, description="Experiment-specific extras")

    @property
    def all_passed(self) -> bool:
        return self.summary.passed_rows == self.summary.asserted_rows
