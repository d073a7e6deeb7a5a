"""Pydantic request/response models for the verification service."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class FloatPair(BaseModel):
    """A float in both shortest round-trip decimal and hex form."""

    dec: str
    hex: str


class RecordSummary(BaseModel):
    id: str
    kind: str
    section: str
    statement: str
    citation: str
    expected: str
    truncated: bool = False
    original_domain: Optional[str] = None
    notes: Optional[str] = None


class RecordDetail(RecordSummary):
    relation: Optional[str] = None
    sharp_at: list[str] = Field(default_factory=list)
    delta: Optional[float] = None


class CellModel(BaseModel):
    lo: FloatPair
    hi: FloatPair
    enc_lo: FloatPair
    enc_hi: FloatPair


class CounterexampleModel(BaseModel):
    x: FloatPair
    lhs: FloatPair
    rhs: FloatPair


class LimitCheckModel(BaseModel):
    computed: list[FloatPair]
    expected: list[FloatPair]
    max_error: FloatPair
    ok: bool


class CertificateModel(BaseModel):
    schema_id: str = Field(alias="schema")
    id: str
    mode: str
    status: str
    config: dict
    domain: list[FloatPair]
    cells: list[CellModel]
    exclusions: list[list[FloatPair]]
    depth: int
    counterexample: Optional[CounterexampleModel] = None
    note: Optional[str] = None
    limits: Optional[dict[str, LimitCheckModel]] = None

    model_config = {"populate_by_name": True}


class VerifyRequest(BaseModel):
    depth: Optional[int] = None
    delta: Optional[float] = None


class VerifyAllRequest(BaseModel):
    jobs: int = 1
    depth: Optional[int] = None


class OutcomeModel(BaseModel):
    id: str
    kind: str
    status: str
    expected_ok: bool
    cells: int
    depth: int
    seconds: float
    note: Optional[str] = None


class RunReportModel(BaseModel):
    version: str
    all_expected: bool
    total_seconds: float
    outcomes: list[OutcomeModel]


class ConstantRow(BaseModel):
    id: str
    definition: str
    enclosure_lo: float
    enclosure_hi: float
    reference: float
    abs_diff: float
    within_tolerance: bool
    notes: Optional[str] = None


class RootRow(BaseModel):
    id: str
    function: str
    enclosure_lo: float
    enclosure_hi: float
    reference: float
    abs_diff: float
    passed: bool


class ValueRow(BaseModel):
    function: str
    enclosure_lo: float
    enclosure_hi: float
    reference: float
    passed: bool


class RootsReport(BaseModel):
    roots: list[RootRow]
    value_at_x1: Optional[ValueRow] = None


class GapRow(BaseModel):
    id: str
    kind: str
    grid_max: float
    argmax: float
    rigorous_upper: float
    reported_bound: float
    reported_bound_lo: Optional[float] = None
    passed: bool
    status: str
    citation: str


class SeriesCoefficient(BaseModel):
    n: int
    power: int
    numerator: str
    denominator: str


class SeriesResponse(BaseModel):
    name: str
    terms: int
    constant: SeriesCoefficient
    coefficients: list[SeriesCoefficient]
    radius: str


class ParseRequest(BaseModel):
    text: str
    statement: bool = False


class ParseResponse(BaseModel):
    ok: bool
    printed: Optional[str] = None
    error: Optional[str] = None
    offset: Optional[int] = None
    expected: list[str] = Field(default_factory=list)


class CheckRequest(BaseModel):
    statements: str  # one DSL statement per line, '#' comments


class CheckResult(BaseModel):
    id: str
    statement: str
    status: str
    counterexample: Optional[CounterexampleModel] = None


class CheckResponse(BaseModel):
    results: list[CheckResult]
    all_proven: bool


class MetaResponse(BaseModel):
    name: str
    version: str
    records: int
    monotones: int
    constants: int
