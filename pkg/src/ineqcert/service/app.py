"""FastAPI service exposing the catalog and verification engines.

The CLI is a thin client of this app (in-process by default, over HTTP when
pointed at a running server: ``uvicorn ineqcert.service.app:app``).
"""

from __future__ import annotations

import dataclasses
import tempfile

from fastapi import FastAPI, HTTPException, Query

from .. import __version__
from ..catalog import NotFoundError, load_builtin, load_statement_file
from ..certify import (
    CertifyConfig,
    certificate_to_json,
    default_config,
    verify_inequality,
)
from ..parser import ParseError, parse_expr, parse_inequality, print_stmt
from ..expr import print_expr
from ..runner import (
    constants_table,
    gaps_report,
    roots_report,
    verify_all,
    verify_record,
)
from ..series import SERIES_NAMES, series
from . import schemas

app = FastAPI(
    title="ineqcert",
    version=__version__,
    description=(
        "Certified trigonometric/hyperbolic inequality service: catalog "
        "inspection, branch-and-bound sign certificates, constants, roots, "
        "and reported gap bounds."
    ),
)


def _config(depth: int | None = None, delta: float | None = None) -> CertifyConfig:
    cfg = default_config()
    if depth is not None:
        cfg = dataclasses.replace(cfg, max_depth=depth)
    if delta is not None:
        cfg = dataclasses.replace(cfg, delta=delta)
    return cfg


def _record_detail(rec) -> schemas.RecordDetail:
    return schemas.RecordDetail(
        id=rec.id,
        kind="inequality",
        section=rec.section,
        statement=rec.dsl,
        citation=rec.citation,
        expected=rec.expected,
        truncated=rec.truncated,
        original_domain=rec.original_domain,
        notes=rec.notes,
        relation=rec.stmt.relation,
        sharp_at=[print_expr(p.expr) for p in rec.stmt.sharpness],
        delta=rec.delta,
    )


@app.get("/", response_model=schemas.MetaResponse)
def meta() -> schemas.MetaResponse:
    cat = load_builtin()
    return schemas.MetaResponse(
        name="ineqcert",
        version=__version__,
        records=len(cat.records),
        monotones=len(cat.monotones),
        constants=len(cat.constants),
    )


@app.get("/records", response_model=list[schemas.RecordSummary])
def list_records(section: str | None = Query(default=None, pattern="^sec[123]$")):
    cat = load_builtin()
    rows = [
        schemas.RecordSummary(
            id=r.id,
            kind="inequality",
            section=r.section,
            statement=r.dsl,
            citation=r.citation,
            expected=r.expected,
            truncated=r.truncated,
            original_domain=r.original_domain,
            notes=r.notes,
        )
        for r in cat.list(section)
    ]
    if section is None:
        rows += [
            schemas.RecordSummary(
                id=m.id,
                kind="monotone",
                section=m.section,
                statement=f"{m.fn_dsl} {m.direction} on ({print_expr(m.lo.expr)}, {print_expr(m.hi.expr)})",
                citation=m.citation,
                expected="provable",
                notes=m.notes,
            )
            for m in cat.monotones.values()
        ]
    else:
        rows += [
            schemas.RecordSummary(
                id=m.id,
                kind="monotone",
                section=m.section,
                statement=f"{m.fn_dsl} {m.direction} on ({print_expr(m.lo.expr)}, {print_expr(m.hi.expr)})",
                citation=m.citation,
                expected="provable",
                notes=m.notes,
            )
            for m in cat.monotones.values()
            if m.section == section
        ]
    return rows


@app.get("/records/{record_id}", response_model=schemas.RecordDetail)
def show_record(record_id: str):
    cat = load_builtin()
    if record_id in cat.records:
        return _record_detail(cat.records[record_id])
    if record_id in cat.monotones:
        m = cat.monotones[record_id]
        return schemas.RecordDetail(
            id=m.id,
            kind="monotone",
            section=m.section,
            statement=f"{m.fn_dsl} {m.direction} on ({print_expr(m.lo.expr)}, {print_expr(m.hi.expr)})",
            citation=m.citation,
            expected="provable",
            notes=m.notes,
        )
    raise HTTPException(status_code=404, detail=f"no record {record_id!r}")


@app.post("/verify/{record_id}", response_model=schemas.CertificateModel)
def verify(record_id: str, req: schemas.VerifyRequest | None = None):
    cat = load_builtin()
    req = req or schemas.VerifyRequest()
    cfg = _config(req.depth, req.delta)
    try:
        cert = verify_record(cat, record_id, cfg)
    except NotFoundError:
        raise HTTPException(status_code=404, detail=f"no record {record_id!r}") from None
    return certificate_to_json(cert)


@app.post("/verify-all", response_model=schemas.RunReportModel)
def verify_all_endpoint(req: schemas.VerifyAllRequest | None = None):
    cat = load_builtin()
    req = req or schemas.VerifyAllRequest()
    cfg = _config(req.depth)
    report = verify_all(cat, cfg, jobs=req.jobs)
    return schemas.RunReportModel(
        version=report.version,
        all_expected=report.all_expected,
        total_seconds=report.total_seconds,
        outcomes=[
            schemas.OutcomeModel(
                id=o.id,
                kind=o.kind,
                status=o.status,
                expected_ok=o.expected_ok,
                cells=o.cells,
                depth=o.depth,
                seconds=o.seconds,
                note=o.note,
            )
            for o in report.outcomes
        ],
    )


@app.get("/constants", response_model=list[schemas.ConstantRow])
def constants():
    cat = load_builtin()
    return [
        schemas.ConstantRow(
            id=r["id"],
            definition=r["definition"],
            enclosure_lo=r["enclosure_lo"],
            enclosure_hi=r["enclosure_hi"],
            reference=r["reference"],
            abs_diff=r["abs_diff"],
            within_tolerance=r["within_1e-5"],
            notes=r["notes"],
        )
        for r in constants_table(cat)
    ]


@app.get("/roots", response_model=schemas.RootsReport)
def roots():
    cat = load_builtin()
    rep = roots_report(cat)
    rows = [
        schemas.RootRow(
            id=r["id"],
            function=r["function"],
            enclosure_lo=r["enclosure_lo"],
            enclosure_hi=r["enclosure_hi"],
            reference=r["reference"],
            abs_diff=r["abs_diff"],
            passed=r["pass"],
        )
        for r in rep["roots"]
    ]
    value = None
    if "value_at_x1" in rep:
        v = rep["value_at_x1"]
        value = schemas.ValueRow(
            function=v["function"],
            enclosure_lo=v["enclosure_lo"],
            enclosure_hi=v["enclosure_hi"],
            reference=v["reference"],
            passed=v["pass"],
        )
    return schemas.RootsReport(roots=rows, value_at_x1=value)


@app.get("/gaps", response_model=list[schemas.GapRow])
def gaps():
    cat = load_builtin()
    return [
        schemas.GapRow(
            id=r["id"],
            kind=r["kind"],
            grid_max=r["grid_max"],
            argmax=r["argmax"],
            rigorous_upper=r["rigorous_upper"],
            reported_bound=r["reported_bound"],
            reported_bound_lo=r.get("reported_bound_lo"),
            passed=r["pass"],
            status=r["status"],
            citation=r["citation"],
        )
        for r in gaps_report(cat)
    ]


@app.get("/series/{name}", response_model=schemas.SeriesResponse)
def series_endpoint(name: str, terms: int = Query(default=28, ge=1, le=200)):
    if name not in SERIES_NAMES:
        raise HTTPException(status_code=404, detail=f"unknown series {name!r}; expected one of {SERIES_NAMES}")
    s = series(name, terms)
    return schemas.SeriesResponse(
        name=s.name,
        terms=s.terms,
        constant=schemas.SeriesCoefficient(
            n=0, power=0, numerator=str(s.constant_term.numerator), denominator=str(s.constant_term.denominator)
        ),
        coefficients=[
            schemas.SeriesCoefficient(
                n=i + 1, power=2 * (i + 1), numerator=str(c.numerator), denominator=str(c.denominator)
            )
            for i, c in enumerate(s.coeffs)
        ],
        radius="pi",
    )


@app.post("/parse", response_model=schemas.ParseResponse)
def parse(req: schemas.ParseRequest):
    try:
        if req.statement:
            stmt = parse_inequality(req.text)
            return schemas.ParseResponse(ok=True, printed=print_stmt(stmt))
        e = parse_expr(req.text)
        return schemas.ParseResponse(ok=True, printed=print_expr(e))
    except ParseError as exc:
        return schemas.ParseResponse(
            ok=False, error=str(exc), offset=exc.offset, expected=list(exc.expected)
        )


@app.post("/check", response_model=schemas.CheckResponse)
def check(req: schemas.CheckRequest):
    with tempfile.NamedTemporaryFile("w", suffix=".ineq", delete=False) as f:
        f.write(req.statements)
        path = f.name
    try:
        records = load_statement_file(path)
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    results = []
    for rec in records:
        cert = verify_inequality(rec)
        ce = None
        if cert.counterexample is not None:
            x, lhs, rhs = cert.counterexample
            ce = schemas.CounterexampleModel(
                x=_fp(x), lhs=_fp(lhs), rhs=_fp(rhs)
            )
        results.append(
            schemas.CheckResult(id=rec.id, statement=rec.dsl, status=cert.status, counterexample=ce)
        )
    return schemas.CheckResponse(
        results=results, all_proven=all(r.status.startswith("proven") for r in results)
    )


def _fp(x: float) -> schemas.FloatPair:
    return schemas.FloatPair(dec=repr(x), hex=float(x).hex())
