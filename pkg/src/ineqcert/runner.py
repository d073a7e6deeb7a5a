"""Batch drivers and report builders on top of the certification engines.

``verify_all`` runs every catalog record (inequalities and monotone claims)
and compares each outcome against the record's expectation.  Reports are
deterministic; wall-clock timings are kept in memory and on stdout but are
never written into output files, which stay byte-stable across runs.
"""

from __future__ import annotations

import concurrent.futures
import json
import time
from dataclasses import dataclass, field

from . import __version__
from .catalog import Catalog, load_builtin
from .certify import (
    Certificate,
    CertifyConfig,
    certificate_json_text,
    check_gap_claim,
    default_config,
    find_root,
    verify_inequality,
    verify_monotone,
    verify_value,
)
from .intervals import Interval
from .parser import parse_expr

__all__ = [
    "RecordOutcome",
    "RunReport",
    "verify_record",
    "verify_all",
    "constants_table",
    "roots_report",
    "gaps_report",
    "report_csv",
    "report_json_text",
]

F_X1_DSL = "(alpha - 1)/sinc(x) + xcot(x)"
F_X1_REFERENCE = 2.7219
VALUE_TOLERANCE = 5e-4


@dataclass(frozen=True)
class RecordOutcome:
    id: str
    kind: str  # "inequality" | "monotone"
    status: str
    expected_ok: bool
    cells: int
    depth: int
    seconds: float
    note: str | None = None


@dataclass(frozen=True)
class RunReport:
    version: str
    outcomes: tuple[RecordOutcome, ...]
    all_expected: bool
    total_seconds: float
    files: tuple[str, ...] = field(default_factory=tuple)


def verify_record(catalog: Catalog, record_id: str, cfg: CertifyConfig | None = None) -> Certificate:
    """Verify one record by id (inequality or monotone)."""
    if record_id in catalog.records:
        return verify_inequality(catalog.records[record_id], cfg)
    if record_id in catalog.monotones:
        return verify_monotone(catalog.monotones[record_id], cfg)
    from .catalog import NotFoundError

    raise NotFoundError(f"no record {record_id!r}")


def _run_one(args: tuple[str, CertifyConfig]) -> tuple[str, Certificate, float]:
    record_id, cfg = args
    catalog = load_builtin()
    t0 = time.perf_counter()
    cert = verify_record(catalog, record_id, cfg)
    return (record_id, cert, time.perf_counter() - t0)


def verify_all(
    catalog: Catalog,
    cfg: CertifyConfig | None = None,
    jobs: int = 1,
    out_dir: str | None = None,
) -> RunReport:
    """Certify every record once; expectation mismatches are flagged.

    With jobs > 1 records are distributed over processes; the report order
    and every certificate stay identical to a sequential run.
    """
    cfg = cfg or default_config()
    ids = list(catalog.records) + list(catalog.monotones)
    t0 = time.perf_counter()
    results: dict[str, tuple[Certificate, float]] = {}
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            for rid, cert, dt in pool.map(_run_one, [(rid, cfg) for rid in ids]):
                results[rid] = (cert, dt)
    else:
        for rid in ids:
            _, cert, dt = _run_one((rid, cfg))
            results[rid] = (cert, dt)

    outcomes: list[RecordOutcome] = []
    for rid in ids:
        cert, seconds = results[rid]
        if rid in catalog.records:
            kind = "inequality"
            ok = cert.status in catalog.records[rid].expected_outcomes()
        else:
            kind = "monotone"
            ok = cert.status == "proven"
        outcomes.append(
            RecordOutcome(rid, kind, cert.status, ok, len(cert.cells), cert.max_depth_used, seconds, cert.note)
        )
    all_ok = all(o.expected_ok for o in outcomes)

    files: list[str] = []
    if out_dir is not None:
        import os

        os.makedirs(out_dir, exist_ok=True)
        for rid in ids:
            path = os.path.join(out_dir, f"{rid}.json")
            with open(path, "w", encoding="utf-8") as f:
                f.write(certificate_json_text(results[rid][0]))
            files.append(path)
        report = RunReport(__version__, tuple(outcomes), all_ok, 0.0)
        report_path = os.path.join(out_dir, "report.json")
        with open(report_path, "w", encoding="utf-8") as f:
            f.write(report_json_text(report))
        files.append(report_path)
    total = time.perf_counter() - t0
    return RunReport(__version__, tuple(outcomes), all_ok, total, tuple(files))


def report_json_text(report: RunReport) -> str:
    """Byte-stable JSON (timings deliberately omitted)."""
    data = {
        "schema": "ineqcert.report/1",
        "version": report.version,
        "all_expected": report.all_expected,
        "outcomes": [
            {
                "id": o.id,
                "kind": o.kind,
                "status": o.status,
                "expected_ok": o.expected_ok,
                "cells": o.cells,
                "depth": o.depth,
                **({"note": o.note} if o.note else {}),
            }
            for o in report.outcomes
        ],
    }
    return json.dumps(data, indent=1) + "\n"


def report_csv(report: RunReport) -> str:
    lines = ["id,kind,status,expected_ok,cells,depth"]
    for o in report.outcomes:
        lines.append(f"{o.id},{o.kind},{o.status},{str(o.expected_ok).lower()},{o.cells},{o.depth}")
    return "\n".join(lines) + "\n"


def constants_table(catalog: Catalog) -> list[dict]:
    """id, defining expression, computed enclosure, printed decimal, |diff|."""
    rows = []
    for rec in catalog.constants.values():
        enc = catalog.resolve_constant(rec.id)
        mid = enc.mid
        diff = abs(mid - rec.decimal_reference)
        rows.append(
            {
                "id": rec.id,
                "definition": rec.definition_dsl,
                "enclosure_lo": enc.lo,
                "enclosure_hi": enc.hi,
                "reference": rec.decimal_reference,
                "abs_diff": diff,
                "within_1e-5": diff <= 1e-5,
                "notes": rec.notes,
            }
        )
    return rows


def roots_report(catalog: Catalog, cfg: CertifyConfig | None = None) -> dict:
    """Root enclosures plus the certified minimum value f(x1)."""
    cfg = cfg or default_config()
    out: dict = {"roots": []}
    x1_enc: Interval | None = None
    for rec in catalog.roots.values():
        enc = find_root(rec.function, rec.bracket, cfg.tol_root)
        mid = 0.5 * (enc.lo + enc.hi)
        out["roots"].append(
            {
                "id": rec.id,
                "function": rec.fn_dsl,
                "enclosure_lo": enc.lo,
                "enclosure_hi": enc.hi,
                "reference": rec.reference,
                "abs_diff": abs(mid - rec.reference),
                "pass": abs(mid - rec.reference) <= rec.tolerance,
            }
        )
        if rec.id == "root_x1":
            x1_enc = enc
    if x1_enc is not None:
        f = parse_expr(F_X1_DSL)
        ok, enc = verify_value(f, x1_enc, F_X1_REFERENCE, VALUE_TOLERANCE)
        out["value_at_x1"] = {
            "function": F_X1_DSL,
            "enclosure_lo": enc.lo,
            "enclosure_hi": enc.hi,
            "reference": F_X1_REFERENCE,
            "pass": ok,
        }
    return out


def gaps_report(catalog: Catalog, cfg: CertifyConfig | None = None) -> list[dict]:
    cfg = cfg or default_config()
    return [check_gap_claim(claim, cfg) for claim in catalog.gaps.values()]


def gaps_csv(rows: list[dict]) -> str:
    lines = ["id,kind,grid_max,rigorous_upper,reported_bound,pass"]
    for r in rows:
        lines.append(
            f"{r['id']},{r['kind']},{r['grid_max']:.9g},{r['rigorous_upper']:.9g},{r['reported_bound']:.9g},{str(r['pass']).lower()}"
        )
    return "\n".join(lines) + "\n"
