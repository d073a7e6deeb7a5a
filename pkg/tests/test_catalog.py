"""Catalog integrity: completeness, parsing, constants, evenness."""

from __future__ import annotations

import math
import random

import pytest

from ineqcert.catalog import NotFoundError, load_statement_file
from ineqcert.expr import eval_point
from ineqcert.parser import parse_inequality, print_stmt

REQUIRED_IDS = [
    "adamovic_lower",
    "cusa_upper",
    "lazarevic_lower",
    "hyp_cusa_upper",
    "wilker",
    "huygens",
    "wu_srivastava",
    "thm1_lower",
    "thm1_upper",
    "thm0",
    "newineq1",
    "newineq2",
    "newineq1_converse",
    "thm2_lower",
    "thm2_upper",
    "thm4_chain_left",
    "thm4_chain_right",
    "yang",
    "thm2702_lower",
    "thm2702_upper",
    "lem2b_tanh",
    "lem2b_hyp_left",
    "lem2b_hyp_right",
    "sinxnew_left",
    "sinxnew_right",
    "jozs_lower",
    "hyp_wu_srivastava",
    "thm2201_1_lower",
    "thm2201_1_upper",
    "thm2201_2_lower",
    "thm2201_2_upper",
    "kober_lower",
    "kober_upper",
    "proof_aux_cos43",
]

REQUIRED_CONSTANTS = ["const_alpha", "const_k", "const_alpha1", "const_alpha2", "const_thm2702_alpha"]

REQUIRED_MONOTONES = [
    "mono_f1",
    "mono_f6",
    "mono_f_alpha",
    "mono_f10",
    "mono_f13",
    "mono_thm2702",
    "mono_jozs",
]


def test_catalog_completeness(catalog):
    for rid in REQUIRED_IDS:
        assert rid in catalog.records, rid
    for rid in REQUIRED_CONSTANTS:
        assert rid in catalog.constants, rid
    for rid in REQUIRED_MONOTONES:
        assert rid in catalog.monotones, rid
    assert "root_x0" in catalog.roots and "root_x1" in catalog.roots


def test_every_record_parses_and_roundtrips(catalog):
    for rec in catalog.records.values():
        stmt = parse_inequality(rec.dsl)
        assert stmt == rec.stmt
        assert parse_inequality(print_stmt(stmt)) == stmt
        assert rec.citation


def test_get_and_notfound(catalog):
    rec = catalog.get("thm1_upper")
    assert "sinc(x)" in rec.dsl
    assert rec.stmt.sharpness[0].value == 0.0
    with pytest.raises(NotFoundError):
        catalog.get("nonexistent")


def test_constant_references(catalog):
    diffs = {}
    for rid in REQUIRED_CONSTANTS:
        enc = catalog.resolve_constant(rid)
        assert enc.width <= 1e-12, rid
        rec = catalog.get_constant(rid)
        diffs[rid] = abs(enc.mid - rec.decimal_reference)
    assert diffs["const_alpha"] <= 1e-5
    assert diffs["const_k"] <= 1e-5
    assert diffs["const_alpha1"] <= 1e-5
    assert diffs["const_thm2702_alpha"] <= 1e-5
    # the printed decimal for alpha2 is itself off by 1.64e-5 from its
    # defining relation 6/pi = 2^alpha2 (flagged on the record)
    assert 1.5e-5 <= diffs["const_alpha2"] <= 1.8e-5
    assert catalog.get_constant("const_alpha2").notes


def test_known_constant_values(catalog):
    alpha = catalog.resolve_constant("const_alpha")
    assert alpha.contains(math.pi / (math.pi - 2))
    k = catalog.resolve_constant("const_k")
    assert abs(k.mid - 3.46505) <= 1e-5
    a1 = catalog.resolve_constant("const_alpha1")
    assert abs(a1.mid - 1.04198) <= 1e-5
    a = catalog.resolve_constant("const_thm2702_alpha")
    assert abs(a.mid - (-0.00328)) <= 1e-5


def test_records_are_even(catalog):
    """Each record marked even satisfies diff(x) == diff(-x) at samples."""
    rng = random.Random(31)
    for rec in catalog.records.values():
        if not rec.even:
            continue
        diff = rec.stmt.difference()
        hi = min(rec.stmt.hi.value, 1.5)
        for _ in range(5):
            x = rng.uniform(0.05, max(0.1, hi * 0.9))
            a = eval_point(diff, x, dps=30)
            b = eval_point(diff, -x, dps=30)
            assert abs(a - b) <= 1e-20 * max(1, abs(a)), (rec.id, x)


def test_sections(catalog):
    secs = {r.section for r in catalog.records.values()}
    assert secs == {"sec1", "sec2", "sec3"}
    sec2 = catalog.list("sec2")
    assert {r.id for r in sec2} == {"lem2b_tanh", "lem2b_hyp_left", "lem2b_hyp_right"}


def test_truncated_records_flagged(catalog):
    for rid in ("lazarevic_lower", "yang", "wilker", "cusa_upper_global", "thm4_chain_right"):
        assert catalog.records[rid].truncated, rid
    for rid in ("thm1_upper", "thm0", "kober_lower"):
        assert not catalog.records[rid].truncated, rid


def test_statement_file_loading(tmp_path):
    p = tmp_path / "claims.ineq"
    p.write_text(
        "# demo statements\n"
        "my_claim: sinc(x) <= 1 on [0, 1]\n"
        "x >= x on [0, 1]\n"
    )
    records = load_statement_file(str(p))
    assert [r.id for r in records] == ["my_claim", "user_2"]
    assert records[0].section == "user"


def test_statement_file_error_reports_line(tmp_path):
    p = tmp_path / "bad.ineq"
    p.write_text("sinc(x) <\n")
    with pytest.raises(ValueError) as err:
        load_statement_file(str(p))
    assert "bad.ineq:1" in str(err.value)
