"""CLI behavior: commands, outputs, and the exit-code contract."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from ineqcert.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_list(runner):
    res = runner.invoke(main, ["list"])
    assert res.exit_code == 0
    assert "cusa_upper" in res.output
    assert "Theorem 1.1" in res.output


def test_list_filter(runner):
    res = runner.invoke(main, ["list", "--filter", "sec2"])
    assert res.exit_code == 0
    assert "lem2b_tanh" in res.output
    assert "thm1_upper" not in res.output


def test_show(runner):
    res = runner.invoke(main, ["show", "newineq2"])
    assert res.exit_code == 0
    assert "sharp at" in res.output
    assert "(1/sinc(x))^alpha" in res.output


def test_show_unknown_exits_64(runner):
    res = runner.invoke(main, ["show", "doesnotexist"])
    assert res.exit_code == 64


def test_verify_proven_writes_json(runner, tmp_path):
    out = tmp_path / "cert.json"
    res = runner.invoke(main, ["verify", "thm1_lower", "--json", str(out)])
    assert res.exit_code == 0
    data = json.loads(out.read_text())
    assert data["status"] == "proven"
    assert data["id"] == "thm1_lower"


def test_verify_inconclusive_exit_3(runner):
    res = runner.invoke(main, ["verify", "thm1_upper", "--depth", "3"])
    assert res.exit_code == 3


def test_verify_falsified_user_statement_exit_2(runner, tmp_path):
    f = tmp_path / "user.ineq"
    f.write_text("bad_claim: sinc(x) > 1 on [1/10, 1]\n")
    res = runner.invoke(main, ["verify", "bad_claim", "--catalog", str(f)])
    assert res.exit_code == 2
    assert "counterexample" in res.output


def test_check_exit_codes(runner, tmp_path):
    good = tmp_path / "good.ineq"
    good.write_text("sinc(x) <= 1 on [0, 1] sharp at {0}\n")
    assert runner.invoke(main, ["check", str(good)]).exit_code == 0
    bad = tmp_path / "bad.ineq"
    bad.write_text("sinc(x) > 1 on [1/10, 1]\n")
    assert runner.invoke(main, ["check", str(bad)]).exit_code == 2


def test_check_missing_file_exit_74(runner, tmp_path):
    res = runner.invoke(main, ["check", str(tmp_path / "absent.ineq")])
    assert res.exit_code == 74


def test_constants_table(runner):
    res = runner.invoke(main, ["constants"])
    assert res.exit_code == 0
    assert "const_alpha" in res.output
    assert "2.75194" in res.output


def test_roots(runner):
    res = runner.invoke(main, ["roots"])
    assert res.exit_code == 0
    assert "root_x0" in res.output and "f(x1)" in res.output
    assert "FAIL" not in res.output


def test_series_csv(runner):
    res = runner.invoke(main, ["series", "xcsc", "--terms", "3", "--format", "csv"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0] == "n,power,numerator,denominator"
    assert lines[1] == "0,0,1,1"
    assert lines[2] == "1,2,1,6"
    assert lines[3] == "2,4,7,360"


def test_series_unknown_name(runner):
    res = runner.invoke(main, ["series", "wat"])
    assert res.exit_code == 64


def test_parse_expression(runner):
    res = runner.invoke(main, ["parse", "sinc(x)^2 + xcot(x)"])
    assert res.exit_code == 0
    assert res.output.strip() == "sinc(x)^2 + xcot(x)"


def test_parse_error_exit_64(runner):
    res = runner.invoke(main, ["parse", "1 +"])
    assert res.exit_code == 64


def test_parse_check_file(runner, tmp_path):
    f = tmp_path / "claims.ineq"
    f.write_text("# comment\nmy: sinc(x) <= 1 on [0, 1] sharp at {0}\n")
    res = runner.invoke(main, ["parse", "--check", str(f)])
    assert res.exit_code == 0
    assert "ok:" in res.output


def test_byte_stable_certificates(runner, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert runner.invoke(main, ["verify", "thm0", "--json", str(a)]).exit_code == 0
    assert runner.invoke(main, ["verify", "thm0", "--json", str(b)]).exit_code == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_all_out_dir_depth_limited(runner, tmp_path):
    # a tiny depth keeps this fast; files must be written either way
    out = tmp_path / "certs"
    res = runner.invoke(main, ["verify-all", "--depth", "3", "--out", str(out)])
    assert res.exit_code == 1  # depth 3 cannot certify everything
    report = json.loads((out / "report.json").read_text())
    assert report["schema"] == "ineqcert.report/1"
    assert "seconds" not in json.dumps(report)
    assert (out / "thm1_lower.json").exists()
