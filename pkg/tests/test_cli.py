import json

import pytest
from click.testing import CliRunner

from uat.cli import cli


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, list(args), catch_exceptions=False)

    return invoke


def report(result):
    data = json.loads(result.output)
    assert data["schema"] == 1 and data["exit_code"] == result.exit_code
    return data


def test_ua_refute_exit_codes(run):
    res = run("ua-refute", "circle_qi.ideal", "--coeff-pool", "gauss", "--json")
    assert res.exit_code == 2
    data = report(res)
    assert data["witnesses"][0]["kind"] == "ua" and data["witnesses"][0]["element"] == "X + i*Y"
    res = run("ua-refute", "circle_q.ideal", "--max-deg", "2")
    assert res.exit_code == 0 and "exhausted" in res.output


def test_input_errors_exit_one(run, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("field: QQ\nvars: X\nideal: X^^2\n")
    res = run("gb", str(bad))
    assert res.exit_code == 1 and "line 3" in res.output
    assert run("gb", "no_such_file.ideal").exit_code == 1
    assert run("ua-refute", "circle_q.ideal", "--max-deg", "-1").exit_code == 1
    assert run("--max-tower-depth", "0", "gb", "circle_qi.ideal").exit_code == 1


def test_gb_member_classify(run):
    res = run("gb", "circle_qi.ideal", "--json")
    assert res.exit_code == 0 and report(res)["result"]["basis"]
    res = run("member", "xy_axes.ideal", "X^2*Y", "--json")
    assert res.exit_code == 0
    res = run("classify", "circle_qi.ideal", "X + i*Y", "--json")
    data = report(res)
    assert data["result"]["verdict"] == "unit"
    assert any(w["kind"] == "inverse" for w in data["witnesses"])


def test_finite_decide_and_oracle(run):
    assert run("finite-decide", "points_01_Q.pts").exit_code == 2
    assert run("finite-decide", "points_01_F2.pts").exit_code == 0
    assert run("oracle", "Zmod(8)").exit_code == 0
    assert run("oracle", "--ideal", "dual_numbers_f2.ideal").exit_code == 0


def test_decompose_and_audit(run, tmp_path):
    res = run("decompose", "two_points_q.ideal", "--json")
    assert res.exit_code == 0
    data = report(res)
    assert data["certificates"]
    path = tmp_path / "r.json"
    path.write_text(res.output)
    assert run("self-audit", str(path)).exit_code == 0
    cof = data["certificates"][0]["certificate"]["cofactors"][0]
    cof["a"] = cof["a"] + " + 1"
    path.write_text(json.dumps(data))
    assert run("self-audit", str(path)).exit_code == 4


def test_audit_rejects_tampered_witnesses(run, tmp_path):
    res = run("ua-refute", "circle_qi.ideal", "--coeff-pool", "gauss", "--json")
    data = report(res)
    path = tmp_path / "w.json"
    path.write_text(res.output)
    assert run("self-audit", str(path)).exit_code == 0
    data["witnesses"][0]["element"] = "X"
    path.write_text(json.dumps(data))
    assert run("self-audit", str(path)).exit_code == 4
    res = run("finite-decide", "points_01_Q.pts", "--json")
    data = report(res)
    fs = [w for w in data["witnesses"] if w["kind"] == "finite_set"]
    assert fs
    path.write_text(res.output)
    assert run("self-audit", str(path)).exit_code == 0
    fs[0]["element"] = "X"  # vanishes at 0
    path.write_text(json.dumps(data))
    assert run("self-audit", str(path)).exit_code == 4
    path.write_text("{ not json")
    assert run("self-audit", str(path)).exit_code == 1


def test_paper_examples_command(run):
    res = run("paper-examples", "--name", "phi-psi", "--name", "refconn", "--n", "10")
    assert res.exit_code == 0 and res.output.count("PASS") == 2


def test_probe_and_localize(run, tmp_path):
    res = run("extend-probe", "circle_q.ideal", "--extend", "t^2+1")
    assert res.exit_code == 2
    out = tmp_path / "loc.ideal"
    res = run("localize", "xy_axes.ideal", "X", "--write", str(out))
    assert res.exit_code == 0 and out.exists()
    assert run("gb", str(out)).exit_code == 0


def test_data_and_backends(run):
    res = run("data")
    assert "circle_qi.ideal" in res.output
    assert "numpy" in run("backends").output
