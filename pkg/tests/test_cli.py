import csv
import io
import json

import pytest

from smallcover.cli import run
from smallcover.coloring import Coloring, is_valid
from smallcover.prism import build_prism


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_classes_formula_plain():
    code, out, _ = call("classes", "--m", "4", "--method", "formula")
    assert code == 0
    assert out == "259\n"


@pytest.mark.parametrize("method", ["formula", "enumerate", "burnside"])
def test_count_colorings_methods(method):
    code, out, _ = call("count-colorings", "--m", "5", "--method", method)
    assert (code, out) == (0, "10920\n")


@pytest.mark.parametrize("method", ["formula", "enumerate", "burnside"])
def test_nu_methods(method):
    assert call("nu", "--m", "4", "--method", method)[:2] == (0, "2016\n")


def test_verify_agrees():
    code, out, _ = call("verify", "--m", "5", "--format", "json", "--stable")
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    classes = {r["method"]: r["value"] for r in payload["reports"] if r["quantity"] == "classes"}
    assert classes == {"formula": "882", "burnside": "882", "enumerate": "882"}
    cols = {r["value"] for r in payload["reports"] if r["quantity"] == "colorings"}
    assert cols == {str(168 * 65)}


def test_verify_detects_disagreement(monkeypatch):
    import smallcover.cli as cli
    monkeypatch.setattr(cli, "e_formula", lambda m: 1)
    code, _, err = call("verify", "--m", "3")
    assert code == 4
    assert "mismatch" in err


def test_table_csv():
    code, out, _ = call("table", "--from", "3", "--to", "10", "--quantity", "classes", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0].keys()) == ["m", "quantity", "method", "value"]
    assert [int(r["value"]) for r in rows] == [98, 259, 882, 4200, 9114, 35406, 107086, 394632]


def test_json_schema_and_stable():
    code, out, _ = call("classes", "--m", "6", "--format", "json")
    rep = json.loads(out)
    assert set(rep) == {"m", "method", "quantity", "value", "elapsed_ms", "tool_version"}
    assert rep["value"] == "4200"
    code, out, _ = call("classes", "--m", "6", "--format", "json", "--stable")
    assert set(json.loads(out)) == {"m", "method", "quantity", "value"}


def test_stable_output_is_byte_identical():
    a = call("fixed-counts", "--m", "4", "--method", "burnside", "--format", "json", "--stable")
    b = call("fixed-counts", "--m", "4", "--method", "burnside", "--format", "json", "--stable")
    assert a == b


def test_fixed_counts_formula_vs_burnside():
    for m in ("4", "6"):
        f = json.loads(call("fixed-counts", "--m", m, "--format", "json", "--stable")[1])
        b = json.loads(call("fixed-counts", "--m", m, "--method", "burnside", "--format", "json", "--stable")[1])
        assert f["details"] == b["details"]


def test_orbits_representatives_valid():
    code, out, _ = call("orbits", "--m", "3", "--method", "enumerate", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    reps = rep["details"]["representatives"]
    assert rep["value"] == "98" and len(reps) == 98
    cx = build_prism(3)
    assert all(len(r) == 5 and is_valid(cx, Coloring(tuple(r))) for r in reps)
    assert sum(rep["details"]["orbit_sizes"]) == 840


def test_exit_codes():
    assert call("classes", "--m", "2")[0] == 2
    assert call("classes")[0] == 2
    assert call("bogus")[0] == 2
    assert call("classes", "--m", "13", "--method", "burnside")[0] == 3
    assert call("count-colorings", "--m", "6", "--method", "enumerate", "--budget", "5")[0] == 3
    assert call("count-colorings", "--m", "6", "--method", "enumerate", "--budget", "5", "--force")[0] == 0
    assert call("orbits", "--m", "9")[0] == 3


def test_budget_env(monkeypatch):
    monkeypatch.setenv("SMALLCOVER_BUDGET", "4")
    assert call("nu", "--m", "5", "--method", "enumerate")[0] == 3
    assert call("nu", "--m", "5", "--method", "enumerate", "--budget", "5")[0] == 0
    monkeypatch.setenv("SMALLCOVER_BUDGET", "lots")
    assert call("nu", "--m", "5")[0] == 2


def test_out_file(tmp_path):
    target = tmp_path / "r.csv"
    code, out, _ = call("table", "--from", "3", "--to", "5", "--format", "csv", "--out", str(target))
    assert code == 0
    assert target.read_text() == out
    assert [p.name for p in tmp_path.iterdir()] == ["r.csv"]


def test_threads_flag():
    assert call("count-colorings", "--m", "9", "--method", "enumerate", "--threads", "0")[1] == "2024904\n"
