import io
import json

import pytest

from qeuler import QBase, qeuler_closed
from qeuler.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


# -- eval ----------------------------------------------------------------------


def test_eval_qeuler_text():
    code, out = run("eval", "qeuler", "--n", "0", "--r", "1", "--x", "0", "--q", "0.5", "--format", "text")
    assert code == 0 and out.strip() == "1.0"


def test_eval_ssum_exact():
    code, out = run("eval", "ssum", "--n", "3", "--i", "0", "--r", "1", "--a", "3",
                    "--q", "1/2", "--backend", "exact")
    row = json_lines(out)[0]
    assert code == 0
    assert row["value"]["value"] == "241/256"
    assert row["value"]["exact"] == "t^8 - t^4 + 1"


def test_eval_euler_classical():
    code, out = run("eval", "euler-classical", "--n", "1", "--r", "1", "--format", "text")
    assert code == 0 and out.strip() == "x - 1/2"


def test_eval_methods_agree():
    vals = []
    for method in ("closed", "single", "multi"):
        code, out = run("eval", "qeuler", "--n", "3", "--r", "2", "--x", "1/2", "--q", "0.3",
                        "--method", method)
        assert code == 0
        vals.append(complex(*json_lines(out)[0]["value"].values()))
    assert max(abs(v - vals[0]) for v in vals) < 1e-12


def test_eval_zeta_reports_tail():
    code, out = run("eval", "zeta", "--s", "2", "--r", "2", "--x", "1", "--q", "0.5", "--abs-tol", "1e-14")
    row = json_lines(out)[0]
    assert code == 0 and row["tail_bound"] <= 1e-14 and row["terms"] <= 200


def test_eval_exact_text():
    code, out = run("eval", "qeuler", "--n", "1", "--r", "1", "--x", "0", "--backend", "exact",
                    "--q", "1/2", "--format", "text")
    assert code == 0 and out.strip() == "-t/(t^2 + 1) = -2/5"


# -- verify --------------------------------------------------------------------


def test_verify_thm2_exact_all_pass():
    code, out = run("verify", "thm2", "--a", "3", "--b", "5", "--n", "0..4", "--r", "1..2", "--x", "1",
                    "--q", "1/2", "--backend", "exact")
    rows = json_lines(out)
    summary = rows[-1]["summary"]
    assert code == 0
    assert summary == {"identity": "thm2", "count": 10, "passed": 10, "failed": 0,
                       "max_abs_diff": 0.0, "all_exact": True}
    for row in rows[:-1]:
        assert row["schema"] == "qeuler.report/1"
        assert set(row) == {"schema", "identity", "params", "q", "lhs", "rhs", "abs_diff",
                            "exact_zero", "tol", "pass"}
        assert set(row["params"]) == {"a", "b", "n", "r", "x"}
        assert row["exact_zero"] is True


def test_verify_a_equals_b():
    code, out = run("verify", "thm2", "--a", "3", "--b", "3", "--n", "0..2", "--r", "1", "--x", "0,1",
                    "--q", "1/2", "--backend", "exact")
    assert code == 0 and json_lines(out)[-1]["summary"]["failed"] == 0


def test_verify_eq5_float():
    code, out = run("verify", "eq5", "--n", "0..8", "--r", "1..4", "--x", "1", "--q", "0.5")
    summary = json_lines(out)[-1]["summary"]
    assert code == 0 and summary["count"] == 36 and summary["max_abs_diff"] < 1e-9


@pytest.mark.parametrize("backend,q", [("exact", "1/2"), ("float", "0.5")])
def test_verify_perturbed_fails(backend, q):
    code, out = run("verify", "thm2", "--a", "1", "--b", "3", "--n", "0..2", "--r", "1", "--x", "1",
                    "--q", q, "--backend", backend, "--perturb", "1e-3")
    rows = json_lines(out)
    assert code == 1
    assert rows[-1]["summary"]["failed"] == 3
    assert all(r["params"]["perturbed_rhs"] == 1e-3 for r in rows[:-1])


@pytest.mark.parametrize("argv", [
    ["verify", "thm2", "--a", "2", "--b", "3", "--n", "1", "--r", "1", "--x", "1"],
    ["verify", "eq5", "--n", "1", "--r", "1", "--x", "0"],
    ["verify", "eq5", "--n", "1", "--r", "1"],
    ["verify", "eq5", "--n", "1", "--r", "1", "--x", "1", "--max-terms", "3"],
    ["verify", "eq9", "--n", "1", "--r", "1", "--x", "1/3", "--y", "1", "--backend", "exact",
     "--q", "1/2", "--D", "2"],
    ["verify", "thm1", "--a", "1", "--b", "3", "--s", "2", "--r", "1", "--x", "1", "--backend", "exact",
     "--q", "1/2"],
    ["eval", "qeuler", "--q", "banana"],
    ["verify", "nonsense"],
])
def test_error_exit_code(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    err = capsys.readouterr().err.strip().splitlines()[-1]
    if err.startswith("{"):
        payload = json.loads(err)
        assert set(payload) == {"error", "message"} and payload["message"]


def test_unchecked_even_parameters_fail():
    code, out = run("verify", "thm2", "--a", "1", "--b", "2", "--n", "0..3", "--r", "1", "--x", "1",
                    "--q", "1/2", "--backend", "exact", "--unchecked")
    assert code == 1 and json_lines(out)[-1]["summary"]["failed"] == 4


def test_verify_sample_is_seeded():
    argv = ["verify", "eq9", "--n", "0..5", "--r", "1..3", "--x", "1,2", "--y", "0,1",
            "--q", "1/3", "--backend", "exact", "--sample", "5", "--seed", "7"]
    a, b = run(*argv), run(*argv)
    assert a == b and json_lines(a[1])[-1]["summary"]["count"] == 5


def test_verify_csv():
    code, out = run("verify", "eq16", "--m", "0..1", "--n", "1", "--r", "1", "--x", "1", "--y", "0",
                    "--q", "1/3", "--backend", "exact", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("schema,identity,params.m")
    assert len(lines) == 4 and json.loads(lines[-1])["summary"]["passed"] == 2


def test_tolerance_from_environment(monkeypatch):
    argv = ["verify", "thm2", "--a", "1", "--b", "3", "--n", "1", "--r", "1", "--x", "1", "--q", "0.5",
            "--perturb", "1e-3"]
    assert run(*argv)[0] == 1
    monkeypatch.setenv("QEULER_TOL", "0.01")
    code, out = run(*argv)
    assert code == 0 and json_lines(out)[0]["tol"] == 0.01


def test_config_file(tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[qeuler]\nbackend = exact\nq = 1/2\nformat = text\n")
    code, out = run("eval", "ssum", "--n", "3", "--a", "3", "--config", str(cfg))
    assert code == 0 and out.strip() == "t^8 - t^4 + 1 = 241/256"
    # flags override the file
    code, out = run("eval", "ssum", "--n", "3", "--a", "3", "--config", str(cfg), "--q", "1/3")
    assert out.strip().endswith("= 6481/6561")


def test_config_file_errors(tmp_path, capsys):
    bad = tmp_path / "bad.ini"
    bad.write_text("[qeuler]\ncolour = blue\n")
    assert run("eval", "ssum", "--config", str(bad))[0] == 2
    assert run("eval", "ssum", "--config", str(tmp_path / "missing.ini"))[0] == 2


# -- table ---------------------------------------------------------------------


def test_table_row_count(tmp_path):
    path = tmp_path / "t.json"
    code, out = run("table", "qeuler", "--n", "0..5", "--r", "1", "--x", "0", "--q", "0.5", "-o", str(path))
    assert code == 0 and json.loads(out)["rows"] == 6
    doc = json.loads(path.read_text())
    assert doc["schema"] == "qeuler.table/1" and len(doc["rows"]) == 6
    assert [row["n"] for row in doc["rows"]] == list(range(6))


# values from a symbolic summation of the defining series
GOLDEN_EXACT_CSV = """\
n,r,x,exact,value
0,1,0,1,1
1,1,0,-t/(t^2 + 1),-2/5
2,1,0,(t^2 - t)/(t^4 - t^3 + 2*t^2 - t + 1),-4/15
"""


def test_table_exact_golden(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        code, _ = run("table", "qeuler", "--n", "0..2", "--r", "1", "--x", "0", "--q", "1/2",
                      "--backend", "exact", "--format", "csv", "-o", str(p))
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_text() == GOLDEN_EXACT_CSV


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_table_float_round_trip(tmp_path, fmt):
    import csv

    path = tmp_path / f"t.{fmt}"
    code, _ = run("table", "qeuler", "--n", "0..5", "--r", "2", "--x", "1/2", "--q", "0.4+0.3i",
                  "--format", fmt, "-o", str(path))
    assert code == 0
    if fmt == "json":
        rows = json.loads(path.read_text())["rows"]
    else:
        rows = list(csv.DictReader(io.StringIO(path.read_text())))
    q = QBase.float(0.4 + 0.3j)
    for row in rows:
        v = qeuler_closed(int(row["n"]), 2, 0.5, q)
        assert complex(float(row["re"]), float(row["im"])) == v


def test_table_other_kinds(tmp_path):
    for argv in (["ssum", "--n", "0..2", "--a", "3", "--r", "1,2", "--q", "1/2", "--backend", "exact"],
                 ["zeta", "--s", "2,1+1i", "--r", "1", "--x", "1", "--q", "0.5"],
                 ["euler-classical", "--n", "0..3", "--r", "1..2"]):
        code, out = run("table", *argv, "-o", str(tmp_path / "x.json"))
        assert code == 0 and json.loads(out)["rows"] > 0


def test_version(capsys):
    assert run("--version")[0] == 0
