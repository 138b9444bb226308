import json
import subprocess
import sys

import numpy as np
import pytest

from cilab import catalog as cat
from cilab import linalg as la
from cilab import serialize as ser
from cilab.cli import main
from cilab.suites import RunConfig, build_report, case, report_csv, run_suites

e = la.unit


def write_subspace(path, vectors):
    path.write_text(ser.dumps(ser.subspace_to_json(la.span_orthonormal(vectors))))
    return str(path)


# ---------------------------------------------------------------- config

@pytest.mark.parametrize("kw", [{"n": 1}, {"budget": 0}, {"sign": 2}, {"suite": "bogus"},
                                {"format": "xml"}, {"jobs": 0}, {"seed": -1}])
def test_config_validation(kw):
    with pytest.raises(ValueError):
        RunConfig(**kw)


def test_report_config_omits_runtime_fields():
    cfg = RunConfig(output_path="x.json", jobs=3)
    assert "output_path" not in cfg.report_fields() and "jobs" not in cfg.report_fields()


def test_summary_logic():
    cfg = RunConfig()
    ok = build_report(cfg, [case("a", True), case("b", True, verdict="skip"), case("c", True, verdict="info")])
    assert ok["summary"]["ok"]
    bad = build_report(cfg, [case("a", True), case("b", False)])
    assert not bad["summary"]["ok"]
    assert bad["schema_version"] == 1


def test_csv_columns():
    rep = run_suites(RunConfig(suite="table", n=2))
    lines = report_csv(rep).splitlines()
    assert lines[0] == "row_id,n,verdict,max_residual,mutations_failed"
    assert len(lines) == 1 + 23
    row = lines[1].rsplit(",", 4)
    assert row[1] == "2" and row[2] == "pass" and row[4] == "20"


# ---------------------------------------------------------------- run

def test_run_table_n4(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["run", "--suite", "table", "--n", "4", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    verdicts = [c["verdict"] for c in rep["cases"]]
    assert verdicts.count("pass") == 19 and verdicts.count("skip") == 4
    assert rep["config"]["suite"] == "table"


def test_run_table_sign_flip_same_verdicts(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["run", "--suite", "table", "--n", "4", "--out", str(a)]) == 0
    assert main(["run", "--suite", "table", "--n", "4", "--sign", "-1", "--out", str(b)]) == 0
    va = [(c["id"], c["verdict"]) for c in json.loads(a.read_text())["cases"]]
    vb = [(c["id"], c["verdict"]) for c in json.loads(b.read_text())["cases"]]
    assert va == vb


def test_run_usage_errors(tmp_path, capsys):
    assert main(["run", "--n", "1"]) == 2
    assert main(["run", "--budget", "0"]) == 2
    assert main(["run", "--config", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "colour": "red"}')
    assert main(["run", "--config", str(bad)]) == 2
    with pytest.raises(SystemExit) as info:
        main(["run", "--suite", "nope"])
    assert info.value.code == 2


def test_run_from_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"suite": "jtheta", "n": 4, "seed": 3}))
    out = tmp_path / "r.csv"
    assert main(["run", "--config", str(cfg), "--format", "csv", "--out", str(out)]) == 0
    assert out.read_text().startswith("row_id,n,verdict")


def test_run_exit_one_on_failure(tmp_path, monkeypatch):
    import cilab.suites as suites

    monkeypatch.setattr(suites, "task_obstructions", lambda *a: [case("forced", False)])
    assert main(["run", "--suite", "obstructions", "--out", str(tmp_path / "r.json")]) == 1


def test_jobs_do_not_change_content(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["run", "--suite", "jets", "--n", "3", "--seed", "5"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--jobs", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


# ---------------------------------------------------------------- classify

def test_classify_complex_line(tmp_path, capsys):
    f = write_subspace(tmp_path / "w.json", [e(3, 0), 1j * e(3, 0)])
    assert main(["classify", f]) == 0
    tag = json.loads(capsys.readouterr().out)
    assert tag["variant"] == "c_k" and tag["k"] == 1


def test_classify_ex2_payload(tmp_path, capsys):
    t = cat.TypeTag("ex2", 0, 0, 0.2, {"frame": np.eye(4)[:, :3]})
    f = tmp_path / "w.json"
    f.write_text(ser.dumps(ser.subspace_to_json(cat.construct_type(t))))
    assert main(["classify", str(f)]) == 0
    tag = json.loads(capsys.readouterr().out)
    assert tag["variant"] == "ex2"
    back = ser.tag_from_json(tag)
    assert la.subspace_equal(cat.construct_type(back), cat.construct_type(t))


def test_classify_not_invariant(tmp_path, capsys):
    f = write_subspace(tmp_path / "w.json", [e(2, 0), e(2, 1) + 1j * e(2, 0)])
    assert main(["classify", f]) == 1
    err = capsys.readouterr().err
    assert "not curvature invariant" in err and "residual" in err


@pytest.mark.parametrize("text", ['{"n": 2', '{"n": 2}', '{"n": 2, "vectors": [[[1, 0]]]}', "[]"])
def test_classify_malformed(tmp_path, text):
    f = tmp_path / "w.json"
    f.write_text(text)
    assert main(["classify", str(f)]) == 2


def test_classify_zero_subspace(tmp_path):
    f = tmp_path / "w.json"
    f.write_text('{"n": 2, "vectors": []}')
    assert main(["classify", str(f)]) == 2


def test_module_entry_point(tmp_path):
    f = write_subspace(tmp_path / "w.json", [e(2, 0), 1j * e(2, 1)])
    r = subprocess.run([sys.executable, "-m", "cilab", "classify", f], capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["variant"] == "tr_kl"
