import json
import subprocess
import sys

import pytest

from cupcsa import catalog
from cupcsa.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_timings(text):
    doc = json.loads(text)
    doc.pop("timings", None)
    return doc


def test_examples_list(capsys):
    code, out, _ = run(capsys, "examples", "list")
    assert code == 0
    assert [line.split("\t")[0] for line in out.splitlines()] == list(catalog.CATALOG)


def test_examples_emit_matches_golden(capsys):
    code, out, _ = run(capsys, "examples", "emit", "quat_2_3")
    assert code == 0 and out == catalog.emit("quat_2_3")


def test_emit_then_validate(capsys, tmp_path):
    _, out, _ = run(capsys, "examples", "emit", "kummer3_2_3")
    path = tmp_path / "k.json"
    path.write_text(out)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0 and "minimal" in out


def test_usage_errors(capsys):
    assert run(capsys, "examples", "emit", "nope")[0] == 2
    assert run(capsys, "examples", "emit")[0] == 2
    assert run(capsys, "split2")[0] == 2
    assert run(capsys, "split2", "--pair", "0", "3")[0] == 2
    assert run(capsys, "oracle", "quat_2_3", "--corrupt", "5", "0")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_validate_truncated(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(catalog.emit("quat_2_3")[:100])
    code, _, err = run(capsys, "validate", str(path))
    assert code == 1 and "SchemaError" in err


def test_validate_padded_warns(capsys):
    code, out, _ = run(capsys, "validate", "quat_padded_2_3_5")
    assert code == 0 and "NonMinimal" in out and "reduce" in out


def test_reduce_writes_valid_datum(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    assert run(capsys, "reduce", "quat_padded_2_3_5", "--out", str(out_path))[0] == 0
    code, out, _ = run(capsys, "validate", str(out_path))
    assert code == 0 and "minimal" in out


def test_build_quat_report(capsys, tmp_path):
    rep = tmp_path / "r.json"
    code, _, _ = run(capsys, "build", "quat_2_3", "--report", str(rep))
    assert code == 0
    doc = json.loads(rep.read_text())
    assert doc["context"]["c_in_K"] == [[["0"], ["0"]], [["0"], ["-1"]]]
    assert doc["verdicts"]["center"]["status"] == "pass"
    assert all(v["status"] in ("pass", "fail", "skipped") and "reason" in v
               for v in doc["verdicts"].values())
    assert "timings" in doc


def test_build_equal3_trivial(capsys):
    code, out, _ = run(capsys, "build", "equal3")
    doc = json.loads(out)
    assert code == 0
    assert doc["class"] == "trivial" and doc["algebra"] is None


def test_split2(capsys):
    code, out, _ = run(capsys, "split2", "quat_equal_2")
    doc = json.loads(out)
    assert code == 0
    assert doc["presentation"] == {"a": "2", "b": "-1"}
    assert doc["splitness"]["split"] and doc["splitness"]["witness"] == [1, 1, 1]
    code, out, _ = run(capsys, "split2", "--pair", "2", "3")
    doc = json.loads(out)
    assert doc["splitness"]["symbols"] == {"inf": 1, "2": -1, "3": -1}


def test_oracle_and_corruption(capsys):
    code, out, _ = run(capsys, "oracle", "quat_2_3")
    assert code == 0 and json.loads(out)["verdicts"]["oracle"]["status"] == "pass"
    code, out, _ = run(capsys, "oracle", "quat_2_3", "--corrupt", "1", "1")
    doc = json.loads(out)
    assert code == 1 and doc["verdicts"]["oracle"]["status"] == "fail"
    assert doc["oracle"]["witness"] is not None


def test_oracle_rejects_equal_kernels(capsys):
    assert run(capsys, "oracle", "quat_equal_2")[0] == 1


@pytest.mark.parametrize("cmd", ["build", "oracle"])
def test_reports_are_deterministic(capsys, cmd):
    first = strip_timings(run(capsys, cmd, "quat_m1_m2")[1])
    second = strip_timings(run(capsys, cmd, "quat_m1_m2")[1])
    assert first == second


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cupcsa", "examples", "list"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "kummer3_2_3" in res.stdout
