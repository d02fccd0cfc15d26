import json
import os
import subprocess
import sys

import numpy as np
import pytest

from krein.cli import main

FIX = os.path.join(os.path.dirname(__file__), "fixtures")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fixture(name):
    with open(os.path.join(FIX, name), encoding="utf-8") as fh:
        return fh.read()


def test_analyze_catalog(capsys):
    code, out, _ = run(capsys, "analyze", "minkowski:3")
    assert code == 0
    obj = json.loads(out)
    assert obj["signature"] == [3, 1]
    np.testing.assert_allclose(obj["J"], np.diag([1, 1, 1, -1]))


def test_analyze_file(capsys):
    code, out, _ = run(capsys, "analyze", "--file", os.path.join(FIX, "plane.json"))
    assert code == 0 and json.loads(out)["signature"] == [1, 1]


def test_analyze_degenerate(capsys, tmp_path):
    p = tmp_path / "deg.json"
    p.write_text('{"dim": 2, "gram": [[1, 0], [0, 0]]}')
    code, _, err = run(capsys, "analyze", "--file", str(p))
    assert code == 3 and "Degenerate" in err


@pytest.mark.parametrize("content", ["{", '{"dim": 2}', '{"gram": [[1, 1], [0, 1]]}', '{"gram": [["a"]]}'])
def test_analyze_malformed(capsys, tmp_path, content):
    p = tmp_path / "bad.json"
    p.write_text(content)
    code, _, _ = run(capsys, "analyze", "--file", str(p))
    assert code == 2


def test_missing_or_double_space(capsys):
    assert run(capsys, "analyze")[0] == 2
    assert run(capsys, "analyze", "minkowski:1", "--file", os.path.join(FIX, "plane.json"))[0] == 2
    assert run(capsys, "analyze", "bogus:1")[0] == 2
    assert run(capsys, "analyze", "--file", "/nonexistent/sp.json")[0] == 2


def test_target_worked(capsys):
    code, out, _ = run(capsys, "target", "minkowski:1", "--x", "0,1", "--a", "1.4142135", "--trace")
    assert code == 0
    obj = json.loads(out)
    assert obj["achieved"] == pytest.approx(1.4142135, rel=1e-12)
    assert obj["t_b"] == pytest.approx(2 - 3 ** 0.5, abs=1e-7)
    assert obj["trace"]["s0"] == pytest.approx(0.5)


def test_target_neutral(capsys):
    code, out, _ = run(capsys, "target", "minkowski:1", "--x", "1,1", "--a", "1")
    assert code == 0 and json.loads(out)["t_b"] == 0
    assert "trace" not in json.loads(out)


def test_target_below_range(capsys):
    code, _, err = run(capsys, "target", "minkowski:1", "--x", "2,1", "--a", "1")
    assert code == 4 and "TargetBelowRange" in err


def test_target_dimension_mismatch(capsys):
    assert run(capsys, "target", "minkowski:1", "--x", "1,0,0", "--a", "2")[0] == 5


def test_target_bad_vector(capsys):
    assert run(capsys, "target", "minkowski:1", "--x", "1,a", "--a", "2")[0] == 2
    assert run(capsys, "target", "minkowski:1", "--a", "2")[0] == 2


def test_target_complex_vector_file(capsys, tmp_path):
    p = tmp_path / "x.json"
    p.write_text('[{"re": 0, "im": 1}, 2]')
    code, out, _ = run(capsys, "target", "minkowski:1", "--x", "@" + str(p), "--a", "3")
    assert code == 0 and json.loads(out)["achieved"] == pytest.approx(3, rel=1e-12)


def test_norm(capsys):
    code, out, _ = run(capsys, "norm", "minkowski:1", "--x", "2,1", "--sym", "eg1:2")
    obj = json.loads(out)
    assert code == 0 and obj["class"] == "positive" and obj["form"] == 3
    assert obj["norm"] ** 2 == pytest.approx((5 * 5 - 8 * 2) / 3)
    code, out, _ = run(capsys, "norm", "minkowski:1", "--x", "1,1")
    assert json.loads(out)["lower_attained"] is False
    assert run(capsys, "norm", "minkowski:1", "--x", "1,1", "--sym", "identity")[0] == 1


def test_seq_ratio_neutral(capsys):
    code, out, _ = run(capsys, "seq", "ratio-neutral", "minkowski:1", "--x", "1,1", "--y=0.5,-0.5", "--steps", "10")
    assert code == 0
    last = out.strip().splitlines()[-1].split(",")
    assert float(last[4]) == pytest.approx(1 / 19, rel=1e-12)


def test_seq_vanish(capsys):
    code, out, _ = run(capsys, "seq", "vanish", "minkowski:1", "--x", "1,1", "--start-norm", "1", "--steps", "4")
    norms = [float(l.split(",")[2]) for l in out.strip().splitlines()[1:]]
    assert code == 0 and norms == [1, 0.5, 0.25, 0.125]


def test_seq_diverge(capsys):
    code, out, _ = run(capsys, "seq", "diverge", "minkowski:1", "--x", "0,1", "--steps", "3")
    norms = [float(l.split(",")[2]) for l in out.strip().splitlines()[1:]]
    assert code == 0 and len(norms) == 3 and np.all(np.diff(norms) > 0)


def test_seq_out_and_sidecars(capsys, tmp_path):
    out_csv = tmp_path / "r.csv"
    code, out, _ = run(capsys, "seq", "ratio-orth", "minkowski:2", "--x", "0,1.4142135623730951,1",
                       "--y", "1,0,0", "--steps", "3", "--out", str(out_csv), "--sidecars", str(tmp_path / "J"))
    assert code == 0
    summary = json.loads(out)
    assert summary["rows"] == 3 and summary["case"] == "OrthogonalPos" and summary["last"]["n"] == 4
    assert out_csv.read_text().startswith("n,param,norm_x,norm_y,ratio\n")
    assert sorted(os.listdir(tmp_path / "J")) == ["J_2.json", "J_3.json", "J_4.json"]
    code, _, _ = run(capsys, "verify", "minkowski:2", "--sym-file", str(tmp_path / "J" / "J_4.json"))
    assert code == 0


def test_seq_errors(capsys):
    assert run(capsys, "seq", "vanish", "minkowski:1", "--x", "1,0", "--steps", "3")[0] == 5
    assert run(capsys, "seq", "ratio-orth", "minkowski:1", "--x", "1,0", "--y", "0,1", "--steps", "3")[0] == 5
    assert run(capsys, "seq", "ratio-neutral", "minkowski:1", "--x", "1,1", "--steps", "3")[0] == 2
    assert run(capsys, "seq", "diverge", "minkowski:1", "--x", "0,1", "--steps", "0")[0] == 2


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "minkowski:1", "--sym", "eg1:2")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = run(capsys, "verify", "minkowski:1", "--sym", "identity")
    assert code == 1 and json.loads(out)["min_eig"] < 0
    assert run(capsys, "verify", "minkowski:2", "--sym", "eg1:2")[0] == 2
    assert run(capsys, "verify", "minkowski:1", "--sym", "minkowski:1")[0] == 2


def test_verify_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "example", "eg1:2")
    p = tmp_path / "J.json"
    p.write_text(out)
    code, out, _ = run(capsys, "verify", "--file", os.path.join(FIX, "plane.json"), "--sym-file", str(p))
    assert code == 0 and json.loads(out)["min_eig"] == pytest.approx(1 / 3)


def test_example(capsys):
    code, out, _ = run(capsys, "example", "final:2")
    obj = json.loads(out)
    assert code == 0 and obj["report"]["pass"] and len(obj["basis_plus"]) == 1
    code, out, _ = run(capsys, "example", "alt-l2:4")
    assert code == 0 and json.loads(out)["signature"] == [2, 2]
    assert run(capsys, "example", "eg1:0.5")[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


FIXTURE_COMMANDS = {
    "analyze_minkowski3.json": ["analyze", "minkowski:3"],
    "target_worked.json": ["target", "minkowski:1", "--x", "0,1", "--a", "1.4142135623730951", "--trace"],
    "target_neutral.json": ["target", "minkowski:1", "--x", "1,1", "--a", "1", "--trace"],
    "ratio_neutral.csv": ["seq", "ratio-neutral", "minkowski:1", "--x", "1,1", "--y=0.5,-0.5", "--steps", "10"],
    "vanish.csv": ["seq", "vanish", "minkowski:1", "--x", "1,1", "--start-norm", "1", "--steps", "4"],
    "diverge.csv": ["seq", "diverge", "minkowski:1", "--x", "0,1", "--steps", "5"],
    "ratio_orth.csv": ["seq", "ratio-orth", "minkowski:2", "--x", "0,1.4142135623730951,1", "--y", "1,0,0", "--steps", "50"],
    "example_eg1_2.json": ["example", "eg1:2"],
}


@pytest.mark.parametrize("name", sorted(FIXTURE_COMMANDS))
def test_matches_fixture(capsys, name):
    code, out, _ = run(capsys, *FIXTURE_COMMANDS[name])
    assert code == 0 and out == fixture(name)


def test_subprocess_byte_identical():
    cmd = [sys.executable, "-m", "krein"] + FIXTURE_COMMANDS["target_worked.json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b == fixture("target_worked.json").encode()
