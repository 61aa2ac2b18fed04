import io
import json
import subprocess
import sys

import pytest

from reshilb.cli import main, normalize_job

VERONESE = {"command": "secant", "kind": "surface", "form": "chern",
            "H2": 4, "HK": -6, "K2": 9, "c2": 3, "chi": 1}
STUCKRAD = {"command": "residual-degree", "delta": 1, "sigma_s": 12, "sigma_1": 7, "g": 2,
            "e": [3, 2]}


def run(job, capsys, monkeypatch, *argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(job)))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_residual_degree(capsys, monkeypatch):
    code, out, _ = run(STUCKRAD, capsys, monkeypatch)
    assert code == 0
    assert json.loads(out)["result"] == 1


def test_secant_boundary(capsys, monkeypatch):
    code, out, _ = run(VERONESE, capsys, monkeypatch)
    result = json.loads(out)["result"]
    assert code == 0
    assert result["margin"] == 0 and result["verdict"] == "deficient boundary"


def test_job_file_and_table_format(tmp_path, capsys):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(STUCKRAD))
    assert main(["--input", str(path), "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["command", "residual-degree"]
    assert out.splitlines()[1].split() == ["result", "1"]


def test_series_ops(capsys, monkeypatch):
    job = {"command": "series", "op": "expand", "a": {"num": [[0, 1], [1, 2]], "pole": 2},
           "lo": 0, "hi": 3}
    code, out, _ = run(job, capsys, monkeypatch)
    assert code == 0 and json.loads(out)["result"] == [1, 4, 7, 10]
    job = {"command": "series", "op": "shift", "a": {"num": [[0, 1]], "pole": 1}, "k": 2}
    code, out, _ = run(job, capsys, monkeypatch)
    assert code == 0 and json.loads(out)["result"]["num"] == [[2, 1]]
    job = {"command": "series", "op": "decompose", "a": {"num": [[2, 1]], "pole": 1}, "D": 3}
    code, out, _ = run(job, capsys, monkeypatch)
    assert json.loads(out)["result"]["e"] == [0, 0, 1]


def test_payload_form_and_flag_override():
    raw = {"command": "oracle", "payload": {"op": "graded-dim"}, "options": {"prime": 7}}
    job = normalize_job(raw, {"prime": 32003, "seed": None})
    assert job["options"]["prime"] == 32003
    assert job["payload"] == {"op": "graded-dim"}
    flat = normalize_job({"command": "oracle", "op": "graded-dim", "seed": 4})
    assert flat["options"]["seed"] == 4 and "seed" not in flat["payload"]


def test_oracle_colon_fit(capsys, monkeypatch):
    job = {"command": "oracle", "op": "colon", "ideal": "twisted_cubic", "degrees": [2, 2, 3],
           "dim": 1}
    code, out, _ = run(job, capsys, monkeypatch, "--seed", "0")
    result = json.loads(out)["result"]
    assert code == 0
    assert result["polynomial"] == {"m": 0, "e": [1]}


def test_exit_codes(capsys, monkeypatch):
    assert run({"command": "nonsense"}, capsys, monkeypatch)[0] == 1
    assert run({"command": "residual-degree", "delta": 1}, capsys, monkeypatch)[0] == 1
    assert run([1, 2], capsys, monkeypatch)[0] == 1
    short = {"command": "oracle", "op": "quotient", "ideal": "twisted_cubic", "dim": 2}
    code, _, err = run(short, capsys, monkeypatch, "--dmax", "1")
    assert code == 3 and "stabilize" in err
    code, out, _ = run({"command": "verify"}, capsys, monkeypatch, "--suite", "8")
    assert code == 2
    assert json.loads(out)["result"]["passed"] is False
    code, out, _ = run({"command": "verify"}, capsys, monkeypatch, "--suite", "1,9")
    assert code == 0


def test_conflicting_command(capsys, monkeypatch):
    code, _, err = run(STUCKRAD, capsys, monkeypatch, "secant", "--input", "-")
    assert code == 1 and "invalid job" in err


def test_determinism_and_round_trip(capsys, monkeypatch):
    job = {"command": "oracle", "op": "colon", "ideal": "twisted_cubic", "degrees": [2, 2],
           "dim": 2, "workers": 1}
    first = run(job, capsys, monkeypatch)[1]
    threaded = run({**job, "workers": 3}, capsys, monkeypatch)[1]
    again = run(job, capsys, monkeypatch)[1]
    assert first == again
    assert json.loads(first)["result"] == json.loads(threaded)["result"]
    echoed = json.loads(first)["input"]
    assert normalize_job(echoed) == echoed
    assert run(echoed, capsys, monkeypatch)[1] == first


def test_module_entry_point():
    for argv in (["residual-degree", "--input", "-"], []):
        proc = subprocess.run([sys.executable, "-m", "reshilb", *argv],
                              input=json.dumps(STUCKRAD), capture_output=True, text=True,
                              timeout=60)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["result"] == 1


def test_verify_without_stdin():
    proc = subprocess.run([sys.executable, "-m", "reshilb", "verify", "--suite", "9",
                           "--format", "table"],
                          stdin=subprocess.DEVNULL, capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert "[PASS]  9." in proc.stdout


@pytest.mark.parametrize("job", [
    {"command": "powers-formulas", "op": "formulas", "g": 1, "base": [2, 1, 0, 4, 0, 1], "p": 2},
    {"command": "powers-formulas", "op": "ci-base", "ci_degrees": [2, 3]},
    {"command": "powers-formulas", "op": "deweger", "a": [1, 6, 7, 22], "b": [2, 2, 11, 21]},
    {"command": "secant", "kind": "threefold", "form": "diagonal", "table": "hrr", "H3": 27,
     "KH2": -36, "K2H": 48, "K3": -64, "c2H": 18, "Kc2": -24, "c3": -4},
    {"command": "residual-coeffs", "n": 4, "g": 2, "s": 3, "degrees": [2, 2, 2],
     "powers": {"1": [3, 2, 0, 0], "2": [9, 16, 9, 0]}, "criterion": True},
])
def test_other_commands_succeed(job, capsys, monkeypatch):
    assert run(job, capsys, monkeypatch)[0] == 0


def test_powers_solve(capsys, monkeypatch):
    # quadric hypersurface in 5 variables: I^p/I^(p+1) = (R/f)(-2p)
    known = [{"num": [[0, 1], [1, 1]], "pole": 4}, {"num": [[2, 1], [3, 1]], "pole": 4}]
    job = {"command": "powers-solve", "n": 5, "r": 4, "g": 1, "degrees": [0] * 5,
           "known": known, "pmax": 2}
    code, out, _ = run(job, capsys, monkeypatch)
    assert code == 0
    classes = json.loads(out)["result"]
    assert len(classes) == 3
