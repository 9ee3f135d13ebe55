import json
import subprocess
import sys
from pathlib import Path

import pytest

from diagramkit.cli import run

CASES = json.loads((Path(__file__).parent / "golden" / "cli_cases.json").read_text())


def invoke(argv, capsys):
    try:
        code = run(argv)
    except SystemExit as exc:  # argparse rejects the command line itself
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def check_step(step, tmp_path, capsys):
    argv = [a.replace("{tmp}", str(tmp_path)) for a in step["args"]]
    code, out, err = invoke(argv, capsys)
    assert code == step.get("exit", 0), err
    if "stdout" in step:
        expected = step["stdout"] + "\n" if step["stdout"] else ""
        assert out == expected
    if "stderr_prefix" in step:
        assert err.startswith(step["stderr_prefix"])
    if "json_lengths" in step or "json_values" in step:
        data = json.loads(out)
        for key, n in step.get("json_lengths", {}).items():
            assert len(data[key]) == n
        for key, value in step.get("json_values", {}).items():
            assert data[key] == value


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case, tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("DIAGRAMKIT_MAX_VERTICES", raising=False)
    for key, value in case.get("env", {}).items():
        monkeypatch.setenv(key, value)
    for step in case.get("steps", [case]):
        check_step(step, tmp_path, capsys)


def test_out_file(tmp_path, capsys):
    target = tmp_path / "h.json"
    code, out, _ = invoke(["homology", "--n", "3", "--dim", "1", "--out", str(target)], capsys)
    assert (code, out) == (0, "")
    assert target.read_text() == '{"dimension": 1, "betti": 1, "torsion": []}\n'


def test_inputs_from_files(tmp_path, capsys):
    braid = tmp_path / "b.json"
    braid.write_text('{"n": 3, "slots": [1, 1]}')
    assert invoke(["eq", "--braid", str(braid), "--braid", "n=3"], capsys)[:2] == (0, "true\n")
    pres = tmp_path / "p.json"
    pres.write_text('{"alphabet_size": 2, "relations": [[[1, 2], [2, 1]]]}')
    code, out, _ = invoke(["squier", "--pres", str(pres), "--word", "x1x2", "--format", "text"], capsys)
    assert code == 0
    assert "euler characteristic: 1" in out
    code, _, err = invoke(["eq", "--braid", str(tmp_path / "missing.json"), "--braid", "n=3"], capsys)
    assert code == 1 and err.startswith("ParseError:")


def test_diagram_json_round_trip_through_cli(tmp_path, capsys):
    code, out, _ = invoke(["b2d", "--braid", "n=3 s1 s2 s1 s2 s1 s2"], capsys)
    assert code == 0
    path = tmp_path / "hex.json"
    path.write_text(out)
    assert invoke(["d2b", "--diagram", str(path)], capsys)[:2] == (0, '{"n": 3, "slots": [1, 2, 1, 2, 1, 2]}\n')
    assert invoke(["reduced", "--diagram", str(path)], capsys)[:2] == (0, "true\n")


def test_output_is_deterministic(capsys):
    first = invoke(["squier", "--n", "4", "--format", "dot"], capsys)
    second = invoke(["squier", "--n", "4", "--format", "dot"], capsys)
    assert first == second
    assert first[1].startswith("graph squier {\n  v0 [label=\"x1x2x3x4\"];")


def test_snf_transforms_flag(capsys):
    code, out, _ = invoke(["snf", "--matrix", "[[2, 4], [6, 8]]", "--transforms"], capsys)
    data = json.loads(out)
    assert code == 0 and data["divisors"] == [2, 4]
    assert len(data["U"]) == 2 and len(data["V"]) == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "diagramkit", "eq", "--braid", "n=3 s1 s1", "--braid", "n=3"],
        capture_output=True, text=True,
    )
    assert (proc.returncode, proc.stdout) == (0, "true\n")
    proc = subprocess.run(
        [sys.executable, "-m", "diagramkit", "squier", "--n", "7", "--max-vertices", "100"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 1
    assert proc.stderr.startswith("VertexBudgetExceeded:")
    proc = subprocess.run([sys.executable, "-m", "diagramkit", "eq"], capture_output=True, text=True)
    assert proc.returncode == 2
