import io
import json

from plethtomo.cli import EXIT_GATE_FAILED, EXIT_INPUT_ERROR, EXIT_OK, main


def run(argv, stdin_text=None, monkeypatch=None, capsys=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_coeff_a(capsys, monkeypatch):
    code, out, _ = run(["coeff", "a", "[4]", "2", "2"], capsys=capsys)
    assert code == EXIT_OK
    assert "value: 1" in out


def test_coeff_b_trivial_no_instance(capsys, monkeypatch):
    code, out, _ = run(["coeff", "b", "[2,1]", "1", "3"], capsys=capsys)
    assert code == EXIT_OK
    assert "value: 0" in out


def test_coeff_general(capsys, monkeypatch):
    code, out, _ = run(["coeff", "p", "[2,2]", "[2]", "[2]"], capsys=capsys)
    assert code == EXIT_OK
    assert "value: 1" in out


def test_coeff_json_format(capsys, monkeypatch):
    code, out, _ = run(["coeff", "a", "[4]", "2", "2", "--format", "json"], capsys=capsys)
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["value"] == 1


def test_coeff_malformed_input(capsys, monkeypatch):
    code, _, err = run(["coeff", "a", "[4", "2", "2"], capsys=capsys)
    assert code == EXIT_INPUT_ERROR
    assert "input error" in err


def test_coeff_missing_args(capsys, monkeypatch):
    code, _, err = run(["coeff", "a", "[4]"], capsys=capsys)
    assert code == EXIT_INPUT_ERROR
    code, _, err = run(["coeff", "p", "[4]", "[2]"], capsys=capsys)
    assert code == EXIT_INPUT_ERROR


def test_kron(capsys, monkeypatch):
    code, out, _ = run(["kron", "[2,1]", "[2,1]", "[1,1,1]"], capsys=capsys)
    assert code == EXIT_OK
    assert "value: 1" in out


def test_count_stdin(capsys, monkeypatch):
    inst = json.dumps({"kind": "2dxray", "r": 1, "marginals": {"x": [1, 1], "y": [1, 1], "z": [2, 0]}})
    code, out, _ = run(["count", "-"], stdin_text=inst, monkeypatch=monkeypatch, capsys=capsys)
    assert code == EXIT_OK
    assert "count: 1" in out


def test_count_inline_and_file(tmp_path, capsys, monkeypatch):
    data = {"kind": "sym3d", "cone": "closed", "marginals": {"sum": [3]}}
    code, out, _ = run(["count", json.dumps(data)], capsys=capsys)
    assert code == EXIT_OK and "count: 1" in out
    path = tmp_path / "inst.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(["count", str(path)], capsys=capsys)
    assert code == EXIT_OK and "count: 1" in out


def test_count_bad_schema(capsys, monkeypatch):
    code, _, err = run(["count", json.dumps({"kind": "mystery"})], capsys=capsys)
    assert code == EXIT_INPUT_ERROR


def test_reduce_trace(capsys, monkeypatch):
    inst = json.dumps({"kind": "2dxray", "r": 1, "marginals": {"x": [1, 1], "y": [1, 1], "z": [2, 0]}})
    code, out, _ = run(["reduce", inst, "--to", "kron-triple", "--resolve", "--format", "json"], capsys=capsys)
    assert code == EXIT_OK
    stages = json.loads(out)
    names = [s["stage"] for s in stages]
    assert names == ["2dxray", "sym2d", "sym2d", "promise3d", "promise3d", "plethysm", "plethysm", "kron-triple"]
    final = stages[-1]
    assert final["mu"] == [2, 1] and final["rho"] == [1, 1, 1] and final["value"] == 1
    a_stage = [s for s in stages if s["stage"] == "plethysm" and s["cone"] == "open"][0]
    assert a_stage["n"] == 55 and a_stage["value"] == 1


def test_reduce_gate_failure(capsys, monkeypatch):
    inst = json.dumps({"kind": "2dxray", "r": 1, "marginals": {"x": [1, 1], "y": [1, 1], "z": [1, 1]}})
    code, _, err = run(["reduce", inst], capsys=capsys)
    assert code == EXIT_GATE_FAILED
    assert "gate failure" in err


def test_verify_suites_pass(capsys, monkeypatch):
    for argv in (
        ["verify", "xi", "--i-max", "25"],
        ["verify", "bounds", "--n-max", "2"],
        ["verify", "duality", "--nm", "2,2;2,3"],
        ["verify", "closed-forms", "--n-max", "3"],
        ["verify", "parsimony", "--rprime-max", "1"],
    ):
        code, out, _ = run(argv, capsys=capsys)
        assert code == EXIT_OK, argv
        assert "PASS" in out


def test_table_rows(capsys, monkeypatch):
    code, out, _ = run(["table"], capsys=capsys)
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert lines[1].startswith("example-1,1,")
    assert lines[3].startswith("example-3,0,")


def test_output_determinism(capsys, monkeypatch):
    first = run(["table", "--format", "json"], capsys=capsys)
    second = run(["table", "--format", "json"], capsys=capsys)
    assert first == second
    a = run(["reduce", json.dumps({"kind": "2dxray", "r": 1, "marginals": {"x": [2, 1], "y": [2, 1], "z": [2, 1]}}), "--format", "json"], capsys=capsys)
    b = run(["reduce", json.dumps({"kind": "2dxray", "r": 1, "marginals": {"x": [2, 1], "y": [2, 1], "z": [2, 1]}}), "--format", "json"], capsys=capsys)
    assert a == b


def test_console_script_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "plethtomo", "coeff", "a", "[4]", "2", "2", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert json.loads(proc.stdout)["value"] == 1


def test_workers_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("PLETHTOMO_WORKERS", "2")
    code, out, _ = run(["coeff", "a", "[4]", "2", "2"], capsys=capsys)
    assert code == EXIT_OK
    monkeypatch.setenv("PLETHTOMO_WORKERS", "zero")
    code, _, err = run(["coeff", "a", "[4]", "2", "2"], capsys=capsys)
    assert code == EXIT_INPUT_ERROR
