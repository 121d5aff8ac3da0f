import json
import subprocess
import sys
from pathlib import Path

import pytest

from superhowe import __version__
from superhowe.cli import EXIT_ARITH, EXIT_BUDGET, EXIT_FAIL, EXIT_HOOK, EXIT_OK, EXIT_USAGE, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,golden", [
    (["hwv", "--model", "tensor", "-p", "2", "-q", "0", "-m", "1", "-n", "1", "--lambda", "1,1"], "cli_hwv_tensor.txt"),
    (["hwv", "--model", "s2", "-m", "1", "-n", "2", "--lambda", "2,2,2", "--format", "json"], "cli_hwv_s2.json"),
    (["hwv", "--model", "tensor", "-p", "2", "-q", "1", "-m", "1", "-n", "1", "--lambda", "2,1,1"], "cli_hwv_general.txt"),
    (["verify", "--theorem", "tensor-duality", "-p", "1", "-q", "1", "-m", "1", "-n", "1", "--max-degree", "3",
      "--format", "json"], "cli_verify_tensor.json"),
    (["identities", "--which", "classical-quartet", "-m", "2", "--max-degree", "6"], "cli_identities_quartet.txt"),
])
def test_golden_output(capsys, argv, golden):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out == (GOLDEN / golden).read_text()


def test_hwv_examples(capsys):
    code, out, _ = run(capsys, "hwv", "--model", "tensor", "-p", "2", "-q", "0", "-m", "1", "-n", "1", "--lambda", "1,1")
    assert "vector   x[1,1]*h[1,2] - x[1,2]*h[1,1]" in out
    assert "verdict  pass" in out
    code, out, _ = run(capsys, "hwv", "--model", "s2", "-m", "1", "-n", "2", "--lambda", "2")
    assert code == EXIT_OK and "vector   x[1,1]\n" in out


def test_hook_violation_exit(capsys):
    code, _, err = run(capsys, "hwv", "--model", "tensor", "-p", "1", "-q", "0", "-m", "1", "-n", "0", "--lambda", "1,1")
    assert code == EXIT_HOOK
    assert "hook violation" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--theorem", "no-such-theorem", "-p", "1", "-q", "1", "-m", "1", "-n", "1"],
    ["verify", "--theorem", "tensor-duality", "-p", "1"],
    ["hwv", "--model", "tensor", "-p", "1", "--lambda", "1"],
    ["hwv", "--model", "s2", "-m", "1", "-n", "1", "--lambda", "2,3"],
    ["identities", "--which", "nope", "-m", "1"],
    ["hwv", "--model", "s2", "-m", "-1", "-n", "1", "--lambda", "2"],
    ["verify", "--suite", "default", "--budget", "0"],
    [],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == EXIT_USAGE


def test_budget_exits(capsys, monkeypatch):
    code, _, err = run(capsys, "hwv", "--model", "tensor", "-p", "2", "-q", "1", "-m", "2", "-n", "1",
                       "--lambda", "3,2,1", "--budget", "3")
    assert code == EXIT_BUDGET and "over budget" in err
    monkeypatch.setenv("SUPERHOWE_BUDGET", "3")
    code, out, _ = run(capsys, "verify", "--theorem", "hwv-tensor", "-p", "2", "-q", "1", "-m", "2", "-n", "1")
    assert code == EXIT_BUDGET and "over-budget" in out
    code, _, _ = run(capsys, "verify", "--theorem", "hwv-tensor", "-p", "2", "-q", "1", "-m", "2", "-n", "1",
                     "--budget", "100000")
    assert code == EXIT_OK


def test_failure_exit_code(capsys, monkeypatch):
    import superhowe.verify as V

    real = V.partitions
    monkeypatch.setattr(V, "partitions", lambda k: real(k)[:-1] if k >= 2 else real(k))
    code, out, _ = run(capsys, "verify", "--theorem", "skew-duality", "-p", "1", "-q", "1", "-m", "1", "-n", "1")
    assert code == EXIT_FAIL
    assert "counterexample" in out


def test_arithmetic_failure_exit(capsys, monkeypatch):
    import superhowe.cli as C
    from superhowe.algebra import NotDivisible

    def boom(*a, **k):
        raise NotDivisible("forced")

    monkeypatch.setattr(C, "hwv_s2", boom)
    code, _, err = run(capsys, "hwv", "--model", "s2", "-m", "1", "-n", "2", "--lambda", "2")
    assert code == EXIT_ARITH and "NotDivisible" in err


@pytest.mark.parametrize("argv", [
    ["identities", "--which", "super-cauchy", "-p", "1", "-q", "1", "-m", "1", "-n", "1", "--max-degree", "4"],
    ["identities", "--which", "super-dual-cauchy", "-p", "2", "-q", "1", "-m", "1", "-n", "1"],
    ["identities", "--which", "s2", "-m", "1", "-n", "2", "--max-degree", "4"],
    ["identities", "--which", "determinants", "-p", "3"],
    ["identities", "--which", "s2-relations", "-m", "2", "-n", "2"],
    ["verify", "--theorem", "lambda-s2-decomposition", "-m", "1", "-n", "2"],
    ["verify", "--theorem", "hwv-s2", "-m", "2", "-n", "2", "--max-size", "6"],
    ["verify", "--suite", "default", "--max-degree", "3"],
])
def test_passing_commands(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK, out
    assert "status=pass" in out


def test_json_report_and_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--theorem", "s2-decomposition", "-m", "1", "-n", "1",
                       "--format", "json", "--out", str(target))
    assert code == EXIT_OK and out == ""
    data = json.loads(target.read_text())
    assert data["version"] == __version__
    assert set(data) >= {"theorem", "params", "degree", "status", "counterexample"}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "superhowe", "hwv", "--model", "s2", "-m", "1", "-n", "2",
                          "--lambda", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "x[1,1]" in res.stdout
