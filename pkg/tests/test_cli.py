"""Command line: subcommands, output formats and exit codes."""

import json
import subprocess
import sys

import pytest

from montesinos_slopes.cli import _join_tail_values, main

NEG = ["--r", "-4,-1", "--s", "2,-1", "--t", "2,-1"]
FAST = ["--brute-n", "2", "--reduced-n", "8", "--state-sum-n", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_join_tail_values():
    assert _join_tail_values(["verify", "--r", "-4,-1", "--s=2,-1"]) == [
        "verify", "--r=-4,-1", "--s=2,-1"]


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", *NEG, *FAST)
    assert code == 0
    report = json.loads(out)["reports"][0]
    assert all(report["verdicts"].values())


def test_verify_text_and_csv(capsys):
    code, out, _ = run(capsys, "verify", *NEG, *FAST, "--format", "text")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", *NEG, *FAST, "--format", "csv")
    assert out.splitlines()[0].startswith("descriptor,case,period")


def test_verify_with_oracle(capsys):
    code, out, _ = run(capsys, "verify", *NEG, *FAST, "--oracle", "bracket")
    assert code == 0
    assert json.loads(out)["reports"][0]["oracle"]["status"] == "agree"


def test_degree(capsys):
    code, out, _ = run(capsys, "degree", *NEG, "--max-n", "6", "--brute-n", "3")
    assert code == 0
    body = json.loads(out)
    assert body["period"] == 2 and body["a"] == "2/1" and body["c"] == ["-2/1", "0/1"]
    assert [row["closed"] for row in body["table"][:5]] == ["0", "2", "12", "22", "40"]
    assert all(row["ok"] for row in body["table"])


def test_surface(capsys):
    code, out, _ = run(capsys, "surface", "--r", "-4,-1", "--s", "2,-4,-1", "--t", "4,-3",
                       "--listing")
    assert code == 0
    head, _, listing = out.partition("}\n")
    body = json.loads(head + "}")
    assert body["u0"] == "4/7" and body["bs"] == "4/3" and body["chi_ratio"] == "-5/1"
    assert "delta (type" in listing and "gamma (type I" in listing


def test_jones(capsys):
    code, out, _ = run(capsys, "jones", *NEG, "--n", "1")
    assert code == 0
    poly, meta = out.splitlines()
    assert poly == "2*v^2 + 1*v^-2 - 1*v^-10 - 1*v^-14 + 1*v^-26"
    meta = json.loads(meta)
    assert meta["N"] == 2 and meta["max_degree"] == 2 and meta["terms"] == 5


def test_jones_bracket(capsys):
    code, out, _ = run(capsys, "jones", *NEG, "--oracle", "bracket")
    assert code == 0
    assert out.splitlines()[0] == "2*v^2 + 1*v^-2 - 1*v^-10 - 1*v^-14 + 1*v^-26"
    code, _, err = run(capsys, "jones", *NEG, "--oracle", "bracket", "--n", "2")
    assert code == 2 and "n=1" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "--r", "-3,-1", "--s", "2,-1", "--t", "2,-1")
    assert code == 2 and "ParityViolation" in err
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_budget_exit(capsys):
    code, _, err = run(capsys, "jones", *NEG, "--n", "3", "--method", "direct",
                       "--max-assignments", "5")
    assert code == 3 and err.startswith("budget:")


def test_sweep_with_grid(tmp_path, capsys):
    grid = tmp_path / "grid.json"
    grid.write_text(json.dumps({"r0": [-2, -4], "s0": [2], "t0": [2], "tails": [[-1]]}))
    code, out, _ = run(capsys, "sweep", "--grid", str(grid), *FAST)
    assert code == 0
    assert out.splitlines()[-1].startswith("total=2 NegDisc=1 NonNegDisc=1 failures=0")


def test_sweep_missing_file(capsys):
    code, _, err = run(capsys, "sweep", "--grid", "/nonexistent/grid.json")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "montesinos_slopes", "verify", *NEG, *FAST,
                           "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("PASS")
