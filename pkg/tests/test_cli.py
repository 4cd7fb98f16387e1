"""CLI behavior: every subcommand, exit codes, determinism, cache effects."""

import json
import os
import subprocess
import sys

import pytest

from fermatpow.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_alpha_text(capsys):
    code, out, _ = run_cli(capsys, "alpha", "--n", "2", "--m", "7", "--method", "both")
    assert code == 0
    assert "alpha=18" in out


def test_alpha_groebner_n5(capsys):
    code, out, _ = run_cli(capsys, "alpha", "--n", "5", "--m", "3", "--method", "groebner")
    assert code == 0
    assert "alpha=15" in out


def test_alpha_default_method(capsys):
    code, out, _ = run_cli(capsys, "alpha", "--n", "3", "--m", "1")
    assert code == 0
    assert "alpha=4" in out


def test_alpha_json_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "alpha", "--n", "2", "--m", "3", "--format", "json")
    assert code == 0
    code, out2, _ = run_cli(capsys, "alpha", "--n", "2", "--m", "3", "--format", "json")
    assert code == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["alpha"] == 8


def test_contain_true_and_false(capsys):
    code, out, _ = run_cli(capsys, "contain", "--n", "2", "--m", "3", "--r", "2", "--a", "1")
    assert code == 0
    assert "true" in out
    code, out, _ = run_cli(capsys, "contain", "--n", "3", "--m", "3", "--r", "2", "--a", "0")
    assert code == 1
    assert "false" in out
    assert "failing generator" in out
    code, out, _ = run_cli(capsys, "contain", "--n", "3", "--m", "2", "--r", "1", "--a", "1")
    assert code == 0


def test_witness_verified(capsys):
    code, out, _ = run_cli(capsys, "witness", "--n", "4", "--m", "5")
    assert code == 0
    assert "degree 21" in out
    assert "verified: true" in out


def test_witness_n3_m7(capsys):
    code, out, _ = run_cli(capsys, "witness", "--n", "3", "--m", "7", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 22
    assert payload["verified"] is True


def test_witness_generator_case(capsys):
    code, out, _ = run_cli(capsys, "witness", "--n", "2", "--m", "1")
    assert code == 0
    assert "degree 3" in out


def test_witness_uncovered_falls_back_to_alpha(capsys):
    code, out, _ = run_cli(capsys, "witness", "--n", "3", "--m", "3")
    assert code == 0
    assert "no closed-form witness" in out
    assert "alpha=9" in out


def test_points_fermat(capsys):
    code, out, _ = run_cli(capsys, "points", "--fermat", "2", "--m", "2")
    assert code == 0
    assert "alpha=6" in out


def test_points_dimension_query(capsys):
    code, out, _ = run_cli(capsys, "points", "--fermat", "3", "--m", "1", "--t", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["dimension"] == 3


def test_points_file(tmp_path, capsys):
    pts = tmp_path / "three_collinear.pts"
    pts.write_text("conductor: 1\n1, 0, 0\n1, 1, 0\n1, 2, 0\n")
    code, out, _ = run_cli(capsys, "points", "--file", str(pts), "--m", "1")
    assert code == 0
    assert "alpha=1" in out


def test_points_file_parse_error(tmp_path, capsys):
    pts = tmp_path / "bad.pts"
    pts.write_text("conductor: 1\n1, 0\n")
    code, _, err = run_cli(capsys, "points", "--file", str(pts), "--m", "1")
    assert code == 2
    assert "line 2" in err


def test_table_csv(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--min-n", "2", "--max-n", "2", "--max-m", "3", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,alpha,predicted,match,method,seconds"
    assert lines[1].startswith("2,1,3,3,true,groebner,")
    assert len(lines) == 4


def test_table_json_has_waldschmidt(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--min-n", "2", "--max-n", "2", "--max-m", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["waldschmidt"] == [{"n": 2, "inf_so_far": "5/2", "expected": "5/2"}]
    assert all(cell["match"] == "true" for cell in payload["cells"])


def test_table_empty_range_emits_header_only(capsys):
    code, out, _ = run_cli(capsys, "table", "--min-n", "3", "--max-n", "2")
    assert code == 0
    assert out == "n,m,alpha,predicted,match,method,seconds\n"


def test_table_parallel_workers(tmp_path):
    argv = [
        sys.executable, "-m", "fermatpow", "table",
        "--min-n", "2", "--max-n", "3", "--max-m", "2",
        "--workers", "2", "--format", "csv",
    ]
    result = subprocess.run(
        argv, capture_output=True, env=_subprocess_env(tmp_path / "par"), text=True
    )
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    assert len(lines) == 5
    assert all(line.split(",")[4] == "true" for line in lines[1:])


def _subprocess_env(cache_dir):
    env = dict(os.environ)
    env["FERMAT_CACHE_DIR"] = str(cache_dir)
    env.setdefault("PYTHONHASHSEED", "0")
    return env


def test_cold_and_warm_cache_agree(tmp_path):
    cache = tmp_path / "cache"
    argv = [sys.executable, "-m", "fermatpow", "alpha", "--n", "2", "--m", "4", "--format", "json"]
    cold = subprocess.run(argv, capture_output=True, env=_subprocess_env(cache), text=True)
    assert cold.returncode == 0
    assert (cache / ".").exists()
    warm = subprocess.run(argv, capture_output=True, env=_subprocess_env(cache), text=True)
    assert warm.returncode == 0
    assert cold.stdout == warm.stdout


def test_cell_budget_skips_and_marks(tmp_path):
    argv = [
        sys.executable, "-m", "fermatpow", "table",
        "--min-n", "3", "--max-n", "3", "--max-m", "6",
        "--cell-budget", "0.000001", "--format", "csv",
    ]
    result = subprocess.run(
        argv, capture_output=True, env=_subprocess_env(tmp_path / "cold"), text=True
    )
    assert result.returncode == 3
    assert "skipped" in result.stdout


def test_usage_error_exit_code():
    result = subprocess.run(
        [sys.executable, "-m", "fermatpow", "alpha", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 2
