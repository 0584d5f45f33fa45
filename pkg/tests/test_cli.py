"""Command-line surface: exit codes, formats, reproducibility."""

import json
from fractions import Fraction as F

import pytest

from antisym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_squashed_even(capsys):
    code, out, _ = run(capsys, "squashed", "--d", "4")
    assert code == 0
    assert "3/2" in out and "0.584962" in out


def test_squashed_all_k_table(capsys):
    code, out, _ = run(capsys, "squashed", "--d", "3", "--all-k")
    assert code == 0
    assert "cmi_k2" in out and "cmi_k3" in out


def test_squashed_usage_error(capsys):
    code, _, err = run(capsys, "squashed", "--d", "2")
    assert code == 2
    assert "at least 3" in err


def test_lp_primal_golden(capsys):
    code, out, _ = run(capsys, "lp", "primal", "--n", "10", "--dinf",
                       "--form", "truncated2")
    assert code == 0
    assert "12/283" in out


def test_lp_primal_dimension_three(capsys):
    code, out, _ = run(capsys, "lp", "primal", "--n", "2", "--d", "3",
                       "--form", "full3")
    assert code == 0
    assert "1/4" in out


def test_lp_primal_rejects_bad_combination(capsys):
    code, _, err = run(capsys, "lp", "primal", "--n", "2", "--d", "5",
                       "--form", "truncated2")
    assert code == 2


def test_lp_primal_rejects_d_and_dinf(capsys):
    code, _, err = run(capsys, "lp", "primal", "--n", "2", "--d", "5",
                       "--dinf")
    assert code == 2
    assert "mutually exclusive" in err


def test_lp_primal_corner_flag(capsys):
    code, out, _ = run(capsys, "lp", "primal", "--n", "3", "--d", "5",
                       "--corner", "alt", "--format", "csv")
    assert code == 0
    assert "corner" not in out  # flag affects the programme, not the schema


def test_lp_dual_geometric_point(capsys):
    code, out, _ = run(capsys, "lp", "dual", "--n", "8")
    assert code == 0
    assert "6561/65536" in out
    assert "feasible" in out


def test_json_round_trip_and_determinism(capsys):
    code, first, _ = run(capsys, "lp", "primal", "--n", "6", "--dinf",
                         "--format", "json")
    assert code == 0
    code, second, _ = run(capsys, "lp", "primal", "--n", "6", "--dinf",
                          "--format", "json")
    assert first == second
    payload = json.loads(first)
    values = {r["quantity"]: r for r in payload["results"]}
    exact = values["purity_bound"]["exact"]
    assert F(int(exact["num"]), int(exact["den"])) == F(1, 7)


def test_csv_schema(capsys):
    code, out, _ = run(capsys, "bounds", "--d", "4", "--n", "8",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "quantity,n,d,exact_num,exact_den,decimal,source"
    row = dict(zip(lines[0].split(","), lines[1].split(",")))
    assert row["quantity"] == "kd_upper"
    assert (row["exact_num"], row["exact_den"]) == ("3", "2")


def test_bounds_table_values(capsys):
    code, out, _ = run(capsys, "bounds", "--d", "4", "--n", "8")
    assert code == 0
    assert "5/66" in out            # limit LP value at n = 8
    assert "4/3" in out             # analytic certificate core
    assert "0.4150374" in out


def test_verify_rep_passes(capsys):
    code, out, _ = run(capsys, "verify", "rep", "--d", "3")
    assert code == 0
    assert "flip_expectations" in out


def test_verify_rep_full_level(capsys):
    code, out, _ = run(capsys, "verify", "rep", "--d", "4",
                       "--level", "full")
    assert code == 0
    assert "transpose_overlaps_(matrix)" in out


def test_verify_rep_range(capsys):
    code, _, err = run(capsys, "verify", "rep", "--d", "2")
    assert code == 2


def test_purity_sandwich(capsys):
    code, out, _ = run(capsys, "purity", "--d", "3", "--n", "1",
                       "--restarts", "4", "--iters", "50", "--seed", "1")
    assert code == 0
    assert "sandwich_ok" in out


def test_purity_seed_reproducible_json(capsys):
    args = ("purity", "--d", "3", "--n", "1", "--restarts", "3",
            "--iters", "40", "--seed", "9", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("ANTISYM_THREADS", "zero")
    code, _, err = run(capsys, "purity", "--d", "3", "--n", "1",
                       "--restarts", "2", "--iters", "20", "--seed", "0")
    assert code == 2
    monkeypatch.setenv("ANTISYM_THREADS", "2")
    code, out, _ = run(capsys, "purity", "--d", "3", "--n", "1",
                       "--restarts", "2", "--iters", "20", "--seed", "0")
    assert code == 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.json"
    code, out, _ = run(capsys, "squashed", "--d", "5",
                       "--format", "json", "--out", str(target))
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["command"] == "squashed"


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["lp", "primal"])   # missing required --n
    assert exc.value.code == 2


def test_solver_failure_exit_code(capsys, monkeypatch):
    from antisym import cli
    from antisym.simplex import SolverError

    def boom(*args, **kwargs):
        raise SolverError("synthetic failure")

    monkeypatch.setattr(cli.prg, "solve_purity_bound", boom)
    code, _, err = run(capsys, "lp", "primal", "--n", "2", "--dinf")
    assert code == 3
    assert "solver failure" in err
