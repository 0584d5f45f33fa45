"""Floating-point see-saw oracle: known values, monotonicity, determinism."""

import pytest

from antisym.programs import solve_purity_bound
from antisym.seesaw import (ResourceLimitError, _pair_isometry, _run_restart,
                            purity_seesaw)


def test_single_copy_purity_is_half():
    for d in (3, 4, 5, 6):
        result = purity_seesaw(1, d, restarts=5, iterations=100, seed=11)
        assert abs(result.value - 0.5) < 1e-9, d


def test_two_copies_dimension_three():
    result = purity_seesaw(2, 3, restarts=20, iterations=500, seed=7)
    assert abs(result.value - 0.25) < 1e-6


def test_result_metadata():
    result = purity_seesaw(1, 3, restarts=2, iterations=50, seed=5)
    assert (result.n, result.d, result.restarts, result.iterations,
            result.seed) == (1, 3, 2, 50, 5)
    assert 0.0 <= result.value <= 1.0


def test_monotone_within_restart():
    w = _pair_isometry(3)
    _, history = _run_restart(2, 3, w, iterations=100, seed=13)
    for a, b in zip(history, history[1:]):
        assert b >= a - 1e-10


def test_deterministic_given_seed_and_thread_count():
    a = purity_seesaw(2, 3, restarts=4, iterations=50, seed=42)
    b = purity_seesaw(2, 3, restarts=4, iterations=50, seed=42)
    c = purity_seesaw(2, 3, restarts=4, iterations=50, seed=42, threads=3)
    assert a.value == b.value == c.value


def test_dimension_guard():
    with pytest.raises(ResourceLimitError):
        purity_seesaw(3, 8, restarts=1, iterations=1, seed=0)


def test_bad_arguments():
    with pytest.raises(ValueError):
        purity_seesaw(0, 3)
    with pytest.raises(ValueError):
        purity_seesaw(1, 3, restarts=0)
    with pytest.raises(ValueError):
        purity_seesaw(1, 3, threads=0)


def test_sandwich_against_exact_bounds():
    cases = [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4)]
    for n, d in cases:
        oracle = purity_seesaw(n, d, restarts=6, iterations=100, seed=3)
        exact = solve_purity_bound(n, d, form="full3").value
        assert oracle.value <= float(exact) + 1e-6, (n, d)
