"""Floating-point see-saw oracle for the maximum purity.

This is the only module that touches inexact arithmetic.  It produces a
certified *lower* bound on the maximum purity of the A-side reduction over
unit vectors in the n-fold tensor power of the antisymmetric pair subspace,
for cross-validation against the exact LP upper bounds.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

DIMENSION_GUARD = 2 ** 16

STALL_TOLERANCE = 1e-12
POWER_TOLERANCE = 1e-13
POWER_MAX_STEPS = 20_000


class ResourceLimitError(RuntimeError):
    """Problem size exceeds the configured memory guard."""


@dataclass(frozen=True)
class PurityResult:
    value: float
    n: int
    d: int
    restarts: int
    iterations: int
    seed: int


def _pair_isometry(d: int) -> np.ndarray:
    """(d, d, m) tensor mapping pair coordinates to antisymmetric two-tensors."""
    pairs = list(combinations(range(d), 2))
    w = np.zeros((d, d, len(pairs)))
    r = 1.0 / np.sqrt(2.0)
    for p, (i, j) in enumerate(pairs):
        w[i, j, p] = r
        w[j, i, p] = -r
    return w


def _lift(u: np.ndarray, w: np.ndarray, n: int, d: int) -> np.ndarray:
    """Coefficient vector -> amplitude matrix of shape (d^n, d^n)."""
    m = w.shape[2]
    t = u.reshape((m,) * n)
    for _ in range(n):
        t = np.tensordot(t, w, axes=([0], [2]))
    # axes now (a_1, b_1, ..., a_n, b_n); group the a's before the b's
    order = list(range(0, 2 * n, 2)) + list(range(1, 2 * n, 2))
    return t.transpose(order).reshape(d ** n, d ** n)


def _project(mat: np.ndarray, w: np.ndarray, n: int, d: int) -> np.ndarray:
    """Adjoint of ``_lift``: amplitude matrix -> coefficient vector."""
    order = [None] * (2 * n)
    for k in range(n):
        order[2 * k] = k
        order[2 * k + 1] = n + k
    t = mat.reshape((d,) * (2 * n)).transpose(order)
    for _ in range(n):
        t = np.tensordot(t, w, axes=([0, 1], [0, 1]))
    return t.reshape(-1)


def _top_eigenvector(matvec, start: np.ndarray, rng: np.random.Generator
                     ) -> np.ndarray:
    """Power iteration for the top eigenvector of a PSD map."""
    v = start / np.linalg.norm(start)
    lam = 0.0
    for _ in range(POWER_MAX_STEPS):
        nxt = matvec(v)
        norm = np.linalg.norm(nxt)
        if norm < 1e-300:
            # start vector orthogonal to the support; reseed deterministically
            v = rng.standard_normal(v.shape[0])
            v /= np.linalg.norm(v)
            continue
        nxt /= norm
        change = abs(norm - lam) / max(norm, 1e-300)
        v, lam = nxt, norm
        if change < POWER_TOLERANCE:
            break
    return v


def _run_restart(n: int, d: int, w: np.ndarray, iterations: int,
                 seed: int) -> tuple[float, list[float]]:
    rng = np.random.default_rng(seed)
    m = w.shape[2]
    u = rng.standard_normal(m ** n)
    u /= np.linalg.norm(u)
    history: list[float] = []
    best = 0.0
    for _ in range(iterations):
        mat = _lift(u, w, n, d)
        rho = mat @ mat.T

        def matvec(v: np.ndarray) -> np.ndarray:
            return _project(rho @ _lift(v, w, n, d), w, n, d)

        u = _top_eigenvector(matvec, u, rng)
        mat = _lift(u, w, n, d)
        rho = mat @ mat.T
        purity = float(np.sum(rho * rho))
        history.append(purity)
        if purity < best + STALL_TOLERANCE:
            best = max(best, purity)
            break
        best = purity
    return best, history


def purity_seesaw(n: int, d: int, restarts: int = 10, iterations: int = 200,
                  seed: int = 0, threads: int = 1) -> PurityResult:
    """Alternating maximisation of the reduced-state purity.

    Each restart draws a normalised Gaussian start (generator seeded with
    seed + restart index), then alternates between fixing the comparison
    state and taking the top eigenvector of the projected operator.  The
    per-restart purity sequence is non-decreasing; the best value over all
    restarts is returned.  Runs restarts concurrently when ``threads`` > 1;
    the result does not depend on the thread count.
    """
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if restarts < 1 or iterations < 1:
        raise ValueError("restarts and iterations must be positive")
    if threads < 1:
        raise ValueError("threads must be positive")
    if d ** (2 * n) > DIMENSION_GUARD:
        raise ResourceLimitError(
            f"d^(2n) = {d ** (2 * n)} exceeds the guard {DIMENSION_GUARD}")
    w = _pair_isometry(d)
    seeds = [seed + r for r in range(restarts)]
    if threads == 1:
        outcomes = [_run_restart(n, d, w, iterations, s) for s in seeds]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(
                lambda s: _run_restart(n, d, w, iterations, s), seeds))
    value = max(v for v, _ in outcomes)
    if value > 1.0 + 1e-9:
        raise ArithmeticError(f"purity {value} exceeds one")
    return PurityResult(value=min(value, 1.0), n=n, d=d, restarts=restarts,
                        iterations=iterations, seed=seed)
