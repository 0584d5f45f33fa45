"""Symmetry-reduced linear programmes bounding the maximum purity of reduced
states in tensor powers of the antisymmetric pair space.

The n-copy programme has variables indexed by strings over the Young-shape
alphabet; objective weights and PPT constraint rows are tensor powers of the
single-copy data.  Everything is invariant under permuting the copies, so the
programme is reduced to one variable per occurrence-count type (aggregated
mass), shrinking 3^n variables to C(n+2,2) and likewise for constraints.

Two forms exist:

* ``full3``: all shapes present at the given dimension (two of them at d=3),
  exact normalisation, constraint rows from the rescaled PPT matrix.
* ``truncated2``: the dimension-free limit programme on the two
  symmetric-square shapes with constraint matrix [[-2,1],[1,1]] and
  normalisation relaxed to <= 1.  Only valid in the limit d -> infinity.

The reduced dual of the truncated programme and an analytic dual-feasible
point (geometric weights, value (3/4)^n) are provided alongside.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Iterator, NamedTuple

from .projectors import DINF, constraint_columns
from .simplex import LPProblem, LPSolution, simplex_solve

FORMS = ("full3", "truncated2")
PARITIES = ("none", "even")

TAIL_SHAPE = (2, 1, 1)

# Single-copy objective weights: the flip expectations of the reduced states.
OBJECTIVE_WEIGHTS = {(1, 1, 1, 1): Fraction(-1), (2, 2): Fraction(1, 2),
                     (2, 1, 1): Fraction(0)}

# The truncated two-shape constraint matrix and its transpose convention:
# rows ordered so that the (-2)-weighted row is first.
TRUNCATED_ROWS = ((Fraction(-2), Fraction(1)), (Fraction(1), Fraction(1)))


def compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """All s-tuples of nonnegative integers summing to n, lexicographically."""
    if s == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, s - 1):
            yield (first,) + rest


def multinomial(counts: tuple[int, ...]) -> int:
    return factorial(sum(counts)) // prod(factorial(c) for c in counts)


@dataclass(frozen=True)
class SymLP:
    """A permutation-symmetric tensor-power LP, reduced to count types.

    Variables are aggregated masses q_t = multiplicity(t) * p_t where p_t is
    the common value of the symmetric solution on strings of type t.
    """
    n: int
    symbols: tuple
    weights: tuple[Fraction, ...]               # per-symbol objective weight
    rows: tuple[tuple[Fraction, ...], ...]      # single-copy constraint rows
    normalization: str                          # "eq" (= 1) or "le" (<= 1)
    types: tuple[tuple[int, ...], ...]          # variable types, lex order
    row_types: tuple[tuple[int, ...], ...]      # constraint types, lex order

    def objective_coeff(self, t: tuple[int, ...]) -> Fraction:
        out = Fraction(1)
        for w, c in zip(self.weights, t):
            if c:
                out *= w ** c
        return out

    def _row_polynomial(self, row_type: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
        """Sum over strings y of type t of prod_i rows[w_i][y_i], as a
        polynomial over variable types, for any constraint string w of
        ``row_type``."""
        s = len(self.symbols)
        poly: dict[tuple[int, ...], Fraction] = {(0,) * s: Fraction(1)}
        for r, count in enumerate(row_type):
            line = self.rows[r]
            for _ in range(count):
                nxt: dict[tuple[int, ...], Fraction] = {}
                for t, coeff in poly.items():
                    for y in range(s):
                        if line[y] == 0:
                            continue
                        key = t[:y] + (t[y] + 1,) + t[y + 1:]
                        nxt[key] = nxt.get(key, Fraction(0)) + coeff * line[y]
                poly = nxt
        return poly

    def to_lp(self) -> LPProblem:
        index = {t: i for i, t in enumerate(self.types)}
        nv = len(self.types)
        c = [self.objective_coeff(t) for t in self.types]
        a_ub: list[list[Fraction]] = []
        b_ub: list[Fraction] = []
        for rt in self.row_types:
            poly = self._row_polynomial(rt)
            row = [Fraction(0)] * nv
            for t, coeff in poly.items():
                i = index.get(t)
                if i is not None:
                    # constraint acts on per-string values p_t = q_t / mult(t)
                    row[i] = -coeff / multinomial(t)
            a_ub.append(row)
            b_ub.append(Fraction(0))
        ones = [Fraction(1)] * nv
        if self.normalization == "eq":
            return LPProblem(objective=c, a_ub=a_ub, b_ub=b_ub,
                             a_eq=[ones], b_eq=[Fraction(1)])
        a_ub.append(ones)
        b_ub.append(Fraction(1))
        return LPProblem(objective=c, a_ub=a_ub, b_ub=b_ub)


def build_purity_bound(n: int, d=DINF, parity: str = "none",
                       form: str | None = None,
                       corner: str = "derived") -> SymLP:
    """Symmetry-reduced LP whose optimum bounds the n-copy maximum purity.

    ``d`` is an integer >= 3 or ``math.inf``; ``form`` defaults to
    ``truncated2`` in the limit and ``full3`` at finite dimension.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}")
    if form is None:
        form = "truncated2" if d == DINF else "full3"
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    if form == "truncated2":
        if d != DINF:
            raise ValueError("the truncated form is only valid in the "
                             "d -> infinity limit")
        if parity != "none":
            raise ValueError("the parity restriction applies to the full form")
        symbols = ((1, 1, 1, 1), (2, 2))
        weights = tuple(OBJECTIVE_WEIGHTS[s] for s in symbols)
        rows = TRUNCATED_ROWS
        normalization = "le"
    else:
        symbols, matrix = constraint_columns(d, corner)
        weights = tuple(OBJECTIVE_WEIGHTS[s] for s in symbols)
        rows = tuple(tuple(matrix.row(i)) for i in range(3))
        normalization = "eq"
    types = tuple(compositions(n, len(symbols)))
    if parity == "even":
        tail = symbols.index(TAIL_SHAPE)
        types = tuple(t for t in types if t[tail] % 2 == 0)
    row_types = tuple(compositions(n, len(rows)))
    return SymLP(n=n, symbols=symbols, weights=weights, rows=rows,
                 normalization=normalization, types=types, row_types=row_types)


def drop_first_row(symlp: SymLP) -> SymLP:
    """Relaxation that deletes the first single-copy constraint row."""
    rows = symlp.rows[1:]
    return SymLP(n=symlp.n, symbols=symlp.symbols, weights=symlp.weights,
                 rows=rows, normalization=symlp.normalization,
                 types=symlp.types,
                 row_types=tuple(compositions(symlp.n, len(rows))))


class PurityBound(NamedTuple):
    value: Fraction
    solution: LPSolution
    program: SymLP


def solve_purity_bound(n: int, d=DINF, parity: str = "none",
                       form: str | None = None,
                       corner: str = "derived") -> PurityBound:
    symlp = build_purity_bound(n, d, parity, form, corner)
    sol = simplex_solve(symlp.to_lp())
    if sol.status != "optimal":
        raise RuntimeError(f"purity LP unexpectedly {sol.status}")
    return PurityBound(sol.value, sol, symlp)


def substitute_tail_masses(masses: dict[tuple[int, int, int], Fraction]
                           ) -> dict[tuple[int, int], Fraction]:
    """Feasible-point mapper from three-shape types to two-shape types.

    Each tail occurrence is replaced by the mixture 1/3 first shape + 2/3
    second shape; the image point has the same objective value and satisfies
    the truncated constraints whenever the source satisfied the last two rows.
    """
    out: dict[tuple[int, int], Fraction] = {}
    third = Fraction(1, 3)
    for (i, j, t), mass in masses.items():
        if mass == 0:
            continue
        for l in range(t + 1):
            w = comb(t, l) * third ** l * (2 * third) ** (t - l)
            key = (i + l, j + t - l)
            out[key] = out.get(key, Fraction(0)) + mass * w
    return out


def type_masses(symlp: SymLP, solution: LPSolution) -> dict[tuple[int, ...], Fraction]:
    return {t: v for t, v in zip(symlp.types, solution.x) if v != 0}


# -- the reduced dual of the truncated programme -------------------------------

def dual_coeff(n: int, m: int, k: int) -> int:
    """Coefficient of the k-th symmetrised dual variable in the m-th
    symmetrised dual constraint:

        sum_l (-2)^l C(m, l) C(n-m, k-l),  l from max(0, k+m-n) to min(k, m).

    The same numbers are the truncated primal constraint coefficients by the
    symmetry of the constraint matrix.
    """
    if not (0 <= m <= n and 0 <= k <= n):
        raise ValueError("require 0 <= m, k <= n")
    total = 0
    for l in range(max(0, k + m - n), min(k, m) + 1):
        total += (-2) ** l * comb(m, l) * comb(n - m, k - l)
    return total


class DualPoint(NamedTuple):
    delta: tuple[Fraction, ...]            # symmetrised dual variables, k = 0..n
    z: Fraction                            # the certified bound
    feasible: bool
    constraint_values: tuple[Fraction, ...]  # right-hand sides, m = 0..n


def analytic_dual_point(n: int, beta: Fraction = Fraction(1, 2),
                        gamma: Fraction | None = None) -> DualPoint:
    """Geometric dual point: delta_k = gamma * beta^(n-k) for k < n, delta_n = 0.

    z is set to the largest symmetrised dual constraint value, so the point is
    feasible by construction whenever the weights are nonnegative.  With the
    defaults beta = 1/2, gamma = 2^-n the bound is exactly (3/4)^n.  The
    hypergeometric closed form

        sum_k gamma beta^(n-k) coeff(n,m,k) = gamma (beta+1)^(n-m) (beta-2)^m

    is re-verified on every call.
    """
    if n < 1:
        raise ValueError("n must be positive")
    beta = Fraction(beta)
    if not 0 <= beta < 1:
        raise ValueError("beta must satisfy 0 <= beta < 1")
    gamma = Fraction(1, 2 ** n) if gamma is None else Fraction(gamma)

    delta = tuple(gamma * beta ** (n - k) for k in range(n)) + (Fraction(0),)
    constraint_values = []
    for m in range(n + 1):
        coeffs = [dual_coeff(n, m, k) for k in range(n + 1)]
        full_sum = sum(gamma * beta ** (n - k) * coeffs[k] for k in range(n + 1))
        if full_sum != gamma * (beta + 1) ** (n - m) * (beta - 2) ** m:
            raise ArithmeticError("geometric dual closed form failed")
        base = Fraction((-1) ** m * 2 ** m, 2 ** n)
        constraint_values.append(base + sum(delta[k] * coeffs[k]
                                            for k in range(n + 1)))
    z = max(constraint_values)
    feasible = all(dk >= 0 for dk in delta) and z >= 0
    return DualPoint(delta, z, feasible, tuple(constraint_values))


def build_dual(n: int) -> LPProblem:
    """Reduced dual of the truncated programme: min z over nonnegative
    symmetrised weights, one constraint per count of distinguished rows.

    Encoded as a maximisation of -z; negate the optimum to recover the bound.
    """
    if n < 1:
        raise ValueError("n must be positive")
    nv = n + 2  # z, delta_0 .. delta_n
    c = [Fraction(-1)] + [Fraction(0)] * (n + 1)
    a_ub = []
    b_ub = []
    for m in range(n + 1):
        row = [Fraction(-1)] + [Fraction(dual_coeff(n, m, k)) for k in range(n + 1)]
        a_ub.append(row)
        b_ub.append(Fraction(-((-1) ** m * 2 ** m), 2 ** n))
    return LPProblem(objective=c, a_ub=a_ub, b_ub=b_ub,
                     nonneg=[True] * nv)


class DualBound(NamedTuple):
    value: Fraction
    solution: LPSolution


def solve_dual(n: int) -> DualBound:
    """Exact optimum of the reduced dual; equals the truncated primal optimum."""
    sol = simplex_solve(build_dual(n))
    if sol.status != "optimal":
        raise RuntimeError(f"dual LP unexpectedly {sol.status}")
    return DualBound(-sol.value, sol)


# -- unreduced reference programme (for soundness tests and small n) -----------

def build_unreduced(n: int, d=DINF, form: str | None = None,
                    corner: str = "derived") -> LPProblem:
    """The same programme over all strings, without symmetry reduction."""
    if form is None:
        form = "truncated2" if d == DINF else "full3"
    if form == "truncated2":
        if d != DINF:
            raise ValueError("the truncated form is only valid in the limit")
        symbols = ((1, 1, 1, 1), (2, 2))
        weights = tuple(OBJECTIVE_WEIGHTS[s] for s in symbols)
        rows = TRUNCATED_ROWS
        normalization = "le"
    else:
        symbols, matrix = constraint_columns(d, corner)
        weights = tuple(OBJECTIVE_WEIGHTS[s] for s in symbols)
        rows = tuple(tuple(matrix.row(i)) for i in range(3))
        normalization = "eq"
    s = len(symbols)
    strings = list(product(range(s), repeat=n))
    c = [prod((weights[y] for y in w), start=Fraction(1)) for w in strings]
    a_ub = []
    b_ub = []
    for rpat in product(range(len(rows)), repeat=n):
        row = [-prod((rows[r][y] for r, y in zip(rpat, w)), start=Fraction(1))
               for w in strings]
        a_ub.append(row)
        b_ub.append(Fraction(0))
    ones = [Fraction(1)] * len(strings)
    if normalization == "eq":
        return LPProblem(objective=c, a_ub=a_ub, b_ub=b_ub,
                         a_eq=[ones], b_eq=[Fraction(1)])
    a_ub.append(ones)
    b_ub.append(Fraction(1))
    return LPProblem(objective=c, a_ub=a_ub, b_ub=b_ub)
