"""Exact rational simplex with primal and dual certificates.

Problems are maximisations over rational data:

    max c.x   s.t.   A_ub x <= b_ub,  A_eq x = b_eq,  x_j >= 0 (flagged)

Two-phase method with Bland's anti-cycling rule throughout.  The tableau
keeps every row as a primitive integer vector (contents divided out after
each pivot), which bounds entry growth by subdeterminant sizes instead of
letting rational numerators and denominators compound; the objective row is
held as integers over one positive denominator.  Every optimal solution is
returned together with a dual vector, and the pair is certified exactly
(feasibility both sides, zero duality gap, complementary slackness) before
being handed back; a certification failure is a bug and raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .linalg import _frac

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


class SolverError(RuntimeError):
    """Internal certification failure; indicates a solver bug."""


@dataclass
class LPProblem:
    """max objective.x subject to ub rows, eq rows and sign constraints."""
    objective: list[Fraction]
    a_ub: list[list[Fraction]] = field(default_factory=list)
    b_ub: list[Fraction] = field(default_factory=list)
    a_eq: list[list[Fraction]] = field(default_factory=list)
    b_eq: list[Fraction] = field(default_factory=list)
    nonneg: list[bool] | None = None   # default: all variables nonnegative

    def __post_init__(self):
        self.objective = [_frac(v) for v in self.objective]
        n = len(self.objective)
        self.a_ub = [[_frac(v) for v in row] for row in self.a_ub]
        self.a_eq = [[_frac(v) for v in row] for row in self.a_eq]
        self.b_ub = [_frac(v) for v in self.b_ub]
        self.b_eq = [_frac(v) for v in self.b_eq]
        if self.nonneg is None:
            self.nonneg = [True] * n
        if any(len(r) != n for r in self.a_ub) or any(len(r) != n for r in self.a_eq):
            raise ValueError("constraint row length != number of variables")
        if len(self.a_ub) != len(self.b_ub) or len(self.a_eq) != len(self.b_eq):
            raise ValueError("constraint/right-hand-side count mismatch")
        if len(self.nonneg) != n:
            raise ValueError("nonneg flag count mismatch")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass
class LPSolution:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None
    y_ub: list[Fraction] | None = None
    y_eq: list[Fraction] | None = None

    @property
    def dual_value(self) -> Fraction | None:
        return self._dual_value

    _dual_value: Fraction | None = None


def _certify(lp: LPProblem, x: list[Fraction], y_ub: list[Fraction],
             y_eq: list[Fraction]) -> Fraction:
    """Exact optimality certificate; returns the common objective value."""
    n = lp.num_vars
    slacks_ub = []
    for row, b in zip(lp.a_ub, lp.b_ub):
        s = b - sum(a * v for a, v in zip(row, x))
        if s < 0:
            raise SolverError("primal ub row violated")
        slacks_ub.append(s)
    for row, b in zip(lp.a_eq, lp.b_eq):
        if sum(a * v for a, v in zip(row, x)) != b:
            raise SolverError("primal eq row violated")
    for v, nn in zip(x, lp.nonneg):
        if nn and v < 0:
            raise SolverError("primal sign constraint violated")
    if any(y < 0 for y in y_ub):
        raise SolverError("dual sign constraint violated")
    reduced = []
    for j in range(n):
        r = (sum(y * lp.a_ub[i][j] for i, y in enumerate(y_ub))
             + sum(y * lp.a_eq[i][j] for i, y in enumerate(y_eq))
             - lp.objective[j])
        if lp.nonneg[j]:
            if r < 0:
                raise SolverError("dual row violated")
        elif r != 0:
            raise SolverError("dual equality (free variable) violated")
        reduced.append(r)
    primal = sum(c * v for c, v in zip(lp.objective, x))
    dual = (sum(y * b for y, b in zip(y_ub, lp.b_ub))
            + sum(y * b for y, b in zip(y_eq, lp.b_eq)))
    if primal != dual:
        raise SolverError("nonzero duality gap")
    for y, s in zip(y_ub, slacks_ub):
        if y * s != 0:
            raise SolverError("complementary slackness (rows) violated")
    for v, r in zip(x, reduced):
        if v * r != 0:
            raise SolverError("complementary slackness (columns) violated")
    return primal


class _Tableau:
    """Simplex tableau over primitive integer rows.

    Row r holds an integer vector plus integer right-hand side; the entry on
    its basic column is positive and the basic value is rhs/pivot-entry.
    Scaling a row by a positive integer never changes the represented
    equation, so every row is reduced to primitive form after each pivot.
    The objective row (reduced costs z_j - c_j) is maintained as integers
    over the positive denominator ``obj_den``.
    """

    def __init__(self, rows: list[list[int]], rhs: list[int],
                 basis: list[int], num_cols: int):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.num_cols = num_cols
        self.obj: list[int] = [0] * num_cols
        self.obj_den = 1

    def _reduce_row(self, i: int) -> None:
        g = abs(self.rhs[i])
        for v in self.rows[i]:
            if v:
                g = gcd(g, abs(v))
                if g == 1:
                    return
        if g > 1:
            self.rows[i] = [v // g for v in self.rows[i]]
            self.rhs[i] //= g

    def _reduce_obj(self) -> None:
        g = self.obj_den
        for v in self.obj:
            if v:
                g = gcd(g, abs(v))
                if g == 1:
                    return
        if g > 1:
            self.obj = [v // g for v in self.obj]
            self.obj_den //= g

    def set_objective(self, cost: list[Fraction]) -> None:
        """Install reduced costs z_j - c_j for the current basis."""
        zc = []
        for j in range(self.num_cols):
            total = -cost[j]
            for r, b in enumerate(self.basis):
                cb = cost[b]
                if cb != 0 and self.rows[r][j] != 0:
                    total += cb * Fraction(self.rows[r][j],
                                           self.rows[r][b])
            zc.append(total)
        den = lcm(*(v.denominator for v in zc)) if zc else 1
        self.obj = [int(v * den) for v in zc]
        self.obj_den = den

    def reduced_cost(self, j: int) -> Fraction:
        return Fraction(self.obj[j], self.obj_den)

    def basic_value(self, r: int) -> Fraction:
        return Fraction(self.rhs[r], self.rows[r][self.basis[r]])

    def pivot(self, r: int, j: int) -> None:
        if self.rows[r][j] < 0:
            # only reached when driving artificials out of degenerate rows
            self.rows[r] = [-v for v in self.rows[r]]
            self.rhs[r] = -self.rhs[r]
        piv = self.rows[r][j]
        prow = self.rows[r]
        prhs = self.rhs[r]
        for i in range(len(self.rows)):
            if i == r:
                continue
            a = self.rows[i][j]
            if a == 0:
                continue
            row = self.rows[i]
            self.rows[i] = [x * piv - y * a for x, y in zip(row, prow)]
            self.rhs[i] = self.rhs[i] * piv - prhs * a
            self._reduce_row(i)
        a = self.obj[j]
        if a != 0:
            self.obj = [x * piv - y * a for x, y in zip(self.obj, prow)]
            self.obj_den *= piv
            self._reduce_obj()
        self._reduce_row(r)
        self.basis[r] = j

    def run(self, barred: set[int]) -> str:
        """Maximise; returns OPTIMAL or UNBOUNDED.  Bland's rule throughout."""
        while True:
            enter = -1
            for j in range(self.num_cols):
                if self.obj[j] < 0 and j not in barred:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            leave = -1
            best_num = best_den = None   # ratio rhs/entry as num/den, both >= 0
            for r in range(len(self.rows)):
                a = self.rows[r][enter]
                if a <= 0:
                    continue
                if leave < 0:
                    better = True
                else:
                    lhs = self.rhs[r] * best_den
                    rhs = best_num * a
                    better = lhs < rhs or (lhs == rhs
                                           and self.basis[r] < self.basis[leave])
                if better:
                    best_num, best_den = self.rhs[r], a
                    leave = r
            if leave < 0:
                return UNBOUNDED
            self.pivot(leave, enter)


def simplex_solve(lp: LPProblem) -> LPSolution:
    """Solve exactly; statuses are optimal, infeasible or unbounded."""
    n = lp.num_vars
    zero = Fraction(0)

    # Split free variables x = u - v with u, v >= 0.
    free_of: dict[int, int] = {}
    for j, nn in enumerate(lp.nonneg):
        if not nn:
            free_of[j] = n + len(free_of)
    width = n + len(free_of)

    def expand(row: list[Fraction]) -> list[Fraction]:
        ext = list(row) + [zero] * len(free_of)
        for j, jj in free_of.items():
            ext[jj] = -row[j]
        return ext

    def integerise(row: list[Fraction], b: Fraction) -> tuple[list[int], int, int]:
        scale = lcm(*(v.denominator for v in row + [b]))
        return [int(v * scale) for v in row], int(b * scale), scale

    cost_full = expand(lp.objective)

    m_ub = len(lp.a_ub)
    m_eq = len(lp.a_eq)
    m = m_ub + m_eq
    num_cols = width + m_ub  # structural + slack; artificials appended after
    rows: list[list[int]] = []
    rhs: list[int] = []
    signs: list[int] = []
    scales: list[int] = []
    for i in range(m):
        if i < m_ub:
            raw, b = expand(lp.a_ub[i]), lp.b_ub[i]
        else:
            raw, b = expand(lp.a_eq[i - m_ub]), lp.b_eq[i - m_ub]
        int_row, int_b, scale = integerise(raw, b)
        int_row += [0] * m_ub
        if i < m_ub:
            int_row[width + i] = 1
        sign = 1
        if int_b < 0:
            int_row = [-v for v in int_row]
            int_b, sign = -int_b, -1
        rows.append(int_row)
        rhs.append(int_b)
        signs.append(sign)
        scales.append(scale)

    # Initial basis: positive slacks where available, artificials elsewhere.
    basis = [-1] * m
    id_col = [-1] * m
    art_cols: list[int] = []
    for i in range(m):
        if i < m_ub and signs[i] > 0:
            basis[i] = width + i
            id_col[i] = width + i
    for i in range(m):
        if basis[i] < 0:
            col = num_cols + len(art_cols)
            art_cols.append(col)
            for r in range(m):
                rows[r].append(1 if r == i else 0)
            basis[i] = col
            id_col[i] = col
    total_cols = num_cols + len(art_cols)
    for i in range(m):
        if len(rows[i]) < total_cols:
            rows[i].extend([0] * (total_cols - len(rows[i])))

    tab = _Tableau(rows, rhs, basis, total_cols)
    barred: set[int] = set()

    if art_cols:
        art_set = set(art_cols)
        phase1 = [Fraction(-1) if j in art_set else zero
                  for j in range(total_cols)]
        tab.set_objective(phase1)
        if tab.run(barred) != OPTIMAL:
            raise SolverError("phase one cannot be unbounded")
        for r in range(m):
            if tab.basis[r] in art_set and tab.rhs[r] != 0:
                return LPSolution(status=INFEASIBLE)
        # Drive basic artificials out where possible; bar them from phase two.
        for r in range(m):
            if tab.basis[r] in art_set:
                for j in range(num_cols):
                    if j not in art_set and tab.rows[r][j] != 0:
                        tab.pivot(r, j)
                        break
        barred = art_set

    phase2 = cost_full + [zero] * (m_ub + len(art_cols))
    tab.set_objective(phase2)
    if tab.run(barred) == UNBOUNDED:
        return LPSolution(status=UNBOUNDED)

    # Primal solution.
    x_ext = [zero] * width
    for r, b in enumerate(tab.basis):
        if b < width:
            x_ext[b] = tab.basic_value(r)
    x = list(x_ext[:n])
    for j, jj in free_of.items():
        x[j] = x_ext[j] - x_ext[jj]

    # Dual solution read off the per-row identity columns, undoing the
    # row scaling and sign normalisation applied during setup.
    y = [signs[i] * scales[i] * tab.reduced_cost(id_col[i]) for i in range(m)]
    y_ub = y[:m_ub]
    y_eq = y[m_ub:]

    value = _certify(lp, x, y_ub, y_eq)
    sol = LPSolution(status=OPTIMAL, x=x, value=value, y_ub=y_ub, y_eq=y_eq)
    sol._dual_value = (sum(a * b for a, b in zip(y_ub, lp.b_ub))
                       + sum(a * b for a, b in zip(y_eq, lp.b_eq)))
    return sol
