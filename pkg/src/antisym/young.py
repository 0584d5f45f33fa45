"""Partitions, semistandard tableaux, Schur polynomials and Weyl dimensions.

Shapes are tuples of weakly decreasing non-negative integers (trailing zeros
are stripped on normalisation).  Tableaux use the standard semistandard
convention: rows weakly increase to the right, columns strictly increase
downwards, entries in 1..max_entry.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .linalg import Rational, RationalLike, _frac

Partition = tuple[int, ...]

# Full tableau enumeration is only used for polynomial evaluation; all shapes
# in this artifact have at most four boxes, so the cap is generous.
MAX_ENUMERATION_BOXES = 8


def normalize_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts must weakly decrease: {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def weyl_dimension(shape: Sequence[int], d: int) -> int:
    """Dimension of the unitary-group irrep with highest weight ``shape``.

    The product formula prod_{i<j} (l_i - l_j - i + j) / prod_{k<d} k! with the
    shape zero-padded to length d.  Shapes with more than d nonzero rows give 0.
    Pairs of zero-padded rows contribute the factorial tail of the denominator
    and are cancelled analytically, so large d stays cheap for short shapes.
    """
    if d < 1:
        raise ValueError("d must be positive")
    lam = normalize_partition(shape)
    r = len(lam)
    if r > d:
        return 0
    num = 1
    for i in range(r):
        for j in range(i + 1, d):
            lj = lam[j] if j < r else 0
            num *= lam[i] - lj - i + j
    den = 1
    for k in range(d - r, d):
        den *= factorial(k)
    q, rem = divmod(num, den)
    if rem != 0:
        raise ArithmeticError("Weyl product not divisible by superfactorial")
    return q


@lru_cache(maxsize=None)
def ssyt_count(shape: Partition, max_entry: int) -> int:
    """Number of semistandard tableaux of ``shape`` with entries in 1..max_entry.

    Recursive on the largest entry: the boxes holding the value ``max_entry``
    form a horizontal strip at the boundary of the diagram.
    """
    lam = normalize_partition(shape)
    if not lam:
        return 1
    if max_entry <= 0:
        return 0
    total = 0
    for mu in _horizontal_strip_predecessors(lam):
        total += ssyt_count(mu, max_entry - 1)
    return total


def _horizontal_strip_predecessors(lam: Partition) -> Iterator[Partition]:
    """All mu <= lam such that lam/mu is a horizontal strip (possibly empty)."""
    def rec(i: int, prefix: tuple[int, ...]) -> Iterator[Partition]:
        if i == len(lam):
            yield normalize_partition(prefix)
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        hi = lam[i] if i == 0 else min(lam[i], prefix[i - 1])
        # rows of mu interleave: lam[i+1] <= mu[i] <= lam[i]
        for m in range(lo, hi + 1):
            yield from rec(i + 1, prefix + (m,))
    yield from rec(0, ())


def semistandard_tableaux(shape: Sequence[int], max_entry: int
                          ) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Enumerate all semistandard tableaux of ``shape`` with entries 1..max_entry."""
    lam = normalize_partition(shape)
    if sum(lam) > MAX_ENUMERATION_BOXES:
        raise ValueError(f"enumeration capped at {MAX_ENUMERATION_BOXES} boxes")
    if not lam:
        yield ()
        return

    rows = len(lam)

    def fill(r: int, c: int, current: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == rows:
            yield tuple(tuple(row) for row in current)
            return
        nr, nc = (r, c + 1) if c + 1 < lam[r] else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, current[r][c - 1])          # weakly increasing rows
        if r > 0:
            lo = max(lo, current[r - 1][c] + 1)      # strictly increasing columns
        for v in range(lo, max_entry + 1):
            current[r].append(v)
            yield from fill(nr, nc, current)
            current[r].pop()

    yield from fill(0, 0, [[] for _ in range(rows)])


def schur_eval(shape: Sequence[int], values: Sequence[RationalLike]) -> Rational:
    """Schur polynomial s_shape evaluated at the given point.

    Computed as the tableau generating sum: for each semistandard tableau,
    multiply the variables indexed by its entries.
    """
    vals = [_frac(v) for v in values]
    total = Fraction(0)
    for tab in semistandard_tableaux(shape, len(vals)):
        term = Fraction(1)
        for row in tab:
            for e in row:
                term *= vals[e - 1]
        total += term
    return total


class PlethysmCheck(NamedTuple):
    lhs: Rational
    rhs: Rational
    equal: bool


def plethysm_check(kind: str, d: int, values: Sequence[RationalLike]) -> PlethysmCheck:
    """Character identity for the symmetric/alternating square of the 2-form rep.

    The left side evaluates the degree-2 Schur polynomial (complete or
    alternating) at the d(d-1)/2 pairwise products x_k x_l, k<l; the right side
    evaluates the matching sum of degree-4 Schur polynomials at x directly:

        sym2:  s_(2) at (x_k x_l)  ==  s_(2,2)(x) + s_(1,1,1,1)(x)
        alt2:  s_(1,1) at (x_k x_l)  ==  s_(2,1,1)(x)
    """
    if d < 3:
        raise ValueError("plethysm check requires d >= 3")
    if kind not in ("sym2", "alt2"):
        raise ValueError(f"kind must be 'sym2' or 'alt2', got {kind!r}")
    x = [_frac(v) for v in values]
    if len(x) != d:
        raise ValueError(f"need {d} values, got {len(x)}")
    z = [x[k] * x[l] for k, l in combinations(range(d), 2)]
    if kind == "sym2":
        lhs = schur_eval((2,), z)
        rhs = schur_eval((2, 2), x) + schur_eval((1, 1, 1, 1), x)
    else:
        lhs = schur_eval((1, 1), z)
        rhs = schur_eval((2, 1, 1), x)
    return PlethysmCheck(lhs, rhs, lhs == rhs)


class PlethysmDims(NamedTuple):
    sym2_total: int      # dim of the symmetric square of the 2-form rep
    dim_1111: int        # dim of the (1,1,1,1) component
    dim_22: int          # dim of the (2,2) component
    dim_211: int         # dim of the (2,1,1) component (= alternating square)


def plethysm_dimensions(d: int) -> PlethysmDims:
    """Closed-form dimensions of the two degree-4 plethysm components.

    Cross-checks every closed form against the Weyl dimension formula, the
    additivity sym2_total = dim_1111 + dim_22, and the binomial identities for
    squares of an m = d(d-1)/2 dimensional space.
    """
    if d < 3:
        raise ValueError("requires d >= 3")
    sym2_total = d * (d - 1) * (d * d - d + 2) // 8
    dim_1111 = d * (d - 1) * (d - 2) * (d - 3) // 24
    dim_22 = (d + 1) * d * d * (d - 1) // 12
    dim_211 = (d + 1) * d * (d - 1) * (d - 2) // 8

    if dim_1111 != weyl_dimension((1, 1, 1, 1), d):
        raise ArithmeticError("(1,1,1,1) closed form disagrees with Weyl formula")
    if dim_22 != weyl_dimension((2, 2), d):
        raise ArithmeticError("(2,2) closed form disagrees with Weyl formula")
    if dim_211 != weyl_dimension((2, 1, 1), d):
        raise ArithmeticError("(2,1,1) closed form disagrees with Weyl formula")
    if sym2_total != dim_1111 + dim_22:
        raise ArithmeticError("symmetric-square dimension is not additive")
    m = d * (d - 1) // 2
    if sym2_total != m * (m + 1) // 2:
        raise ArithmeticError("symmetric-square dimension != C(m+1,2)")
    if sym2_total + dim_211 != m * m:
        raise ArithmeticError("sym + alt squares do not fill the m^2 space")
    return PlethysmDims(sym2_total, dim_1111, dim_22, dim_211)
