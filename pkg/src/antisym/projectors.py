"""Exact operators on (C^d)^{x4}: permutation actions, Young projectors,
the three pair-subspace states, partial-transpose overlap tables and the
PPT constraint matrices.

Tensor factors are ordered A, B, A', B' (indices 0..3).  The primed pair is
factors 2 and 3; the partial transpose across the AB:A'B' cut transposes
those two factors.

Two computation routes exist side by side and are cross-checked in tests:

* symbolic traces via the cycle count of a permutation (the trace of a
  permutation operator on (C^d)^{x4} is d to the number of cycles), and
* explicit exact matrices, restricted to the pair subspace
  wedge2 x wedge2, where all operators of interest are supported.  The
  restriction is an algebra isomorphism onto that subspace, so products,
  idempotence and traces proven there hold for the full-space operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import NamedTuple

from .linalg import RMatrix, ShapeError, SparseRMatrix
from .young import Partition, weyl_dimension

YOUNG_SHAPES: tuple[Partition, ...] = ((1, 1, 1, 1), (2, 2), (2, 1, 1))

OVERLAP_ROWS = ("bell", "adjoint", "tail")

DINF = math.inf


class Perm4:
    """A permutation of the four tensor slots {1,2,3,4}."""

    __slots__ = ("images",)

    def __init__(self, images: tuple[int, int, int, int]):
        if sorted(images) != [1, 2, 3, 4]:
            raise ValueError(f"not a bijection on 1..4: {images}")
        self.images = tuple(images)

    @classmethod
    def identity(cls) -> "Perm4":
        return cls((1, 2, 3, 4))

    @classmethod
    def from_cycles(cls, *cycles: tuple[int, ...]) -> "Perm4":
        img = list(range(1, 5))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                img[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(img))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Perm4") -> "Perm4":
        """Composition: (self * other)(k) = self(other(k))."""
        return Perm4(tuple(self.images[other.images[k] - 1] for k in range(4)))

    def inverse(self) -> "Perm4":
        inv = [0] * 4
        for k in range(4):
            inv[self.images[k] - 1] = k + 1
        return Perm4(tuple(inv))

    def sign(self) -> int:
        s = 1
        im = self.images
        for i in range(4):
            for j in range(i + 1, 4):
                if im[i] > im[j]:
                    s = -s
        return s

    def cycle_count(self) -> int:
        seen = [False] * 4
        count = 0
        for k in range(4):
            if not seen[k]:
                count += 1
                j = k
                while not seen[j]:
                    seen[j] = True
                    j = self.images[j] - 1
        return count

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm4) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Perm4{self.images}"


S4: tuple[Perm4, ...] = tuple(Perm4(p) for p in permutations((1, 2, 3, 4)))


class GroupAlgebraElement:
    """Finitely supported rational combination of S4 permutations."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Perm4, Fraction] | None = None):
        self.coeffs = {}
        if coeffs:
            for p, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    self.coeffs[p] = c

    @classmethod
    def unit(cls) -> "GroupAlgebraElement":
        return cls({Perm4.identity(): Fraction(1)})

    @classmethod
    def of(cls, perm: Perm4, coeff=1) -> "GroupAlgebraElement":
        return cls({perm: Fraction(coeff)})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            out[p] = out.get(p, Fraction(0)) + c
        return GroupAlgebraElement(out)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, r) -> "GroupAlgebraElement":
        r = Fraction(r)
        return GroupAlgebraElement({p: r * c for p, c in self.coeffs.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        """Convolution product; matches composition of the operators."""
        out: dict[Perm4, Fraction] = {}
        for p, a in self.coeffs.items():
            for q, b in other.coeffs.items():
                pq = p * q
                out[pq] = out.get(pq, Fraction(0)) + a * b
        return GroupAlgebraElement(out)

    def adjoint(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement({p.inverse(): c for p, c in self.coeffs.items()})

    def trace_in_dimension(self, d: int) -> Fraction:
        """Trace of the represented operator on (C^d)^{x4}."""
        return sum((c * d ** p.cycle_count() for p, c in self.coeffs.items()),
                   Fraction(0))

    def trace_with(self, perm: Perm4, d: int) -> Fraction:
        """tr(U_self U_perm), evaluated by cycle counting."""
        return sum((c * d ** (p * perm).cycle_count()
                    for p, c in self.coeffs.items()), Fraction(0))

    def to_operator(self, d: int) -> SparseRMatrix:
        out = SparseRMatrix(d ** 4, None, (d, d, d, d))
        for p, c in self.coeffs.items():
            for (r, s), v in _perm_entries(p.images, d).items():
                out.add_entry(r, s, c * v)
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupAlgebraElement)
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({len(self.coeffs)} terms)"


@lru_cache(maxsize=None)
def _perm_entries(images: tuple[int, int, int, int], d: int
                  ) -> dict[tuple[int, int], Fraction]:
    """{(row, col): 1} for the operator sending slot k's content to slot images[k]."""
    one = Fraction(1)
    entries = {}
    for src in product(range(d), repeat=4):
        dst = [0] * 4
        for k in range(4):
            dst[images[k] - 1] = src[k]
        r = ((dst[0] * d + dst[1]) * d + dst[2]) * d + dst[3]
        c = ((src[0] * d + src[1]) * d + src[2]) * d + src[3]
        entries[(r, c)] = one
    return entries


def perm_operator(perm: Perm4, d: int) -> SparseRMatrix:
    """Sparse operator permuting the tensor factors of (C^d)^{x4} by ``perm``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return SparseRMatrix(d ** 4, dict(_perm_entries(perm.images, d)),
                         (d, d, d, d))


# -- Young projectors --------------------------------------------------------

def _e() -> GroupAlgebraElement:
    return GroupAlgebraElement.unit()


def _t(a: int, b: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.of(Perm4.from_cycles((a, b)))


@lru_cache(maxsize=None)
def young_projector_element(shape: Partition) -> GroupAlgebraElement:
    """Group-algebra projector onto the copy of the irrep inside wedge2 x wedge2.

    The three components: the four-fold antisymmetrizer for (1,1,1,1); a
    six-factor sandwich for (2,2); and the complement of both inside the
    projector onto wedge2 x wedge2 for (2,1,1).
    """
    if shape == (1, 1, 1, 1):
        out = GroupAlgebraElement(
            {p: Fraction(p.sign(), 24) for p in S4})
        return out
    if shape == (2, 2):
        e = _e()
        prod_elem = ((e - _t(1, 2)) * (e - _t(3, 4)) * (e + _t(1, 3))
                     * (e + _t(2, 4)) * (e - _t(1, 2)) * (e - _t(3, 4)))
        return prod_elem.scale(Fraction(1, 48))
    if shape == (2, 1, 1):
        return (pair_projector_element()
                - young_projector_element((1, 1, 1, 1))
                - young_projector_element((2, 2)))
    raise ValueError(f"unsupported shape {shape}")


@lru_cache(maxsize=None)
def pair_projector_element() -> GroupAlgebraElement:
    """Projector onto wedge2(AB) x wedge2(A'B') as a group-algebra element."""
    e = _e()
    return ((e - _t(1, 2)) * (e - _t(3, 4))).scale(Fraction(1, 4))


def young_projector(shape: Partition, d: int) -> RMatrix:
    """Dense exact matrix of the Young projector on (C^d)^{x4}."""
    if d < 3:
        raise ValueError("d must be at least 3")
    if shape not in YOUNG_SHAPES:
        raise ValueError(f"shape must be one of {YOUNG_SHAPES}")
    return young_projector_element(shape).to_operator(d).to_dense()


def young_state(shape: Partition, d: int) -> RMatrix:
    """Normalised Young projector (trace one)."""
    if d < 3:
        raise ValueError("d must be at least 3")
    dim = weyl_dimension(shape, d)
    if dim == 0:
        raise ValueError(f"state for {shape} is degenerate at d={d} "
                         "(zero-dimensional component)")
    return young_projector(shape, d).scale(Fraction(1, dim))


def young_state_element(shape: Partition, d: int) -> GroupAlgebraElement:
    dim = weyl_dimension(shape, d)
    if dim == 0:
        raise ValueError(f"state for {shape} is degenerate at d={d}")
    return young_projector_element(shape).scale(Fraction(1, dim))


def present_shapes(d: int) -> tuple[Partition, ...]:
    """The Young shapes whose component is nonzero at this dimension."""
    return tuple(s for s in YOUNG_SHAPES if weyl_dimension(s, d) > 0)


# -- the pair-subspace restriction -------------------------------------------

class PairBasis:
    """Orthogonal basis of wedge2(C^d) x wedge2(C^d) inside (C^d)^{x4}.

    Basis vectors are (|ij> - |ji>) x (|kl> - |lk>) for i<j, k<l (squared norm
    4); the restriction map X -> (1/4) B^T X B is an algebra isomorphism on
    operators supported on the subspace, preserves traces, and intertwines the
    partial transpose of factors {2,3} with the partial transpose of the
    second pair factor.
    """

    def __init__(self, d: int):
        if d < 2:
            raise ValueError("d must be at least 2")
        self.d = d
        self.pairs = list(combinations(range(d), 2))
        self.m = len(self.pairs)
        self._pair_index = {p: i for i, p in enumerate(self.pairs)}

    def _project(self, a: int, b: int) -> tuple[int, int] | None:
        """(pair index, sign) of |ab> inside the antisymmetric pair basis."""
        if a == b:
            return None
        if a < b:
            return self._pair_index[(a, b)], 1
        return self._pair_index[(b, a)], -1

    def _decode(self, big: int) -> tuple[int, int, int, int]:
        d = self.d
        big, bp = divmod(big, d)
        big, ap = divmod(big, d)
        a, b = divmod(big, d)
        return a, b, ap, bp

    def restrict(self, op: SparseRMatrix) -> RMatrix:
        """Exact restriction of a 4-factor operator to the pair subspace."""
        if op.n != self.d ** 4:
            raise ShapeError("operator does not live on (C^d)^{x4}")
        m = self.m
        out = RMatrix.zeros(m * m, m * m, (m, m))
        quarter = Fraction(1, 4)
        for (r, c), v in op.data.items():
            a, b, ap, bp = self._decode(r)
            pr = self._project(a, b)
            if pr is None:
                continue
            qr = self._project(ap, bp)
            if qr is None:
                continue
            a2, b2, ap2, bp2 = self._decode(c)
            pc = self._project(a2, b2)
            if pc is None:
                continue
            qc = self._project(ap2, bp2)
            if qc is None:
                continue
            u = pr[0] * m + qr[0]
            w = pc[0] * m + qc[0]
            out.entries[u * m * m + w] += quarter * pr[1] * qr[1] * pc[1] * qc[1] * v
        return out

    def unrestrict(self, small: RMatrix) -> RMatrix:
        """Inverse of ``restrict``: embed back into the full (C^d)^{x4} space."""
        m = self.m
        if small.rows != m * m or small.cols != m * m:
            raise ShapeError("matrix does not live on the pair subspace")
        d = self.d
        n = d ** 4
        out = RMatrix.zeros(n, n, (d, d, d, d))
        quarter = Fraction(1, 4)

        def components(pq: int):
            p, q = divmod(pq, m)
            i, j = self.pairs[p]
            k, l = self.pairs[q]
            for (x, y, sx) in ((i, j, 1), (j, i, -1)):
                for (z, w, sz) in ((k, l, 1), (l, k, -1)):
                    yield ((x * d + y) * d + z) * d + w, sx * sz

        for u in range(m * m):
            row_parts = list(components(u))
            base = u * m * m
            for v in range(m * m):
                val = small.entries[base + v]
                if val == 0:
                    continue
                val = quarter * val
                for bigc, sc in components(v):
                    for bigr, sr in row_parts:
                        out.entries[bigr * n + bigc] += val * sr * sc
        return out

    # compressed building blocks ------------------------------------------

    def identity(self) -> RMatrix:
        m = self.m
        return RMatrix.identity(m * m, (m, m))

    def restricted_perm(self, perm: Perm4) -> RMatrix:
        return self.restrict(perm_operator(perm, self.d))

    def restricted_element(self, elem: GroupAlgebraElement) -> RMatrix:
        return self.restrict(elem.to_operator(self.d))

    def restricted_phi_phi(self) -> RMatrix:
        """Restriction of Phi_{AA'} x Phi_{BB'} (maximally entangled pairs)."""
        d = self.d
        sp = SparseRMatrix(d ** 4, None, (d, d, d, d))
        w = Fraction(1, d * d)
        for i in range(d):
            for j in range(d):
                r = ((i * d + j) * d + i) * d + j
                for k in range(d):
                    for l in range(d):
                        c = ((k * d + l) * d + k) * d + l
                        sp.add_entry(r, c, w)
        return self.restrict(sp)

    def restricted_one_phi(self) -> RMatrix:
        """Restriction of 1_{AA'} x Phi_{BB'}."""
        d = self.d
        sp = SparseRMatrix(d ** 4, None, (d, d, d, d))
        w = Fraction(1, d)
        for a in range(d):
            for ap in range(d):
                for j in range(d):
                    r = ((a * d + j) * d + ap) * d + j
                    for l in range(d):
                        c = ((a * d + l) * d + ap) * d + l
                        sp.add_entry(r, c, w)
        return self.restrict(sp)


# -- the three invariant projectors across the AB:A'B' cut --------------------

class InvariantProjectors(NamedTuple):
    bell: RMatrix      # rank one: maximally entangled state of the pair spaces
    adjoint: RMatrix   # dimension d^2 - 1
    tail: RMatrix      # dimension (d(d-1)/2)^2 - d^2


def invariant_projectors(d: int, restricted: bool = False) -> InvariantProjectors:
    """The three orthogonal projectors spanning the commutant on the pair space.

    With P the pair projector, Phi maximally entangled:

        bell    = (2d/(d-1)) P (Phi x Phi) P
        adjoint = (4d/(d-2)) P ((1 - Phi) x Phi) P
        tail    = P - bell - adjoint

    Traces are 1, d^2 - 1 and (d(d-1)/2)^2 - d^2.  ``restricted`` returns the
    pair-subspace matrices (m^2 x m^2 with m = d(d-1)/2) instead of the full
    d^4-dimensional ones.
    """
    if d < 3:
        raise ValueError("d must be at least 3 (the tail component is "
                         "degenerate below that)")
    basis = PairBasis(d)
    phi_phi = basis.restricted_phi_phi()
    one_phi = basis.restricted_one_phi()
    bell = phi_phi.scale(Fraction(2 * d, d - 1))
    adjoint = (one_phi - phi_phi).scale(Fraction(4 * d, d - 2))
    tail = basis.identity() - bell - adjoint
    if restricted:
        return InvariantProjectors(bell, adjoint, tail)
    return InvariantProjectors(basis.unrestrict(bell),
                               basis.unrestrict(adjoint),
                               basis.unrestrict(tail))


# -- flip expectations and partial-transpose overlaps -------------------------

_FLIP_AA = Perm4.from_cycles((1, 3))          # F_{A:A'} x 1
_FLIP_BB = Perm4.from_cycles((2, 4))          # 1 x F_{B:B'}
_FLIP_BOTH = Perm4.from_cycles((1, 3), (2, 4))


def flip_overlaps(d: int, method: str = "symbolic") -> dict[Partition, Fraction]:
    """tr(rho~_y F_{A:A'}) for each present shape, rho~ the reduction to AA'.

    Equals (-1, 1/2, 0) for the three shapes, independently of d.  The
    symbolic method contracts permutations by cycle counting; the matrix
    method materialises the state, takes the exact partial trace and pairs
    with the flip operator.
    """
    out = {}
    for shape in present_shapes(d):
        if method == "symbolic":
            elem = young_state_element(shape, d)
            out[shape] = elem.trace_with(_FLIP_AA, d)
        elif method == "matrix":
            rho = young_state(shape, d)
            reduced = rho.partial_trace((0, 2))
            out[shape] = reduced.trace_product(_flip_matrix(d))
        else:
            raise ValueError(f"unknown method {method!r}")
    return out


def pair_flip_signs(d: int, method: str = "symbolic") -> dict[Partition, Fraction]:
    """tr(rho_y (F_{A:A'} x F_{B:B'})); +1 on the symmetric-square shapes,
    -1 on the alternating-square shape."""
    out = {}
    for shape in present_shapes(d):
        if method == "symbolic":
            out[shape] = young_state_element(shape, d).trace_with(_FLIP_BOTH, d)
        elif method == "matrix":
            rho = young_state(shape, d)
            flip = perm_operator(_FLIP_BOTH, d).to_dense()
            out[shape] = rho.trace_product(flip)
        else:
            raise ValueError(f"unknown method {method!r}")
    return out


def _flip_matrix(d: int) -> RMatrix:
    out = RMatrix.zeros(d * d, d * d, (d, d))
    for i in range(d):
        for j in range(d):
            out.entries[(j * d + i) * d * d + (i * d + j)] = Fraction(1)
    return out


def reduced_pair_state(shape: Partition, d: int) -> RMatrix:
    """Exact reduction tr_{BB'} rho_y, a Werner state on A x A'."""
    return young_state(shape, d).partial_trace((0, 2))


def werner_mixture(p: Fraction, d: int) -> RMatrix:
    """p * (antisymmetric state) + (1-p) * (symmetric state) on C^d x C^d."""
    p = Fraction(p)
    flip = _flip_matrix(d)
    ident = RMatrix.identity(d * d, (d, d))
    anti = (ident - flip).scale(Fraction(1, d * (d - 1)))
    sym = (ident + flip).scale(Fraction(1, d * (d + 1)))
    return anti.scale(p) + sym.scale(1 - p)


@dataclass(frozen=True)
class OverlapTable:
    """Expectations of the PSD operator triple (bell, adjoint/2, remainder)
    against the partially transposed states rho_y^Gamma.

    The triple resolves the pair projector, so each column sums to exactly 1;
    its rows are the functionals whose tensor powers express the PPT
    constraint of the symmetrised states as a linear programme.  (The halving
    of the adjoint projector is a choice of row scale only; any positive
    rescaling of a row yields the same constraints.)
    """
    d: int
    columns: tuple[Partition, ...]
    values: tuple[tuple[Fraction, ...], ...]  # rows: bell, adjoint, tail

    def row(self, name: str) -> tuple[Fraction, ...]:
        return self.values[OVERLAP_ROWS.index(name)]

    def entry(self, name: str, shape: Partition) -> Fraction:
        return self.row(name)[self.columns.index(shape)]

    def column_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(row[j] for row in self.values)
                     for j in range(len(self.columns)))


def overlap_closed_forms(d: int) -> OverlapTable:
    """The closed-form overlap table for dimension d >= 3."""
    if d < 3:
        raise ValueError("d must be at least 3")
    cols = present_shapes(d)
    two = Fraction(2, d * (d - 1))
    bell = {(1, 1, 1, 1): two, (2, 2): two, (2, 1, 1): -two}
    adjoint = {(1, 1, 1, 1): Fraction(-2 * (d + 1), d * (d - 2)),
               (2, 2): Fraction(1, d),
               (2, 1, 1): Fraction(2, d * (d - 2))}
    rows = (tuple(bell[s] for s in cols),
            tuple(adjoint[s] for s in cols),
            tuple(1 - bell[s] - adjoint[s] for s in cols))
    return OverlapTable(d, cols, rows)


def ppt_overlap_table(d: int, method: str = "matrix") -> OverlapTable:
    """Overlap table computed from first principles (not the closed forms).

    matrix: explicit exact matrices on the pair subspace; the partial
    transpose acts on the second pair factor.  symbolic: cycle-count traces
    using Phi^Gamma = F/d to reduce every entry to permutation traces.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    cols = present_shapes(d)
    if method == "matrix":
        basis = PairBasis(d)
        phi_phi = basis.restricted_phi_phi()
        one_phi = basis.restricted_one_phi()
        bell_op = phi_phi.scale(Fraction(2 * d, d - 1))
        half_adjoint_op = (one_phi - phi_phi).scale(Fraction(2 * d, d - 2))
        tail_op = basis.identity() - bell_op - half_adjoint_op
        rows = [[], [], []]
        for shape in cols:
            rho = basis.restricted_element(young_state_element(shape, d))
            rho_pt = rho.partial_transpose((1,))
            rows[0].append(rho_pt.trace_product(bell_op))
            rows[1].append(rho_pt.trace_product(half_adjoint_op))
            rows[2].append(rho_pt.trace_product(tail_op))
    elif method == "symbolic":
        # tr(rho^G (Phi x Phi)) = tr(rho F_bothpairs)/d^2 and
        # tr(rho^G (1 x Phi)) = tr(rho (1 x F))/d, since transposing a
        # factor of Phi yields F/d and the transpose cancels against rho^G.
        rows = [[], [], []]
        for shape in cols:
            elem = young_state_element(shape, d)
            f_both = elem.trace_with(_FLIP_BOTH, d)
            f_single = elem.trace_with(_FLIP_BB, d)
            bell = Fraction(2 * d, d - 1) * f_both / (d * d)
            adjoint = Fraction(2 * d, d - 2) * (f_single / d - f_both / (d * d))
            rows[0].append(bell)
            rows[1].append(adjoint)
            rows[2].append(1 - bell - adjoint)
    else:
        raise ValueError(f"unknown method {method!r}")
    return OverlapTable(d, cols, tuple(tuple(r) for r in rows))


# -- PPT constraint matrices ---------------------------------------------------

class ConstraintMatrices(NamedTuple):
    raw: RMatrix | None     # overlap rows as-is (None in the limit)
    rescaled: RMatrix       # rows scaled by (d(d-1)/2, d, 1); finite limit

CORNER_VARIANTS = ("derived", "alt")


def limit_constraint_matrix() -> RMatrix:
    """The d -> infinity limit of the rescaled constraint matrix."""
    return RMatrix.from_rows([[1, 1, -1], [-2, 1, 0], [1, 1, 1]])


def ppt_constraint_matrices(d, corner: str = "derived") -> ConstraintMatrices:
    """Constraint matrices of the symmetry-reduced PPT programme.

    Rows are indexed (bell, adjoint, tail), columns by the Young shapes
    (1,1,1,1), (2,2), (2,1,1).  The raw matrix holds the overlap table; the
    rescaled one multiplies the bell row by d(d-1)/2 and the adjoint row by d,
    which keeps all entries finite and nonzero as d grows.  ``corner="alt"``
    substitutes an alternative value 1 - (2d-3)/(d(d-1)(d-2)) for the
    (tail, (2,1,1)) entry of the rescaled matrix; the overlap-derived value is
    1 - 2/(d(d-1)(d-2)).  Both agree in the limit; the flag exists for
    sensitivity checks.
    """
    if corner not in CORNER_VARIANTS:
        raise ValueError(f"corner must be one of {CORNER_VARIANTS}")
    if d == DINF:
        return ConstraintMatrices(None, limit_constraint_matrix())
    if not isinstance(d, int) or d < 4:
        raise ValueError("d must be an integer >= 4 (all three shapes present) "
                         "or infinity")
    table = overlap_closed_forms(d)
    raw = RMatrix.from_rows(table.values)
    scales = (Fraction(d * (d - 1), 2), Fraction(d), Fraction(1))
    rescaled_rows = [[s * v for v in row] for s, row in zip(scales, table.values)]
    if corner == "alt":
        rescaled_rows[2][2] = 1 - Fraction(2 * d - 3, d * (d - 1) * (d - 2))
    rescaled = RMatrix.from_rows(rescaled_rows)
    return ConstraintMatrices(raw, rescaled)


def constraint_columns(d, corner: str = "derived"
                       ) -> tuple[tuple[Partition, ...], RMatrix]:
    """Rescaled constraint matrix restricted to the shapes present at d.

    Handles d = 3, where the (1,1,1,1) component is zero-dimensional and its
    column is dropped, and d = infinity (where the corner variants coincide).
    """
    if corner not in CORNER_VARIANTS:
        raise ValueError(f"corner must be one of {CORNER_VARIANTS}")
    if d == DINF:
        return YOUNG_SHAPES, limit_constraint_matrix()
    if not isinstance(d, int) or d < 3:
        raise ValueError("d must be an integer >= 3 or infinity")
    cols = present_shapes(d)
    table = overlap_closed_forms(d)
    scales = (Fraction(d * (d - 1), 2), Fraction(d), Fraction(1))
    rows = [[s * v for v in row] for s, row in zip(scales, table.values)]
    if corner == "alt" and len(cols) == 3:
        rows[2][2] = 1 - Fraction(2 * d - 3, d * (d - 1) * (d - 2))
    return cols, RMatrix.from_rows(rows)
