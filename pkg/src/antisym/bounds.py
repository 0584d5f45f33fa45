"""Entanglement-bound calculators assembled from closed forms and the LPs.

Every bound carries its exact rational core wherever one exists; base-two
logarithms are rendered in double precision only at the reporting edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .programs import DINF, analytic_dual_point, solve_purity_bound
from .seesaw import PurityResult, purity_seesaw  # re-exported oracle

LOG_TOLERANCE = 1e-12


def log2_fraction(value: Fraction) -> float:
    """Base-two log of a positive rational, safe for huge numerators."""
    if value <= 0:
        raise ValueError("logarithm of a non-positive rational")
    return math.log2(value.numerator) - math.log2(value.denominator)


def binary_entropy(p: float) -> float:
    """Shannon entropy of (p, 1-p) in bits; continuous extension at 0 and 1."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("argument must lie in [0, 1]")
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


@dataclass(frozen=True)
class BoundReport:
    """A named bound: exact rational core plus its floating log2 rendering.

    ``log2_value`` equals ``core_coeff * log2(exact_core)`` whenever the core
    is present; ``consistent`` re-checks that identity.
    """
    name: str
    log2_value: float
    exact_core: Fraction | None = None
    core_coeff: Fraction | None = None
    params: dict = field(default_factory=dict)
    source: str = ""

    def consistent(self, tol: float = LOG_TOLERANCE) -> bool:
        if self.exact_core is None:
            return True
        expected = float(self.core_coeff) * log2_fraction(self.exact_core)
        return abs(self.log2_value - expected) <= tol


class ExtensionCmi(NamedTuple):
    ratio: Fraction
    bits: float


def extension_cmi(d: int, k: int) -> ExtensionCmi:
    """Conditional mutual information across one pair of a k-fold
    antisymmetric extension, as an exact ratio and in bits.

    Computed both as a ratio of binomial coefficients C(d,k-1)^2 /
    (C(d,k-2) C(d,k)) and via the telescoped closed form
    (k/(k-1)) ((d-k+2)/(d-k+1)); the two must agree exactly.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    if not 2 <= k <= d:
        raise ValueError(f"k must lie in 2..{d}")
    binom_form = Fraction(math.comb(d, k - 1) ** 2,
                          math.comb(d, k - 2) * math.comb(d, k))
    closed_form = Fraction(k, k - 1) * Fraction(d - k + 2, d - k + 1)
    if binom_form != closed_form:
        raise ArithmeticError("extension CMI closed form mismatch")
    return ExtensionCmi(binom_form, log2_fraction(binom_form))


def squashed_upper_bound(d: int) -> BoundReport:
    """Upper bound on squashed entanglement (hence on distillable key).

    Half the minimum extension CMI over k; the exact minimiser is k = d/2 + 1
    for even d with value log2((d+2)/d), and k = (d+1)/2 for odd d with value
    (1/2) log2((d+3)/(d-1)).  The explicit scan and the closed form are
    compared exactly.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    best_k = None
    best_ratio = None
    for k in range(2, d + 1):
        ratio = extension_cmi(d, k).ratio
        if best_ratio is None or ratio < best_ratio:
            best_ratio = ratio
            best_k = k
    if d % 2 == 0:
        expected_k = d // 2 + 1
        core = Fraction(d + 2, d)
        coeff = Fraction(1)
        if best_ratio != core * core:
            raise ArithmeticError("even-d closed form does not match the scan")
    else:
        expected_k = (d + 1) // 2
        core = Fraction(d + 3, d - 1)
        coeff = Fraction(1, 2)
        if best_ratio != core:
            raise ArithmeticError("odd-d closed form does not match the scan")
    if best_k != expected_k:
        raise ArithmeticError(f"minimiser k={best_k}, expected {expected_k}")
    return BoundReport(
        name="key-rate upper bound",
        log2_value=float(coeff) * log2_fraction(core),
        exact_core=core,
        core_coeff=coeff,
        params={"d": d, "argmin_k": best_k, "min_ratio": best_ratio},
        source="squashed entanglement of the antisymmetric extension",
    )


def cost_lower_bound(n: int, d=DINF, mode: str = "lp") -> BoundReport:
    """Lower bound on the entanglement cost: -(1/n) log2 of the purity bound.

    ``analytic`` uses the geometric dual certificate (3/4)^n, giving the
    n-free constant log2(4/3); ``lp`` solves the exact programme at the given
    dimension (the truncated limit programme when d is infinite).
    """
    if mode == "analytic":
        point = analytic_dual_point(n)
        if not point.feasible or point.z != Fraction(3, 4) ** n:
            raise ArithmeticError("geometric dual point failed")
        return BoundReport(
            name="entanglement-cost lower bound (analytic)",
            log2_value=log2_fraction(Fraction(4, 3)),
            exact_core=Fraction(4, 3),
            core_coeff=Fraction(1),
            params={"n": n, "d": d, "certificate": point.z},
            source="dual certificate of the purity programme",
        )
    if mode != "lp":
        raise ValueError("mode must be 'lp' or 'analytic'")
    value, _, _ = solve_purity_bound(n, d)
    coeff = Fraction(-1, n)
    return BoundReport(
        name="entanglement-cost lower bound (LP)",
        log2_value=float(coeff) * log2_fraction(value),
        exact_core=value,
        core_coeff=coeff,
        params={"n": n, "d": d},
        source="exact purity programme optimum",
    )


def relent_lower_bound(n: int, d=DINF, mode: str = "lp") -> BoundReport:
    """Lower bound on the regularised relative entropy of entanglement with
    respect to separable states: half the cost bound, via the sup-norm <=
    square root of the purity."""
    inner = cost_lower_bound(n, d, mode)
    coeff = inner.core_coeff / 2
    return BoundReport(
        name=f"relative-entropy lower bound ({mode})",
        log2_value=inner.log2_value / 2.0,
        exact_core=inner.exact_core,
        core_coeff=coeff,
        params=dict(inner.params),
        source="square root of the purity bound",
    )


def relent_ppt_value(d: int) -> BoundReport:
    """Reference value of the regularised relative entropy with respect to
    PPT states, log2((d+2)/d), reported for contrast."""
    if d < 3:
        raise ValueError("d must be at least 3")
    core = Fraction(d + 2, d)
    return BoundReport(
        name="relative entropy w.r.t. PPT states (reference)",
        log2_value=log2_fraction(core),
        exact_core=core,
        core_coeff=Fraction(1),
        params={"d": d},
        source="known closed form for the antisymmetric state",
    )


def continuity_bound(eps: float, d: int) -> float:
    """Asymptotic-continuity modulus 2 (eps + h(eps)) log2(d)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if not 0.0 <= eps <= 1.0:
        raise ValueError("eps must lie in [0, 1]")
    return 2.0 * (eps + binary_entropy(eps)) * math.log2(d)


__all__ = [
    "BoundReport", "ExtensionCmi", "PurityResult",
    "binary_entropy", "continuity_bound", "cost_lower_bound",
    "extension_cmi", "log2_fraction", "purity_seesaw",
    "relent_lower_bound", "relent_ppt_value", "squashed_upper_bound",
]
