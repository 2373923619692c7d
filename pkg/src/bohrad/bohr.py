"""Weighted majorant sums for coefficient sequences.

The central object is M(r) = |a_m|^p phi_m(r) + sum_{n>m} |a_n| phi_n(r),
compared against the comparison weight phi_m(r).  Infinite sequences are
summed through their stored prefix; whatever remains is bounded by the
geometric tail certificate, which for the separable weight families reduces
to a weight tail sum evaluated at ratio * r.

Also here: the order-alpha averaging transform of a coefficient sequence
(b_n is the binomially weighted mean of a_0..a_n), its weighted sum, the
corresponding integral-operator sum with weights r^n/(n+beta), and the
witness construction certifying that some weight shapes force a vanishing
radius on product spaces.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import weights
from .coeffs import CoefficientSequence
from .errors import ConvergenceError, DomainError, WitnessNotFound
from .weights import WeightFamily, bernardi, cesaro

#: Tail mass below which a truncated sum is treated as exact.
TAIL_TARGET = 1e-13

_MAX_PREFIX = 1_000_000
_MAX_TRANSFORM = 30_000


@dataclass(frozen=True)
class BohrSumReport:
    """One evaluated majorant sum against its comparison bound.

    ``satisfied`` is the comparison value <= bound + tail_bound, where
    ``tail_bound`` certifies everything the truncated sum left out.
    """

    r: float
    value: float
    bound: float
    satisfied: bool
    truncation_terms: int
    tail_bound: float


def _check_r(r: float) -> None:
    if not 0.0 <= r <= weights.R_MAX:
        raise DomainError(f"r must lie in [0, {weights.R_MAX}], got {r!r}")


def _weighted_series(
    coeffs: CoefficientSequence,
    family: WeightFamily,
    r: float,
    tol: float,
    start: int,
) -> Tuple[float, float, int]:
    """Certified sum_{n >= start} |a_n| phi_n(r) -> (value, tail_bound, terms)."""
    if r == 0.0:
        value = coeffs.modulus_or_zero(0) * weights.coefficient(family, 0) if start == 0 else 0.0
        return value, 0.0, len(coeffs.moduli)
    target = min(tol, TAIL_TARGET)

    def prefix_value() -> float:
        return math.fsum(
            coeffs.moduli[n - coeffs.m] * weights.coefficient(family, n) * r ** n
            for n in range(max(start, coeffs.m), coeffs.tail_start)
        )

    if coeffs.tail is None:
        return prefix_value(), 0.0, len(coeffs.moduli)

    ratio, const = coeffs.tail.ratio, coeffs.tail.constant

    def cert() -> float:
        n0 = max(coeffs.tail_start, start)
        return const * weights.tail_sum(family, n0, ratio * r, 1e-15)

    bound = cert()
    while bound > target and coeffs.extendable:
        if len(coeffs.moduli) >= _MAX_PREFIX:
            raise ConvergenceError(
                f"coefficient tail at r={r!r} not certified within {_MAX_PREFIX} terms"
            )
        coeffs.ensure_terms(2 * len(coeffs.moduli))
        bound = cert()
    if bound > tol:
        raise ConvergenceError(
            f"stored coefficients leave a tail bound {bound!r} above tol={tol!r}; "
            "supply more moduli or a sharper certificate"
        )
    return prefix_value(), bound, len(coeffs.moduli)


def majorant_sum(
    coeffs: CoefficientSequence,
    family: WeightFamily,
    p: float,
    r: float,
    tol: float = 1e-12,
) -> BohrSumReport:
    """|a_m|^p phi_m(r) + sum_{n>m} |a_n| phi_n(r) against phi_m(r)."""
    if not p >= 1.0:
        raise DomainError(f"p must be >= 1, got {p!r}")
    if not tol > 0.0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    _check_r(r)
    m = coeffs.m
    bound = weights.comparison_weight(family, m) * r ** m
    tail_value, tail_bound, terms = _weighted_series(coeffs, family, r, tol, m + 1)
    value = coeffs.moduli[0] ** p * bound + tail_value
    return BohrSumReport(
        r=r,
        value=value,
        bound=bound,
        satisfied=value <= bound + tail_bound,
        truncation_terms=terms,
        tail_bound=tail_bound,
    )


def function_radius(
    coeffs: CoefficientSequence,
    family: WeightFamily,
    p: float,
    q: float,
    grid_points: int = 10_000,
) -> float:
    """Largest r up to the evaluation cap below which the per-function
    inequality |a_m|^p phi_m + (sum_{n>m} |a_n| phi_n)^q <= phi_m holds.

    The violation set is scanned on a uniform grid and its first entry is
    refined by bisection; if the set is not a single right interval the
    conservative (smallest) boundary is returned and a warning is issued.
    Returns the cap when the inequality never fails.
    """
    if not p >= 1.0 or not q >= 1.0:
        raise DomainError(f"p and q must be >= 1, got {(p, q)!r}")
    if grid_points < 2:
        raise DomainError(f"grid_points must be >= 2, got {grid_points}")
    cap = weights.R_MAX
    # One worst-case certification at the cap; afterwards the stored prefix
    # is within TAIL_TARGET of the full sum for every r <= cap.
    _weighted_series(coeffs, family, cap, TAIL_TARGET * 10, coeffs.m + 1)

    m = coeffs.m
    lead = coeffs.moduli[0]
    wm = weights.comparison_weight(family, m)
    n_arr = np.arange(m + 1, coeffs.tail_start)
    w_arr = np.array([weights.coefficient(family, int(n)) for n in n_arr])
    mod_arr = np.asarray(coeffs.moduli[1:], dtype=float)

    def h(r: float) -> float:
        inner = float(np.dot(mod_arr, w_arr * np.power(r, n_arr))) if n_arr.size else 0.0
        lead_weight = wm * r ** m
        return lead ** p * lead_weight + inner ** q - lead_weight

    grid = np.linspace(0.0, cap, grid_points)
    values = np.array([h(float(r)) for r in grid])
    violating = values > 0.0
    if not violating.any():
        return cap
    first = int(np.argmax(violating))
    transitions = int(np.count_nonzero(np.diff(violating.astype(int))))
    if transitions > 1:
        warnings.warn(
            "per-function inequality recovers after failing; reporting the "
            "first failure boundary",
            stacklevel=2,
        )
    if first == 0:
        return 0.0
    lo, hi = float(grid[first - 1]), float(grid[first])
    f_lo = values[first - 1]
    for _ in range(60):
        if hi - lo <= 1e-12:
            break
        mid = 0.5 * (lo + hi)
        f_mid = h(mid)
        if f_lo * f_mid <= 0.0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


# --- order-alpha averaging (binomial mean) transform ----------------------


def cesaro_binomial(alpha: float, k: int) -> float:
    """Binomial weight (alpha+1)(alpha+2)...(alpha+k) / k!."""
    if not alpha > -1.0:
        raise DomainError(f"alpha must be > -1, got {alpha!r}")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    c = 1.0
    for i in range(1, k + 1):
        c *= (alpha + i) / i
    return c


def _binomials(alpha: float, count: int) -> np.ndarray:
    if count <= 0:
        return np.empty(0)
    j = np.arange(1, count)
    return np.concatenate(([1.0], np.cumprod((alpha + j) / j)))


def cesaro_transform(
    coeffs: CoefficientSequence, alpha: float, n_out: int
) -> CoefficientSequence:
    """b_n = (1/C[alpha+1]_n) * sum_{k<=n} C[alpha]_{n-k} a_k, n < n_out.

    Inputs past the available prefix of a fixed sequence count as zero.
    """
    if not alpha > -1.0:
        raise DomainError(f"alpha must be > -1, got {alpha!r}")
    if n_out < 1:
        raise DomainError(f"n_out must be >= 1, got {n_out}")
    a = np.array([coeffs.modulus_or_zero(k) for k in range(n_out)])
    b = np.convolve(_binomials(alpha, n_out), a)[:n_out] / _binomials(alpha + 1.0, n_out)
    if coeffs.m < n_out:
        return CoefficientSequence(m=coeffs.m, moduli=list(b[coeffs.m:]))
    return CoefficientSequence(m=0, moduli=[0.0])


def cesaro_bohr_sum(
    coeffs: CoefficientSequence, alpha: float, r: float, tol: float = 1e-12
) -> BohrSumReport:
    """Weighted sum of the transformed moduli, sum_n b_n r^n, against the
    transform of the unit constant, (alpha+1) sum_n r^n / (n+alpha+1)."""
    if not alpha > -1.0:
        raise DomainError(f"alpha must be > -1, got {alpha!r}")
    if not tol > 0.0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    _check_r(r)
    bound = weights.tail_sum(cesaro(alpha), 0, r, min(tol, 1e-12))
    sup = coeffs.explicit_sup()
    if r == 0.0 or sup == 0.0:
        n_terms = 1
        outer = 0.0
    else:
        # b_n <= sup_k |a_k| because the binomial weights average to one,
        # so the outer tail past N is at most sup * r^(N+1) / (1-r).
        n_terms = int(math.ceil(math.log(tol * (1.0 - r) / (2.0 * sup)) / math.log(r))) + 1
        n_terms = max(n_terms, 1)
        if n_terms > _MAX_TRANSFORM:
            raise ConvergenceError(
                f"transform sum needs {n_terms} terms at r={r!r}; cap is {_MAX_TRANSFORM}"
            )
        outer = sup * r ** n_terms / (1.0 - r)
    inner_gap = 0.0
    if coeffs.tail is not None and not coeffs.extendable and coeffs.tail_start < n_terms:
        # unknown inputs below the outer cut: each missing a_k contributes at
        # most constant * ratio^k to every later mean
        inner_gap = (
            coeffs.tail.constant
            * coeffs.tail.ratio ** coeffs.tail_start
            / (1.0 - r)
        )
        if inner_gap > tol / 2.0:
            raise ConvergenceError(
                "coefficient prefix too short for the requested tolerance"
            )
    a = np.array([coeffs.modulus_or_zero(k) for k in range(n_terms)])
    b = np.convolve(_binomials(alpha, n_terms), a)[:n_terms] / _binomials(
        alpha + 1.0, n_terms
    )
    value = math.fsum(b * np.power(r, np.arange(n_terms)))
    tail_bound = outer + inner_gap
    return BohrSumReport(
        r=r,
        value=value,
        bound=bound,
        satisfied=value <= bound + tail_bound,
        truncation_terms=n_terms,
        tail_bound=tail_bound,
    )


def bernardi_bohr_sum(
    coeffs: CoefficientSequence, m: int, beta: float, r: float, tol: float = 1e-12
) -> BohrSumReport:
    """sum_{n>=m} |a_n| r^n / (n+beta) against r^m / (m+beta)."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if not m + beta > 0.0:
        raise DomainError(f"need m + beta > 0, got {m + beta!r}")
    if not tol > 0.0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    _check_r(r)
    family = bernardi(beta, m0=m)
    value, tail_bound, terms = _weighted_series(coeffs, family, r, tol, m)
    bound = r ** m / (m + beta)
    return BohrSumReport(
        r=r,
        value=value,
        bound=bound,
        satisfied=value <= bound + tail_bound,
        truncation_terms=terms,
        tail_bound=tail_bound,
    )


def zero_radius_witness(p: float, eps: float, alpha: float, beta_exp: float) -> float:
    """A delta in (0, 1) certifying the two-component vanishing-radius bound.

    For p > 1 the strict inequality is 1 - (1-d)^(1/p) < alpha eps^beta d^(1/p);
    at p = 1 the square-root variant applies.  The scan walks d = 10^-k and
    then tightens the exponent toward the largest satisfying d.
    """
    if not p >= 1.0:
        raise DomainError(f"p must be >= 1, got {p!r}")
    if not 0.0 < eps < 1.0:
        raise DomainError(f"eps must lie in (0, 1), got {eps!r}")
    if not alpha > 0.0 or not beta_exp > 0.0:
        raise DomainError(f"alpha and beta_exp must be > 0, got {(alpha, beta_exp)!r}")
    factor = alpha * eps ** beta_exp
    exponent = 0.5 if p == 1.0 else 1.0 / p

    def holds(delta: float) -> bool:
        if not 0.0 < delta < 1.0:
            return False
        return 1.0 - (1.0 - delta) ** exponent < factor * delta ** exponent

    k_hit = next((k for k in range(1, 13) if holds(10.0 ** -k)), None)
    if k_hit is None:
        raise WitnessNotFound(
            f"no delta in 10^-1..10^-12 satisfies the witness inequality for "
            f"p={p!r}, eps={eps!r}"
        )
    lo_t, hi_t = float(k_hit - 1), float(k_hit)
    for _ in range(50):
        mid = 0.5 * (lo_t + hi_t)
        if holds(10.0 ** -mid):
            hi_t = mid
        else:
            lo_t = mid
    return 10.0 ** -hi_t


__all__ = [
    "TAIL_TARGET",
    "BohrSumReport",
    "majorant_sum",
    "function_radius",
    "cesaro_binomial",
    "cesaro_transform",
    "cesaro_bohr_sum",
    "bernardi_bohr_sum",
    "zero_radius_witness",
]
