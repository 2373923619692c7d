"""The extremal family and empirical sharpness checks.

For a in (0, 1) the disk automorphism psi1(w) = (a - w)/(1 - a w) composed
with the affine map psi2(z) = (1-gamma) z + gamma gives a unimodular
function on the shifted disk whose coefficient moduli are

    |A_0| = |a - gamma| / (1 - a gamma)
    |A_k| = (1 - a^2) a^(k-1) (1-gamma)^k / (1 - a gamma)^(k+1),   k >= 1

i.e. a geometric sequence with ratio rho = a (1-gamma)/(1 - a gamma).
Multiplying by z**m shifts the whole sequence up by m.  As a -> 1 the
weighted majorant sum of this family crosses the comparison weight just
above every class radius, which is what :func:`sharpness_witness` probes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import weights
from .coeffs import CoefficientSequence, GeometricTail
from .errors import ConvergenceError, DomainError
from .weights import WeightFamily

#: Tail mass below which the truncated majorant sum is treated as exact.
TAIL_TARGET = 1e-13

DEFAULT_A_SCHEDULE: Tuple[float, ...] = tuple(1.0 - 10.0 ** (-k) for k in range(1, 9))

_BLOCK = 64
_MAX_TERMS = 200_000


@dataclass(frozen=True)
class ExtremalParams:
    """Parameters (a, gamma, vanishing order, truncation length)."""

    a: float
    gamma: float
    m: int = 0
    n_terms: int = 64

    def __post_init__(self) -> None:
        if not 0.0 < self.a < 1.0:
            raise DomainError(f"a must lie in (0, 1), got {self.a!r}")
        if not 0.0 <= self.gamma < 1.0:
            raise DomainError(f"gamma must lie in [0, 1), got {self.gamma!r}")
        if self.m < 0:
            raise DomainError(f"m must be >= 0, got {self.m}")
        if self.n_terms < 1:
            raise DomainError(f"n_terms must be >= 1, got {self.n_terms}")


def _geometry(a: float, gamma: float) -> Tuple[float, float, float]:
    """(leading modulus, geometric constant K, geometric ratio rho)."""
    denom = 1.0 - a * gamma
    lead = abs(a - gamma) / denom
    ratio = a * (1.0 - gamma) / denom
    const = (1.0 - a * a) / (a * denom)
    return lead, const, ratio


def extremal_coefficients(params: ExtremalParams) -> CoefficientSequence:
    """Coefficient moduli of the order-m extremal function.

    The returned sequence is formula-backed (extendable on demand) and
    carries an exact geometric tail certificate.
    """
    lead, const, ratio = _geometry(params.a, params.gamma)
    m = params.m

    def term(n: int) -> float:
        if n < m:
            return 0.0
        if n == m:
            return lead
        return const * ratio ** (n - m)

    moduli = [term(m + j) for j in range(params.n_terms + 1)]
    tail = GeometricTail(ratio=ratio, constant=const * ratio ** (-m))
    return CoefficientSequence(m=m, moduli=moduli, tail=tail, term_fn=term)


def extremal_eval(params: ExtremalParams, z: complex) -> complex:
    """Evaluate z**m * psi1(psi2(z)) at a point of the shifted disk.

    The modulus is strictly below 1 for m = 0; for m >= 1 that holds on
    |z| <= 1 (the shifted disk reaches |z| > 1 on its far side).
    """
    w = (1.0 - params.gamma) * z + params.gamma
    if abs(w) >= 1.0:
        raise DomainError(f"point {z!r} lies outside the shifted disk")
    value = (params.a - w) / (1.0 - params.a * w)
    if params.m:
        value *= z ** params.m
    return value


def coefficient_bound(a0_modulus: float, gamma: float) -> float:
    """(1 - |A_0|^2) / (1 + gamma), the scalar coefficient bound."""
    if not 0.0 <= a0_modulus < 1.0:
        raise DomainError(f"|A_0| must lie in [0, 1), got {a0_modulus!r}")
    if not 0.0 <= gamma < 1.0:
        raise DomainError(f"gamma must lie in [0, 1), got {gamma!r}")
    return (1.0 - a0_modulus * a0_modulus) / (1.0 + gamma)


def _majorant_value(
    family: WeightFamily, p: float, gamma: float, m: int, r: float, a: float
) -> Tuple[float, float]:
    """Certified weighted sum of the extremal coefficients at radius r.

    Returns (value, tail_bound) with tail_bound <= TAIL_TARGET.
    """
    lead, const, ratio = _geometry(a, gamma)
    base = lead ** p * weights.comparison_weight(family, m) * r ** m
    if r == 0.0:
        return base, 0.0
    x = ratio * r
    px = x ** m
    terms = []
    k = 0
    while True:
        for _ in range(_BLOCK):
            k += 1
            terms.append(
                const * ratio ** k * weights.coefficient(family, m + k) * r ** (m + k)
            )
        if px == 0.0:
            # the whole tail already sits below double-precision range
            return base + math.fsum(terms), 0.0
        cert = const * r ** m * weights.tail_sum(family, m + k + 1, x, 1e-15) / px
        if cert <= TAIL_TARGET:
            return base + math.fsum(terms), cert
        if k >= _MAX_TERMS:
            raise ConvergenceError(
                f"extremal tail at a={a!r}, r={r!r} not certified within {_MAX_TERMS} terms"
            )


def sharpness_witness(
    family: WeightFamily,
    p: float,
    gamma: float,
    m: int,
    r: float,
    a_schedule: Optional[Sequence[float]] = None,
) -> Optional[Tuple[float, float]]:
    """First a in the schedule whose majorant sum exceeds the comparison
    weight at radius r, together with the margin, or None.

    Above the class radius a witness appears for a close enough to 1;
    below it none exists.
    """
    if not 1.0 <= p <= 2.0:
        raise DomainError(f"p must lie in [1, 2], got {p!r}")
    if not 0.0 <= gamma < 1.0:
        raise DomainError(f"gamma must lie in [0, 1), got {gamma!r}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if not 0.0 <= r <= weights.R_MAX:
        raise DomainError(f"r must lie in [0, {weights.R_MAX}], got {r!r}")
    schedule = DEFAULT_A_SCHEDULE if a_schedule is None else tuple(a_schedule)
    for a in schedule:
        if not 0.0 < a < 1.0:
            raise DomainError(f"a-schedule entries must lie in (0, 1), got {a!r}")
    bound = weights.comparison_weight(family, m) * r ** m
    for a in schedule:
        value, _ = _majorant_value(family, p, gamma, m, r, a)
        if value > bound:
            return a, value - bound
    return None


__all__ = [
    "DEFAULT_A_SCHEDULE",
    "TAIL_TARGET",
    "ExtremalParams",
    "extremal_coefficients",
    "extremal_eval",
    "coefficient_bound",
    "sharpness_witness",
]
