"""Weight sequences phi = {phi_n(r)} on [0, 1) and their certified sums.

Every built-in family has the separable form phi_n(r) = w_n * r**n:

    power:     w_n = 1
    n1:        w_n = n + 1
    n:         w_n = n
    n2:        w_n = n**2
    cesaro:    w_n = (alpha + 1) / (n + alpha + 1),  alpha > -1
    bernardi:  w_n = 1 / (n + beta) for n >= m0, else 0,  m0 + beta > 0

All weights are non-negative on [0, 1) and the series sum_n phi_n(r)
converges for every r < 1.  Tail sums use closed forms where one exists
(geometric-series derivatives for the polynomial families, a logarithm for
cesaro at alpha = 0) and otherwise a truncated summation whose remainder is
certified against the closed form of sum n^2 r^n.

In the radius and majorant comparisons the families ``n`` and ``n2`` pair
their n >= 1 weights with a unit comparison weight at n = 0 (their bare
w_0 vanishes, which would make every comparison degenerate); see
:func:`comparison_weight`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from . import kernels
from .errors import ConvergenceError, DomainError

#: Largest admissible evaluation point; beyond this the r -> 1 singularity
#: makes every tail sum meaningless in double precision.
R_MAX = 1.0 - 1e-9

DEFAULT_TOL = 1e-12
MAX_TERMS = 10_000_000


class WeightKind(enum.Enum):
    POWER = "power"
    POWER_TIMES_N_PLUS_1 = "n1"
    POWER_TIMES_N = "n"
    POWER_TIMES_N_SQUARED = "n2"
    CESARO = "cesaro"
    BERNARDI = "bernardi"


_LABELS = {
    WeightKind.POWER: "r^n",
    WeightKind.POWER_TIMES_N_PLUS_1: "(n+1) r^n",
    WeightKind.POWER_TIMES_N: "n r^n",
    WeightKind.POWER_TIMES_N_SQUARED: "n^2 r^n",
    WeightKind.CESARO: "(a+1) r^n / (n+a+1)",
    WeightKind.BERNARDI: "r^n / (n+b)",
}


@dataclass(frozen=True)
class WeightFamily:
    """One admissible weight sequence; parameters depend on the kind."""

    kind: WeightKind
    alpha: float = 0.0
    beta: float = 0.0
    m0: int = 0
    description: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.kind is WeightKind.CESARO and not self.alpha > -1.0:
            raise DomainError(f"cesaro weights need alpha > -1, got {self.alpha}")
        if self.kind is WeightKind.BERNARDI:
            if self.m0 < 0:
                raise DomainError(f"bernardi weights need m0 >= 0, got {self.m0}")
            if not self.m0 + self.beta > 0.0:
                raise DomainError(
                    f"bernardi weights need m0 + beta > 0, got {self.m0 + self.beta}"
                )
        if not self.description:
            object.__setattr__(self, "description", _LABELS[self.kind])


def power() -> WeightFamily:
    return WeightFamily(WeightKind.POWER)


def power_times_n_plus_1() -> WeightFamily:
    return WeightFamily(WeightKind.POWER_TIMES_N_PLUS_1)


def power_times_n() -> WeightFamily:
    return WeightFamily(WeightKind.POWER_TIMES_N)


def power_times_n_squared() -> WeightFamily:
    return WeightFamily(WeightKind.POWER_TIMES_N_SQUARED)


def cesaro(alpha: float) -> WeightFamily:
    return WeightFamily(WeightKind.CESARO, alpha=alpha)


def bernardi(beta: float, m0: int = 0) -> WeightFamily:
    return WeightFamily(WeightKind.BERNARDI, beta=beta, m0=m0)


def _check_r(r: float) -> None:
    if not 0.0 <= r <= R_MAX:
        raise DomainError(f"r must lie in [0, {R_MAX}], got {r!r}")


def coefficient(family: WeightFamily, n: int) -> float:
    """The exact constant w_n with phi_n(r) = w_n * r**n."""
    if n < 0:
        raise DomainError(f"weight index must be >= 0, got {n}")
    kind = family.kind
    if kind is WeightKind.POWER:
        return 1.0
    if kind is WeightKind.POWER_TIMES_N_PLUS_1:
        return float(n + 1)
    if kind is WeightKind.POWER_TIMES_N:
        return float(n)
    if kind is WeightKind.POWER_TIMES_N_SQUARED:
        return float(n * n)
    if kind is WeightKind.CESARO:
        return (family.alpha + 1.0) / (n + family.alpha + 1.0)
    if n < family.m0:
        return 0.0
    return 1.0 / (n + family.beta)


def comparison_weight(family: WeightFamily, m: int) -> float:
    """Leading weight used on the comparison side of radius inequalities.

    Equal to ``coefficient(family, m)`` except for the pure-n families at
    m = 0, whose comparison weight is the unit constant.
    """
    w = coefficient(family, m)
    if w == 0.0 and m == 0 and family.kind in (
        WeightKind.POWER_TIMES_N,
        WeightKind.POWER_TIMES_N_SQUARED,
    ):
        return 1.0
    return w


def weight_at(family: WeightFamily, n: int, r: float) -> float:
    """Evaluate phi_n(r) = w_n * r**n."""
    _check_r(r)
    return coefficient(family, n) * r ** n


# --- closed forms --------------------------------------------------------
#
# All three follow from differentiating the geometric series:
#   sum_{n>=k} r^n       = r^k / (1-r)
#   sum_{n>=k} n r^n     = r^k (k - (k-1) r) / (1-r)^2
#   sum_{n>=k} n^2 r^n   = r^k (k^2 - (2k^2-2k-1) r + (k-1)^2 r^2) / (1-r)^3


def _geom(k: int, r: float) -> float:
    return r ** k / (1.0 - r)


def _geom_n(k: int, r: float) -> float:
    return r ** k * (k - (k - 1) * r) / (1.0 - r) ** 2


def _geom_n2(k: int, r: float) -> float:
    kk = float(k)
    return (
        r ** k
        * (kk * kk - (2.0 * kk * kk - 2.0 * kk - 1.0) * r + (kk - 1.0) ** 2 * r * r)
        / (1.0 - r) ** 3
    )


def tail_sum(family: WeightFamily, from_n: int, r: float, tol: float = DEFAULT_TOL) -> float:
    """sum_{n >= from_n} phi_n(r) with absolute error at most ``tol``."""
    _check_r(r)
    if from_n < 0:
        raise DomainError(f"from_n must be >= 0, got {from_n}")
    if not tol > 0.0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    if r == 0.0:
        return weight_at(family, from_n, 0.0)
    kind = family.kind
    if kind is WeightKind.POWER:
        return _geom(from_n, r)
    if kind is WeightKind.POWER_TIMES_N:
        return _geom_n(from_n, r)
    if kind is WeightKind.POWER_TIMES_N_SQUARED:
        return _geom_n2(from_n, r)
    if kind is WeightKind.POWER_TIMES_N_PLUS_1:
        return _geom_n(from_n, r) + _geom(from_n, r)
    if kind is WeightKind.CESARO:
        if family.alpha == 0.0 and from_n == 0:
            return -math.log1p(-r) / r
        value, _ = kernels.series_tail(
            kernels.CESARO, family.alpha, from_n, r, tol, MAX_TERMS
        )
        return value
    start = max(from_n, family.m0)
    value, _ = kernels.series_tail(kernels.BERNARDI, family.beta, start, r, tol, MAX_TERMS)
    return value


def reduced_tail(family: WeightFamily, m: int, r: float, tol: float = DEFAULT_TOL) -> float:
    """sum_{n >= m+1} w_n * r**(n-m), the tail of the order-m radius equation.

    Dividing the balance equation through by r**m keeps it well scaled at
    the left end of the scan interval; for the separable built-ins the
    quotient is again an explicit series in r.
    """
    _check_r(r)
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if r == 0.0:
        return 0.0
    kind = family.kind
    if kind is WeightKind.POWER:
        return _geom(1, r)
    if kind is WeightKind.POWER_TIMES_N:
        return m * _geom(1, r) + _geom_n(1, r)
    if kind is WeightKind.POWER_TIMES_N_PLUS_1:
        return (m + 1) * _geom(1, r) + _geom_n(1, r)
    if kind is WeightKind.POWER_TIMES_N_SQUARED:
        return m * m * _geom(1, r) + 2.0 * m * _geom_n(1, r) + _geom_n2(1, r)
    if kind is WeightKind.CESARO:
        # (alpha+1) sum_{k>=1} r^k / (k + m + alpha + 1), rescaled from the
        # kernel's (alpha+m+1)-normalised series.
        scale = (family.alpha + 1.0) / (family.alpha + m + 1.0)
        value, _ = kernels.series_tail(
            kernels.CESARO, family.alpha + m, 1, r, tol / max(scale, 1.0), MAX_TERMS
        )
        return scale * value
    start = max(1, family.m0 - m)
    value, _ = kernels.series_tail(
        kernels.BERNARDI, family.beta + m, start, r, tol, MAX_TERMS
    )
    return value


@dataclass(frozen=True)
class TailSumRequest:
    """A validated tail-sum query."""

    family: WeightFamily
    from_n: int
    r: float
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if self.from_n < 0:
            raise DomainError(f"from_n must be >= 0, got {self.from_n}")
        if not self.tol > 0.0:
            raise DomainError(f"tol must be > 0, got {self.tol!r}")
        _check_r(self.r)

    def evaluate(self) -> float:
        return tail_sum(self.family, self.from_n, self.r, self.tol)


__all__ = [
    "R_MAX",
    "DEFAULT_TOL",
    "MAX_TERMS",
    "WeightKind",
    "WeightFamily",
    "TailSumRequest",
    "power",
    "power_times_n_plus_1",
    "power_times_n",
    "power_times_n_squared",
    "cesaro",
    "bernardi",
    "coefficient",
    "comparison_weight",
    "weight_at",
    "tail_sum",
    "reduced_tail",
    "ConvergenceError",
    "DomainError",
]
