"""Class-level radii.

Each radius is the smallest root in (0, 1) of a balance equation between a
leading weight and the weighted tail it must dominate:

    general (lam > 0):     p * w0 = 2 * lam * sum_{n>=1} phi_n(r)
    shifted disk (gamma):  lam = 1 / (1 + gamma)
    order m:               w_m = (2 / (p (1+gamma))) * sum_{n>=m+1} w_n r^(n-m)

The order-m form is solved after dividing through by r**m, which keeps the
equation O(1) near r = 0 and makes radii that depend only on m + beta (the
bernardi family) agree bit for bit.

Closed forms exist for the four polynomial families:

    R1 = q / (q + 2)                          q := p (1 + gamma)
    R2 = 1 - sqrt(2 / (q + 2))
    R3 = (q + 1 - sqrt(2 q + 1)) / q
    R4 = smallest root of q (1-r)^3 - 2 r (1 + r)

The cesaro radius solves (3+gamma)(1+alpha) * sum_{n>=0} r^n/(n+1) = 2/(1-r);
alpha enters as a prefactor of the logarithmic series.  The bernardi radius
solves (2/(1+gamma)) * sum_{k>=1} r^k/(k+m+beta) = 1/(m+beta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from . import weights
from .errors import DomainError
from .rootfind import (
    DEFAULT_GRID_POINTS,
    DEFAULT_X_TOL,
    RootResult,
    smallest_root,
)
from .weights import WeightFamily, bernardi, cesaro

# Series tolerance used inside radius equations; root location itself is
# governed by x_tol.
_EQ_TOL = 1e-13

CLOSED_FORMS = ("R1", "R2", "R3", "R4")


def _check_p(p: float) -> None:
    if not 1.0 <= p <= 2.0:
        raise DomainError(f"p must lie in [1, 2], got {p!r}")


def _check_gamma(gamma: float) -> None:
    if not 0.0 <= gamma < 1.0:
        raise DomainError(f"gamma must lie in [0, 1), got {gamma!r}")


def general_radius(
    family: WeightFamily,
    p: float,
    lam: float,
    grid_points: int = DEFAULT_GRID_POINTS,
    x_tol: float = DEFAULT_X_TOL,
) -> RootResult:
    """Smallest root of p * w0 - 2 * lam * sum_{n>=1} phi_n(r)."""
    _check_p(p)
    if not lam > 0.0:
        raise DomainError(f"lam must be > 0, got {lam!r}")
    w0 = weights.comparison_weight(family, 0)

    def g(r: float) -> float:
        return p * w0 - 2.0 * lam * weights.tail_sum(family, 1, r, _EQ_TOL)

    return smallest_root(g, grid_points, x_tol)


def shifted_disk_radius(
    family: WeightFamily,
    p: float,
    gamma: float,
    grid_points: int = DEFAULT_GRID_POINTS,
    x_tol: float = DEFAULT_X_TOL,
) -> RootResult:
    """Radius on the disk shifted by gamma: the general form at lam = 1/(1+gamma)."""
    _check_gamma(gamma)
    return general_radius(family, p, 1.0 / (1.0 + gamma), grid_points, x_tol)


def shifted_disk_radius_m(
    family: WeightFamily,
    p: float,
    gamma: float,
    m: int,
    grid_points: int = DEFAULT_GRID_POINTS,
    x_tol: float = DEFAULT_X_TOL,
) -> RootResult:
    """Radius for series with vanishing order m on the shifted disk."""
    _check_p(p)
    _check_gamma(gamma)
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    wm = weights.comparison_weight(family, m)
    factor = 2.0 / (p * (1.0 + gamma))

    def g(r: float) -> float:
        return wm - factor * weights.reduced_tail(family, m, r, _EQ_TOL)

    return smallest_root(g, grid_points, x_tol)


def closed_form_radius(which: str, p: float, gamma: float) -> float:
    """The four polynomial-family radii in closed form (R4 via its cubic)."""
    _check_p(p)
    _check_gamma(gamma)
    q = p * (1.0 + gamma)
    if which == "R1":
        return q / (q + 2.0)
    if which == "R2":
        return 1.0 - math.sqrt(2.0 / (q + 2.0))
    if which == "R3":
        return (q + 1.0 - math.sqrt(2.0 * q + 1.0)) / q
    if which == "R4":
        return smallest_root(lambda r: r4_equation(p, gamma, r), x_tol=1e-12).root
    raise DomainError(f"which must be one of {CLOSED_FORMS}, got {which!r}")


def r4_equation(p: float, gamma: float, r: float) -> float:
    """p (1+gamma) (1-r)^3 - 2 r (1+r); its smallest root in (0,1) is R4."""
    return p * (1.0 + gamma) * (1.0 - r) ** 3 - 2.0 * r * (1.0 + r)


def cesaro_equation(gamma: float, alpha: float, r: float) -> float:
    """(3+gamma)(1+alpha) sum_{n>=0} r^n/(n+1) - 2/(1-r)."""
    s1 = weights.tail_sum(cesaro(0.0), 0, r, _EQ_TOL)
    return (3.0 + gamma) * (1.0 + alpha) * s1 - 2.0 / (1.0 - r)


def cesaro_radius(
    gamma: float,
    alpha: float,
    grid_points: int = DEFAULT_GRID_POINTS,
    x_tol: float = DEFAULT_X_TOL,
) -> RootResult:
    """Smallest root of the order-alpha averaging radius equation."""
    _check_gamma(gamma)
    if not alpha > -1.0:
        raise DomainError(f"alpha must be > -1, got {alpha!r}")
    return smallest_root(lambda r: cesaro_equation(gamma, alpha, r), grid_points, x_tol)


def bernardi_equation(m: int, beta: float, gamma: float, r: float) -> float:
    """(2/(1+gamma)) sum_{n>=m+1} r^n/(n+beta) - r^m/(m+beta)."""
    fam = bernardi(beta, m0=m)
    return (2.0 / (1.0 + gamma)) * weights.tail_sum(fam, m + 1, r, _EQ_TOL) - r ** m / (
        m + beta
    )


def bernardi_radius(
    m: int,
    beta: float,
    gamma: float,
    grid_points: int = DEFAULT_GRID_POINTS,
    x_tol: float = DEFAULT_X_TOL,
) -> RootResult:
    """Smallest positive root of the bernardi balance equation.

    Solved in the form divided by r**m, so the result depends on (m, beta)
    only through m + beta.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    if not m + beta > 0.0:
        raise DomainError(f"need m + beta > 0, got {m + beta!r}")
    _check_gamma(gamma)
    return shifted_disk_radius_m(bernardi(beta, m0=m), 1.0, gamma, m, grid_points, x_tol)


# --- p-norm majorant bounds ----------------------------------------------


def _upper_objective(a: np.ndarray, p: float) -> np.ndarray:
    num = (1.0 - a ** p) ** (1.0 / p)
    den = ((1.0 - a * a) ** p + a ** p * (1.0 - a ** p)) ** (1.0 / p)
    return num / den


def djakov_ramanujan_bounds(p: float) -> Tuple[float, float]:
    """Lower and upper bounds for the p-norm majorant radius, 1 < p < 2.

    The endpoints are filled in by continuity: (1/3, 1/3) at p = 1 and
    (1, 1) at p = 2.  The upper bound is a minimisation over the mixing
    parameter a in [0, 1); the infimum may sit at the a -> 1 end, so the
    cap 1 - 1e-6 is always evaluated as a candidate.
    """
    if not 1.0 <= p <= 2.0:
        raise DomainError(f"p must lie in [1, 2], got {p!r}")
    if p == 1.0:
        lower = 1.0 / 3.0
    elif p == 2.0:
        return 1.0, 1.0
    else:
        lower = (1.0 + (2.0 / p) ** (1.0 / (2.0 - p))) ** ((p - 2.0) / p)

    cap = 1.0 - 1e-6
    grid = np.linspace(0.0, cap, 4096)
    vals = _upper_objective(grid, p)
    i = int(np.argmin(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, grid.size - 1)]
    upper = min(float(vals[i]), _golden_min(lambda a: float(_upper_objective(np.asarray(a), p)), lo, hi))
    return lower, upper


def _golden_min(f, lo: float, hi: float, x_tol: float = 1e-10) -> float:
    """Golden-section refinement; returns the best function value found."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > x_tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return min(fc, fd)


@dataclass(frozen=True)
class RadiusProblem:
    """The tuple defining one class-level radius equation.

    Exactly one of ``gamma`` (shifted-disk form) and ``lam`` (general form)
    must be given.
    """

    family: WeightFamily
    p: float
    gamma: Optional[float] = None
    lam: Optional[float] = None
    m: int = 0

    def __post_init__(self) -> None:
        _check_p(self.p)
        if (self.gamma is None) == (self.lam is None):
            raise DomainError("exactly one of gamma and lam must be set")
        if self.gamma is not None:
            _check_gamma(self.gamma)
        if self.lam is not None and not self.lam > 0.0:
            raise DomainError(f"lam must be > 0, got {self.lam!r}")
        if self.m < 0:
            raise DomainError(f"m must be >= 0, got {self.m}")

    def solve(
        self,
        grid_points: int = DEFAULT_GRID_POINTS,
        x_tol: float = DEFAULT_X_TOL,
    ) -> RootResult:
        if self.lam is not None:
            if self.m != 0:
                raise DomainError("the general lam form is defined for m = 0")
            return general_radius(self.family, self.p, self.lam, grid_points, x_tol)
        if self.m == 0:
            return shifted_disk_radius(self.family, self.p, self.gamma, grid_points, x_tol)
        return shifted_disk_radius_m(
            self.family, self.p, self.gamma, self.m, grid_points, x_tol
        )


__all__ = [
    "CLOSED_FORMS",
    "RadiusProblem",
    "general_radius",
    "shifted_disk_radius",
    "shifted_disk_radius_m",
    "closed_form_radius",
    "r4_equation",
    "cesaro_equation",
    "cesaro_radius",
    "bernardi_equation",
    "bernardi_radius",
    "djakov_ramanujan_bounds",
]
