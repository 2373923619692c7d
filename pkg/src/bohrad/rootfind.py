"""Leftmost-root location on (0, 1).

Every radius in this library is the smallest root in (0, 1) of a continuous
scalar function.  The scan interval is capped strictly inside (0, 1) because
the radius functions are singular at r = 1.  Strategy: walk a uniform grid
from the left until the first sign change, then bisect.  Bisection is used
deliberately; the functions are cheap and the bracket guarantee matters more
than convergence order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, InvalidTolerance, NoRootFound

LO_CAP = 1e-9
HI_CAP = 1.0 - 1e-9
DEFAULT_GRID_POINTS = 1024
DEFAULT_X_TOL = 1e-10
DEFAULT_RESIDUAL_TOL = 1e-9

_MAX_BISECT = 200


@dataclass(frozen=True)
class RootResult:
    """Smallest located root with its original bracket and diagnostics.

    ``bracket_lo < root < bracket_hi`` with a sign change across the
    bracket, except in the two degenerate cases (residual hit at the left
    cap, or a tangency) where the bracket collapses to the node itself.
    """

    root: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    iterations: int
    tangency: bool = False


def smallest_root(
    g: Callable[[float], float],
    grid_points: int = DEFAULT_GRID_POINTS,
    x_tol: float = DEFAULT_X_TOL,
    *,
    lo_cap: float = LO_CAP,
    hi_cap: float = HI_CAP,
    residual_tol: float = DEFAULT_RESIDUAL_TOL,
) -> RootResult:
    """First root of ``g`` on [lo_cap, hi_cap], scanning from the left.

    Raises NoRootFound if g never changes sign on the grid and never dips
    below ``residual_tol`` in magnitude.  A dip without a sign change is
    reported as a tangency.
    """
    if not x_tol > 0.0:
        raise InvalidTolerance(f"x_tol must be > 0, got {x_tol!r}")
    if grid_points < 2:
        raise DomainError(f"grid_points must be >= 2, got {grid_points}")
    if not 0.0 < lo_cap < hi_cap < 1.0:
        raise DomainError(f"need 0 < lo_cap < hi_cap < 1, got {(lo_cap, hi_cap)}")

    step = (hi_cap - lo_cap) / (grid_points - 1)
    x_prev = lo_cap
    f_prev = g(x_prev)
    if abs(f_prev) <= residual_tol:
        return RootResult(x_prev, x_prev, x_prev, f_prev, 0)

    best_x, best_f = x_prev, f_prev
    for i in range(1, grid_points):
        x = lo_cap + i * step if i < grid_points - 1 else hi_cap
        f = g(x)
        if f_prev * f <= 0.0:
            return _bisect(g, x_prev, x, f_prev, f, x_tol)
        if abs(f) < abs(best_f):
            best_x, best_f = x, f
        x_prev, f_prev = x, f

    if abs(best_f) <= residual_tol:
        return RootResult(best_x, best_x, best_x, best_f, 0, tangency=True)
    raise NoRootFound(
        f"no sign change on [{lo_cap}, {hi_cap}] with {grid_points} grid points"
    )


def _bisect(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    f_lo: float,
    f_hi: float,
    x_tol: float,
) -> RootResult:
    bracket = (lo, hi)
    iterations = 0
    while hi - lo > x_tol and iterations < _MAX_BISECT:
        mid = 0.5 * (lo + hi)
        f_mid = g(mid)
        iterations += 1
        if f_lo * f_mid <= 0.0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    root = 0.5 * (lo + hi)
    return RootResult(root, bracket[0], bracket[1], g(root), iterations)


__all__ = [
    "LO_CAP",
    "HI_CAP",
    "DEFAULT_GRID_POINTS",
    "DEFAULT_X_TOL",
    "DEFAULT_RESIDUAL_TOL",
    "RootResult",
    "smallest_root",
    "NoRootFound",
    "InvalidTolerance",
]
