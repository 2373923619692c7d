"""Pure-Python series kernels.

Mirrors the compiled module ``_kernels_cy``; one of the two is selected at
import time by :mod:`bohrad.kernels`.  The only primitive is a certified
tail sum for the two slowly decaying weight shapes

    CESARO:    w(n) = (param + 1) / (n + param + 1)
    BERNARDI:  w(n) = 1 / (n + param)

summed against r**n.  After N terms the remainder is bounded through the
uniform domination w(n) <= c * n**2 (valid on the unsummed range), so

    sum_{n > N} w(n) r**n  <=  c(N+1) * sum_{n > N} n**2 r**n

and the right-hand side has a closed form obtained by differentiating the
geometric series twice.  Accumulation is compensated (Neumaier) so the
1e-12 default tolerance stays honest near r = 0.99.
"""

from .errors import ConvergenceError

CESARO = 0
BERNARDI = 1

_BLOCK = 32


def _n2_tail(k: float, r: float) -> float:
    # sum_{n >= k} n^2 r^n
    one = 1.0 - r
    return (
        r ** k
        * (k * k - (2.0 * k * k - 2.0 * k - 1.0) * r + (k - 1.0) * (k - 1.0) * r * r)
        / (one * one * one)
    )


def series_tail(kind: int, param: float, from_n: int, r: float, tol: float, cap: int):
    """Certified sum_{n >= from_n} w(n) r**n.

    Returns ``(value, terms_used)`` or raises ConvergenceError when the
    remainder bound cannot reach ``tol`` within ``cap`` terms.
    """
    s = 0.0
    comp = 0.0
    n = from_n
    rn = r ** from_n
    while n - from_n < cap:
        for _ in range(_BLOCK):
            if kind == CESARO:
                w = (param + 1.0) / (n + param + 1.0)
            else:
                w = 1.0 / (n + param)
            t = w * rn
            tmp = s + t
            if abs(s) >= abs(t):
                comp += (s - tmp) + t
            else:
                comp += (t - tmp) + s
            s = tmp
            rn *= r
            n += 1
        # w(j)/j^2 is decreasing, so its value at the first unsummed index
        # dominates the whole remainder range.
        if kind == CESARO:
            c = (param + 1.0) / ((n + param + 1.0) * n * n)
        else:
            c = 1.0 / ((n + param) * n * n)
        if c * _n2_tail(float(n), r) <= tol:
            return s + comp, n - from_n
    raise ConvergenceError(
        f"series tail at r={r!r} did not certify tol={tol!r} within {cap} terms"
    )
