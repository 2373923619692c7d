# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled series kernels.

Same contract as :mod:`bohrad._kernels_py`; see that module for the
truncation-bound derivation.  This version runs the inner term loop in C.
"""

from libc.math cimport fabs, pow

from .errors import ConvergenceError

CESARO = 0
BERNARDI = 1

DEF BLOCK = 32


cdef inline double _n2_tail(double k, double r) nogil:
    # sum_{n >= k} n^2 r^n
    cdef double one = 1.0 - r
    return pow(r, k) * (k * k - (2.0 * k * k - 2.0 * k - 1.0) * r
                        + (k - 1.0) * (k - 1.0) * r * r) / (one * one * one)


def series_tail(int kind, double param, long from_n, double r, double tol, long cap):
    """Certified sum_{n >= from_n} w(n) r**n -> (value, terms_used)."""
    cdef double s = 0.0
    cdef double comp = 0.0
    cdef double rn = pow(r, <double> from_n)
    cdef double w, t, tmp, c
    cdef long n = from_n
    cdef int i
    while n - from_n < cap:
        for i in range(BLOCK):
            if kind == CESARO:
                w = (param + 1.0) / (n + param + 1.0)
            else:
                w = 1.0 / (n + param)
            t = w * rn
            tmp = s + t
            if fabs(s) >= fabs(t):
                comp += (s - tmp) + t
            else:
                comp += (t - tmp) + s
            s = tmp
            rn *= r
            n += 1
        if kind == CESARO:
            c = (param + 1.0) / ((n + param + 1.0) * (<double> n) * (<double> n))
        else:
            c = 1.0 / ((n + param) * (<double> n) * (<double> n))
        if c * _n2_tail(<double> n, r) <= tol:
            return s + comp, n - from_n
    raise ConvergenceError(
        f"series tail at r={r!r} did not certify tol={tol!r} within {cap} terms"
    )
