# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot array kernels.

Mirrors ``wavearith._fallback`` function for function; the branch structure
of the trigonometric range reduction is kept identical so both backends are
exact at quarter turns. Scalar accumulations use compensated (Kahan)
summation where the fallback uses math.fsum.
"""

from libc.math cimport M_PI, cos, exp, fabs, rint, sin

import numpy as np

cdef double TWO_PI = 2.0 * M_PI
cdef double BUMP_EDGE = 0.5 - 1e-15


cdef inline double c_bump_raw(double x) nogil:
    if fabs(x) >= BUMP_EDGE:
        return 0.0
    return exp(-1.0 / (1.0 - 4.0 * x * x))


cdef inline double c_sin2pi(double x) nogil:
    cdef double u = x - rint(x)
    cdef double arg
    if u == 0.25:
        return 1.0
    if u == -0.25:
        return -1.0
    if u > 0.25:
        arg = 0.5 - u
    elif u < -0.25:
        arg = -0.5 - u
    else:
        arg = u
    return sin(TWO_PI * arg)


cdef inline double c_cos2pi(double x) nogil:
    cdef double v = fabs(x - rint(x))
    if v == 0.25:
        return 0.0
    if v > 0.25:
        return -cos(TWO_PI * (0.5 - v))
    return cos(TWO_PI * v)


def bump_raw(xs):
    """Unnormalized bump exp(-1/(1-4x^2)) on |x| < 1/2, exactly 0 outside."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    out_arr = np.empty(x.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        out[i] = c_bump_raw(x[i])
    return out_arr.reshape(np.shape(xs))


def comb_eval(xs, centers, amps, double scale):
    """Evaluate sum_t amps[t] * scale * bump_raw(x - centers[t])."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef double[::1] c = np.ascontiguousarray(centers, dtype=np.float64)
    cdef double[::1] a = np.ascontiguousarray(amps, dtype=np.float64)
    out_arr = np.zeros(x.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, lo, hi, mid, nc = c.shape[0]
    cdef double xi, dx
    if nc == 0:
        return out_arr.reshape(np.shape(xs))
    for i in range(x.shape[0]):
        xi = x[i]
        # first center strictly greater than xi
        lo = 0
        hi = nc
        while lo < hi:
            mid = (lo + hi) // 2
            if c[mid] <= xi:
                lo = mid + 1
            else:
                hi = mid
        if lo - 1 >= 0:
            dx = xi - c[lo - 1]
            if fabs(dx) < BUMP_EDGE:
                out[i] += a[lo - 1] * scale * c_bump_raw(dx)
        if lo < nc:
            dx = xi - c[lo]
            if fabs(dx) < BUMP_EDGE:
                out[i] += a[lo] * scale * c_bump_raw(dx)
    return out_arr.reshape(np.shape(xs))


def sin2pi(xs):
    """sin(2*pi*x) with exact range reduction (exact at quarter turns)."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    out_arr = np.empty(x.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        out[i] = c_sin2pi(x[i])
    return out_arr.reshape(np.shape(xs))


def cos2pi(xs):
    """cos(2*pi*x) with exact range reduction (0.0 at quarter turns)."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    out_arr = np.empty(x.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    for i in range(x.shape[0]):
        out[i] = c_cos2pi(x[i])
    return out_arr.reshape(np.shape(xs))


def antideriv_series(xs, double a0, a, b):
    """a0*x + sum_k [(a_k sin(2pi k x)) + (b_k (1 - cos(2pi k x)))] / (2pi k)."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef double[::1] ca = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[::1] cb = np.ascontiguousarray(b, dtype=np.float64)
    out_arr = np.empty(x.shape[0], dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, k, na = ca.shape[0], nb = cb.shape[0]
    cdef Py_ssize_t kmax = na if na > nb else nb
    cdef double ak, bk, tpk, term, xi, kx
    for i in range(x.shape[0]):
        xi = x[i]
        out[i] = a0 * xi
        for k in range(1, kmax + 1):
            ak = ca[k - 1] if k <= na else 0.0
            bk = cb[k - 1] if k <= nb else 0.0
            if ak == 0.0 and bk == 0.0:
                continue
            tpk = TWO_PI * k
            kx = k * xi
            term = 0.0
            if ak != 0.0:
                term = (ak * c_sin2pi(kx)) / tpk
            if bk != 0.0:
                term = term + (bk * (1.0 - c_cos2pi(kx))) / tpk
            out[i] = out[i] + term
    return out_arr.reshape(np.shape(xs))


def discrete_sum(double a0, a, b, long long m, long long jmax):
    """Kahan-compensated sum of the per-subinterval kernel integrals.

    Outer loop ascends j, inner loop ascends k, matching the documented
    summation order.
    """
    cdef double[::1] ca = np.ascontiguousarray(a, dtype=np.float64)
    cdef double[::1] cb = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t k, na = ca.shape[0], nb = cb.shape[0]
    cdef Py_ssize_t kmax = na if na > nb else nb
    cdef long long j
    cdef double ak, bk, tpk, t0, t1, term, y, tmp
    cdef double total = 0.0, comp = 0.0
    if jmax <= 0:
        return 0.0
    for j in range(1, jmax + 1):
        term = a0 / m
        for k in range(1, kmax + 1):
            ak = ca[k - 1] if k <= na else 0.0
            bk = cb[k - 1] if k <= nb else 0.0
            if ak == 0.0 and bk == 0.0:
                continue
            tpk = TWO_PI * k
            t0 = (k * (j - 1)) / <double>m
            t1 = (k * j) / <double>m
            if ak != 0.0:
                term += (ak / tpk) * (c_sin2pi(t1) - c_sin2pi(t0))
            if bk != 0.0:
                term += (-bk / tpk) * (c_cos2pi(t1) - c_cos2pi(t0))
        y = term - comp
        tmp = total + y
        comp = (tmp - total) - y
        total = tmp
    return total


def trapezoid_sq_sum(d, wx, wy):
    """Weighted sum over the grid of d[i, j]^2 * wx[i] * wy[j]."""
    cdef double[:, ::1] dd = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] cwx = np.ascontiguousarray(wx, dtype=np.float64)
    cdef double[::1] cwy = np.ascontiguousarray(wy, dtype=np.float64)
    cdef Py_ssize_t i, j
    cdef double row, y, tmp, v
    cdef double total = 0.0, comp = 0.0
    for i in range(dd.shape[0]):
        row = 0.0
        for j in range(dd.shape[1]):
            v = dd[i, j]
            row += v * v * cwy[j]
        y = row * cwx[i] - comp
        tmp = total + y
        comp = (tmp - total) - y
        total = tmp
    return total
