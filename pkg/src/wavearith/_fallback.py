"""Pure NumPy implementations of the hot array kernels.

This module mirrors the compiled extension ``wavearith._native`` one to one.
Both expose the same seven functions with identical branch structure so the
two backends agree to rounding (and bit for bit at the special points that
the rest of the library relies on: integers, half integers and quarter
integers of the trigonometric argument).
"""

import math

import numpy as np

TWO_PI = 2.0 * math.pi

# Values of |x| at or beyond this are outside the open support of the bump;
# the exponent -1/(1-4x^2) overflows there, so the cut must come first.
BUMP_EDGE = 0.5 - 1e-15


def bump_raw(xs):
    """Unnormalized bump exp(-1/(1-4x^2)) on |x| < 1/2, exactly 0 outside."""
    xs = np.asarray(xs, dtype=np.float64)
    flat = np.atleast_1d(xs)
    out = np.zeros_like(flat)
    inside = np.abs(flat) < BUMP_EDGE
    xi = flat[inside]
    out[inside] = np.exp(-1.0 / (1.0 - 4.0 * xi * xi))
    return out.reshape(xs.shape)


def comb_eval(xs, centers, amps, scale):
    """Evaluate sum_t amps[t] * scale * bump_raw(x - centers[t]).

    ``centers`` must be strictly increasing with pairwise spacing >= 1 so
    that at most one bump covers any point.
    """
    xs = np.asarray(xs, dtype=np.float64)
    centers = np.ascontiguousarray(centers, dtype=np.float64)
    amps = np.ascontiguousarray(amps, dtype=np.float64)
    flat = np.atleast_1d(xs)
    out = np.zeros_like(flat)
    if centers.size == 0:
        return out.reshape(xs.shape)
    idx = np.searchsorted(centers, flat)
    for cand in (idx - 1, idx):
        ok = (cand >= 0) & (cand < centers.size)
        if not ok.any():
            continue
        dx = flat[ok] - centers[cand[ok]]
        vals = bump_raw(dx) * (amps[cand[ok]] * scale)
        out[ok] += vals
    return out.reshape(xs.shape)


def _reduce_turns(xs):
    # x - round(x) is exact for |x| < 2**52 and lands in [-1/2, 1/2]
    return xs - np.rint(xs)


def sin2pi(xs):
    """sin(2*pi*x) with exact range reduction.

    Exact at quarter turns: integers give +-0.0, x = n + 1/2 gives 0.0,
    x = n + 1/4 gives 1.0, x = n - 1/4 gives -1.0.
    """
    xs = np.asarray(xs, dtype=np.float64)
    u = _reduce_turns(xs)
    # reflect the outer quarters onto [-1/4, 1/4]; 0.5 - u is exact there
    arg = np.where(u > 0.25, 0.5 - u, np.where(u < -0.25, -0.5 - u, u))
    out = np.sin(TWO_PI * arg)
    out = np.where(u == 0.25, 1.0, out)
    out = np.where(u == -0.25, -1.0, out)
    return out


def cos2pi(xs):
    """cos(2*pi*x) with exact range reduction (0.0 at quarter turns)."""
    xs = np.asarray(xs, dtype=np.float64)
    v = np.abs(_reduce_turns(xs))
    inner = np.cos(TWO_PI * np.where(v > 0.25, 0.5 - v, v))
    out = np.where(v > 0.25, -inner, inner)
    out = np.where(v == 0.25, 0.0, out)
    return out


def antideriv_series(xs, a0, a, b):
    """a0*x + sum_k [(a_k sin(2pi k x)) + (b_k (1 - cos(2pi k x)))] / (2pi k).

    Terms are accumulated in ascending k with the sine part and the cosine
    part of each harmonic added as one term; zero coefficients are skipped.
    Exact (bit for bit) at integer x.
    """
    xs = np.asarray(xs, dtype=np.float64)
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    out = a0 * xs
    for k in range(1, max(a.size, b.size) + 1):
        ak = a[k - 1] if k <= a.size else 0.0
        bk = b[k - 1] if k <= b.size else 0.0
        tpk = TWO_PI * k
        term = 0.0
        if ak != 0.0:
            term = (ak * sin2pi(k * xs)) / tpk
        if bk != 0.0:
            term = term + (bk * (1.0 - cos2pi(k * xs))) / tpk
        if ak != 0.0 or bk != 0.0:
            out = out + term
    return out


def discrete_sum(a0, a, b, m, jmax):
    """Sum over j = 1..jmax of the exact per-subinterval kernel integrals.

    Term j is a0/m + sum_k (a_k/(2pi k)) * dsin_{k,j} - (b_k/(2pi k)) * dcos_{k,j}
    with dsin_{k,j} = sin(2pi k j/m) - sin(2pi k (j-1)/m) and dcos likewise.
    The result is the correctly rounded sum of all terms (math.fsum).
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    if jmax <= 0:
        return 0.0
    j = np.arange(0, jmax + 1, dtype=np.int64)
    parts = [np.full(jmax, a0 / m)]
    for k in range(1, max(a.size, b.size) + 1):
        ak = a[k - 1] if k <= a.size else 0.0
        bk = b[k - 1] if k <= b.size else 0.0
        if ak == 0.0 and bk == 0.0:
            continue
        t = (k * j) / m  # k*j is exact in int64, one rounding on divide
        tpk = TWO_PI * k
        if ak != 0.0:
            s = sin2pi(t)
            parts.append((ak / tpk) * (s[1:] - s[:-1]))
        if bk != 0.0:
            c = cos2pi(t)
            parts.append((-bk / tpk) * (c[1:] - c[:-1]))
    return math.fsum(np.concatenate(parts).tolist())


def trapezoid_sq_sum(d, wx, wy):
    """Weighted sum over the grid of d[i, j]^2 * wx[i] * wy[j]."""
    d = np.ascontiguousarray(d, dtype=np.float64)
    wx = np.ascontiguousarray(wx, dtype=np.float64)
    wy = np.ascontiguousarray(wy, dtype=np.float64)
    return float(wx @ (d * d) @ wy)
