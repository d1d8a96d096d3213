"""Integral-free discrete approximations of the analytic representations.

Every value here is a finite sum of exact per-subinterval kernel integrals:
the telescoping unit-kernel sum, the generalized discrete approximation for
arbitrary Fourier kernels, and the two series forms for rationals (which
genuinely differ; both are exposed).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .kernels import FourierKernel

__all__ = [
    "DiscretizationParams",
    "discrete_general",
    "discrete_standard",
    "series_rational",
]

TWO_PI = 2.0 * math.pi

# values of m*x within this of an integer snap to it, so a subinterval is
# never dropped to floating-point representation error
_FLOOR_SNAP = 1e-12


@dataclass(frozen=True)
class DiscretizationParams:
    """m: subintervals per unit; N: harmonics retained."""

    m: int
    N: int

    def __post_init__(self):
        if not (isinstance(self.m, int) and not isinstance(self.m, bool) and self.m >= 1):
            raise ValueError("m must be a positive integer")
        if not (isinstance(self.N, int) and not isinstance(self.N, bool) and self.N >= 1):
            raise ValueError("N must be a positive integer")


def _snap_floor(y: float) -> int:
    r = round(y)
    if abs(y - r) <= _FLOOR_SNAP:
        return int(r)
    return int(math.floor(y))


def _scalar_trig(fn, x: float) -> float:
    return float(fn(np.float64(x)))


def discrete_standard(n: int, m: int) -> float:
    """Sum over k = 1..n*m of [1/m - (sin(2pi k/m) - sin(2pi (k-1)/m)) / 2pi].

    Telescopes to n - sin(2pi n)/2pi = n up to rounding.
    """
    if not (isinstance(n, int) and n >= 1):
        raise ValueError("n must be a positive integer")
    if not (isinstance(m, int) and m >= 1):
        raise ValueError("m must be a positive integer")
    return backend.discrete_sum(1.0, np.array([-1.0]), np.array([]), m, n * m)


def discrete_general(K: FourierKernel, x: float, params: DiscretizationParams) -> float:
    """Generalized discrete approximation of the kernel antiderivative at x.

    Sums the exact kernel integrals over the first floor(m*x) subintervals
    of width 1/m, truncated to N harmonics. Coefficients beyond the
    kernel's stored length count as zero, so N may exceed it. When m*x is
    an integer and N covers every nonzero coefficient, the value equals
    antiderivative(K, x) up to rounding.
    """
    x = float(x)
    if x < 0:
        raise ValueError("discrete_general requires x >= 0")
    n_harm = params.N
    a = np.array(K.cos_coeffs[:n_harm] + (0.0,) * max(0, n_harm - len(K.cos_coeffs)))
    b = np.array(K.sin_coeffs[:n_harm] + (0.0,) * max(0, n_harm - len(K.sin_coeffs)))
    jmax = _snap_floor(params.m * x)
    return backend.discrete_sum(K.a0, a, b, params.m, jmax)


def series_rational(p: int, q: int, variant: str) -> float:
    """Two series representations of p/q under the unit kernel.

    fragment_sum: p identical copies of the first 1/q fragment,
    p * (1/q - sin(2pi/q)/2pi). cumulative: the running antiderivative
    at p/q. The two agree only when sin(2pi p/q) = p sin(2pi/q).
    """
    if not (isinstance(p, int) and p >= 1 and isinstance(q, int) and q >= 1):
        raise ValueError("p and q must be positive integers")
    if variant == "fragment_sum":
        frag = 1.0 / q - _scalar_trig(backend.sin2pi, 1.0 / q) / TWO_PI
        return p * frag
    if variant == "cumulative":
        return FourierKernel.standard().antiderivative(p / q)
    raise ValueError(f"unknown variant: {variant!r}")
