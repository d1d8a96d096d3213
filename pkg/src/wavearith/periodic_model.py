"""Globally smooth number representation via periodic kernel antiderivatives.

The analytic value of x is the integral of the kernel from 0 to x (closed
form, no quadrature); the product of two values is the separable double
integral, which factors exactly into the product of antiderivatives.
Deviation measurements against the identity map quantify how far a kernel's
representation strays from x itself.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kernels import FourierKernel

__all__ = [
    "AnalyticValue",
    "analytic_product",
    "analytic_value",
    "deviation_l2",
    "deviation_sup",
]


@dataclass(frozen=True)
class AnalyticValue:
    """Record of one analytic representation: value = antiderivative(kernel, input)."""

    input: float
    kernel: FourierKernel
    value: float

    @classmethod
    def of(cls, kernel: FourierKernel, x: float) -> "AnalyticValue":
        return cls(input=float(x), kernel=kernel, value=kernel.antiderivative(x))


def analytic_value(K: FourierKernel, x):
    """Antiderivative of the kernel at x; equals x exactly at integers when a0 = 1.

    Negative x is allowed: the closed form is globally defined.
    """
    return K.antiderivative(x)


def analytic_product(K: FourierKernel, x: float, y: float) -> float:
    """Double integral of rho(u) rho(v) over [0, x] x [0, y].

    The integrand is separable, so the value is exactly the product of the
    two antiderivatives; commutative by construction. Defined for
    nonnegative inputs.
    """
    if x < 0 or y < 0:
        raise ValueError("analytic_product requires nonnegative inputs")
    return K.antiderivative(x) * K.antiderivative(y)


def _sample_grid(interval, samples: int) -> np.ndarray:
    lo, hi = float(interval[0]), float(interval[1])
    if not lo < hi:
        raise ValueError("interval must satisfy lo < hi")
    if samples < 100:
        raise ValueError("samples must be >= 100")
    return np.linspace(lo, hi, int(samples))


def deviation_sup(K: FourierKernel, interval, samples: int) -> float:
    """max over the sampled grid of |analytic_value(K, x) - x|."""
    xs = _sample_grid(interval, samples)
    return float(np.max(np.abs(K.antiderivative(xs) - xs)))


def deviation_l2(K: FourierKernel, interval, samples: int) -> float:
    """sqrt of the trapezoid-sampled integral of (analytic_value(K, x) - x)^2."""
    xs = _sample_grid(interval, samples)
    d = K.antiderivative(xs) - xs
    h = (xs[-1] - xs[0]) / (xs.size - 1)
    w = np.full(xs.size, h)
    w[0] *= 0.5
    w[-1] *= 0.5
    return math.sqrt(max(float(w @ (d * d)), 0.0))
