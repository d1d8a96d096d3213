"""Kernel definitions: the compactly supported bump and periodic Fourier kernels.

The bump is the standard mollifier exp(-1/(1-4x^2)) on |x| < 1/2, exactly
zero outside, normalized to unit mass by adaptive quadrature (the constant
has no closed form). Fourier kernels are finite coefficient vectors
(a0, a_1..a_N, b_1..b_N) with an exact closed-form antiderivative.
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import backend
from .quadrature import ApproxConfig, integrate_1d

__all__ = [
    "BumpKernel",
    "FourierKernel",
    "antiderivative",
    "default_bump",
    "eval_bump",
    "eval_fourier",
    "eval_shifted_scaled",
    "make_fourier",
]

TWO_PI = 2.0 * math.pi


def _scalar_or_array(x, result):
    if np.ndim(x) == 0:
        return float(result)
    return result


@lru_cache(maxsize=1)
def _normalization_constant() -> float:
    # adaptive quadrature at 1e-12 relative tolerance, computed once
    cfg = ApproxConfig(rel_tol=1e-12, abs_tol=1e-15)
    value, _ = integrate_1d(backend.bump_raw, -0.5, 0.5, cfg)
    return value


class BumpKernel:
    """The concrete C-infinity bump phi with support [-1/2, 1/2] and unit mass."""

    support_radius = 0.5

    def __init__(self, normalization_constant: float | None = None):
        if normalization_constant is None:
            normalization_constant = _normalization_constant()
        if not (normalization_constant > 0):
            raise ValueError("normalization constant must be positive")
        self.normalization_constant = normalization_constant

    def __call__(self, x):
        raw = backend.bump_raw(np.asarray(x, dtype=np.float64))
        return _scalar_or_array(x, raw / self.normalization_constant)

    def __repr__(self):
        return f"BumpKernel(normalization_constant={self.normalization_constant!r})"


@lru_cache(maxsize=1)
def default_bump() -> BumpKernel:
    """The shared normalized bump kernel instance."""
    return BumpKernel()


def eval_bump(x):
    """phi(x) = Z^-1 exp(-1/(1-4x^2)) on |x| < 1/2, exactly 0 outside."""
    return default_bump()(x)


def eval_shifted_scaled(k: int, r, x):
    """r * phi(x - (k - 1)): bump number k (1-based) with amplitude r.

    Support is [k - 3/2, k - 1/2]. r may be an int, Fraction or float.
    """
    amp = float(Fraction(r)) if isinstance(r, (int, Fraction)) else float(r)
    x = np.asarray(x, dtype=np.float64)
    return _scalar_or_array(x, amp * eval_bump(x - (k - 1)))


def _finite_floats(values, label: str) -> tuple:
    out = tuple(float(v) for v in values)
    if not all(math.isfinite(v) for v in out):
        raise ValueError(f"{label} coefficients must be finite")
    return out


@dataclass(frozen=True)
class FourierKernel:
    """Periodic kernel rho(x) = a0 + sum_k a_k cos(2pi k x) + b_k sin(2pi k x)."""

    a0: float
    cos_coeffs: tuple = ()
    sin_coeffs: tuple = ()

    def __post_init__(self):
        a0 = float(self.a0)
        if not math.isfinite(a0):
            raise ValueError("a0 must be finite")
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "cos_coeffs", _finite_floats(self.cos_coeffs, "cosine"))
        object.__setattr__(self, "sin_coeffs", _finite_floats(self.sin_coeffs, "sine"))

    @property
    def n_harmonics(self) -> int:
        return max(len(self.cos_coeffs), len(self.sin_coeffs))

    def __call__(self, x):
        xs = np.asarray(x, dtype=np.float64)
        out = np.full(xs.shape, self.a0)
        for k in range(1, self.n_harmonics + 1):
            ak = self.cos_coeffs[k - 1] if k <= len(self.cos_coeffs) else 0.0
            bk = self.sin_coeffs[k - 1] if k <= len(self.sin_coeffs) else 0.0
            if ak != 0.0:
                out = out + ak * backend.cos2pi(k * xs)
            if bk != 0.0:
                out = out + bk * backend.sin2pi(k * xs)
        return _scalar_or_array(x, out)

    def antiderivative(self, x):
        """Integral of the kernel from 0 to x, in closed form.

        a0*x + sum_k [a_k sin(2pi k x) + b_k (1 - cos(2pi k x))] / (2pi k);
        exact (no quadrature), and exactly x*a0 at integer x.
        """
        xs = np.asarray(x, dtype=np.float64)
        out = backend.antideriv_series(
            xs, self.a0, np.asarray(self.cos_coeffs), np.asarray(self.sin_coeffs)
        )
        return _scalar_or_array(x, out)

    def to_json(self) -> dict:
        # serialized array position 0 holds the k = 1 coefficient
        return {"a0": self.a0, "a": list(self.cos_coeffs), "b": list(self.sin_coeffs)}

    @classmethod
    def from_json(cls, data) -> "FourierKernel":
        if isinstance(data, str):
            data = json.loads(data)
        extra = set(data) - {"a0", "a", "b"}
        if extra:
            raise ValueError(f"unknown kernel keys: {sorted(extra)}")
        return cls(a0=data.get("a0", 1.0), cos_coeffs=tuple(data.get("a", ())), sin_coeffs=tuple(data.get("b", ())))

    @classmethod
    def standard(cls) -> "FourierKernel":
        return cls(a0=1.0, cos_coeffs=(-1.0,))

    @classmethod
    def alpha(cls, alpha: float) -> "FourierKernel":
        return cls(a0=1.0, cos_coeffs=(-float(alpha),))

    @classmethod
    def alpha_beta(cls, alpha: float, beta: float) -> "FourierKernel":
        return cls(a0=1.0, cos_coeffs=(-float(alpha),), sin_coeffs=(0.0, float(beta)))

    @classmethod
    def explicit(cls, a0: float, a=(), b=()) -> "FourierKernel":
        return cls(a0=a0, cos_coeffs=tuple(a), sin_coeffs=tuple(b))


def make_fourier(preset: str, *params) -> FourierKernel:
    """Build a kernel from a preset name.

    standard -> (a0=1, a1=-1); alpha(v) -> (a0=1, a1=-v);
    alpha_beta(v, w) -> (a0=1, a1=-v, b2=w); explicit(a0, a, b) passes
    coefficients through unchanged.
    """
    if preset == "standard":
        if params:
            raise ValueError("standard preset takes no parameters")
        return FourierKernel.standard()
    if preset == "alpha":
        if len(params) != 1:
            raise ValueError("alpha preset takes one parameter")
        return FourierKernel.alpha(params[0])
    if preset == "alpha_beta":
        if len(params) != 2:
            raise ValueError("alpha_beta preset takes two parameters")
        return FourierKernel.alpha_beta(params[0], params[1])
    if preset == "explicit":
        if len(params) != 3:
            raise ValueError("explicit preset takes (a0, a, b)")
        return FourierKernel.explicit(params[0], params[1], params[2])
    raise ValueError(f"unknown kernel preset: {preset!r}")


def eval_fourier(K: FourierKernel, x):
    """rho(x) for the given kernel."""
    return K(x)


def antiderivative(K: FourierKernel, x):
    """Closed-form antiderivative of the kernel, evaluated at x."""
    return K.antiderivative(x)
