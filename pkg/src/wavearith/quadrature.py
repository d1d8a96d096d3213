"""Numerical integration: adaptive 1D quadrature, separable products, 2D L2.

The 1D integrator is an adaptive Gauss-Kronrod rule (G7/K15) over a batched
interval worklist; every refinement round evaluates the integrand on one
vectorized point set. L2 distances over boxes use fixed-grid composite
trapezoid sampling so results are reproducible bit for bit for a given
config.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from . import backend

__all__ = [
    "ApproxConfig",
    "Box2D",
    "DEFAULT_CONFIG",
    "QuadratureNonConvergence",
    "integrate_1d",
    "integrate_separable",
    "l2_distance_2d",
]


@dataclass(frozen=True)
class ApproxConfig:
    """Quadrature and sampling resolution knobs."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    grid_per_unit: int = 256
    max_depth: int = 40

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be strictly positive")
        if not (isinstance(self.grid_per_unit, int) and self.grid_per_unit >= 16):
            raise ValueError("grid_per_unit must be an integer >= 16")
        if not (isinstance(self.max_depth, int) and self.max_depth >= 1):
            raise ValueError("max_depth must be a positive integer")

    @classmethod
    def from_json(cls, data: dict) -> "ApproxConfig":
        known = {"rel_tol", "abs_tol", "grid_per_unit", "max_depth"}
        bad = set(data) - known
        if bad:
            raise ValueError(f"unknown config keys: {sorted(bad)}")
        return cls(**data)

    def to_json(self) -> dict:
        return asdict(self)


DEFAULT_CONFIG = ApproxConfig()


@dataclass(frozen=True)
class Box2D:
    """Axis-aligned integration domain."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def __post_init__(self):
        if not (self.x_lo < self.x_hi and self.y_lo < self.y_hi):
            raise ValueError("box bounds must satisfy lo < hi on both axes")


class QuadratureNonConvergence(Exception):
    """Raised when the adaptive subdivision cap is hit before tolerance."""

    def __init__(self, value: float, err_estimate: float, max_depth: int):
        self.value = value
        self.err_estimate = err_estimate
        self.max_depth = max_depth
        super().__init__(
            f"quadrature did not converge within max_depth={max_depth}: "
            f"value={value!r}, err_estimate={err_estimate!r}"
        )


# QUADPACK dqk15 abscissae/weights (interval [-1, 1], descending |x|).
_XGK = [
    0.9914553711208126,
    0.9491079123427585,
    0.8648644233597691,
    0.7415311855993944,
    0.5860872354676911,
    0.4058451513773972,
    0.2077849550078985,
    0.0,
]
_WGK = [
    0.022935322010529224,
    0.06309209262997855,
    0.10479001032225018,
    0.14065325971552592,
    0.1690047266392679,
    0.19035057806478542,
    0.20443294007529889,
    0.20948214108472782,
]
_WG = [
    0.1294849661688697,
    0.27970539148927664,
    0.3818300505051189,
    0.4179591836734694,
]

# Sorted 15-point node/weight vectors; the Gauss subset sits at odd indices.
_NODES15 = np.array([-x for x in _XGK[:7]] + [0.0] + [x for x in reversed(_XGK[:7])])
_WK15 = np.array(_WGK[:7] + [_WGK[7]] + list(reversed(_WGK[:7])))
_WG7 = np.array(_WG[:3] + [_WG[3]] + list(reversed(_WG[:3])))


def _as_array_fn(f, lo: float, hi: float):
    """Adapt f to accept a 1D float array; scalar-only callables get wrapped."""
    probe = np.array([lo, 0.5 * (lo + hi), hi], dtype=np.float64)
    try:
        out = np.asarray(f(probe), dtype=np.float64)
        if out.shape == probe.shape:
            return lambda xs: np.asarray(f(xs), dtype=np.float64)
    except Exception:
        pass
    return np.vectorize(f, otypes=[np.float64])


def _gk15_batch(fv, a: np.ndarray, b: np.ndarray):
    """Apply G7/K15 to each interval [a_i, b_i]; returns (values, |K-G|)."""
    hl = 0.5 * (b - a)
    xm = 0.5 * (a + b)
    pts = xm[:, None] + hl[:, None] * _NODES15[None, :]
    ys = fv(pts.ravel()).reshape(pts.shape)
    if not np.isfinite(ys).all():
        raise ValueError("non-finite integrand value in integrate_1d")
    resk = (ys @ _WK15) * hl
    resg = (ys[:, 1::2] @ _WG7) * hl
    return resk, np.abs(resk - resg)


def integrate_1d(f, lo: float, hi: float, cfg: ApproxConfig = DEFAULT_CONFIG, *, breakpoints=None):
    """Adaptive quadrature of f over [lo, hi].

    Returns (value, err_estimate) with err_estimate <= max(abs_tol,
    rel_tol*|value|) on convergence. ``breakpoints`` seeds the initial
    worklist with known subdivision points (e.g. support cell edges).
    Raises QuadratureNonConvergence if max_depth rounds do not reach
    tolerance.
    """
    lo = float(lo)
    hi = float(hi)
    if lo > hi:
        raise ValueError("integrate_1d requires lo <= hi")
    if lo == hi:
        return 0.0, 0.0
    fv = _as_array_fn(f, lo, hi)
    edges = [lo]
    if breakpoints is not None:
        edges.extend(float(t) for t in breakpoints if lo < float(t) < hi)
    edges.append(hi)
    edges = sorted(set(edges))
    a = np.array(edges[:-1])
    b = np.array(edges[1:])
    vals, errs = _gk15_batch(fv, a, b)
    total_width = hi - lo
    value = math.fsum(vals.tolist())
    err = math.fsum(errs.tolist())
    for _ in range(cfg.max_depth):
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(value))
        if err <= tol:
            return value, err
        # refine every interval whose error exceeds its width share of tol
        bad = errs > tol * (b - a) / total_width
        mid = 0.5 * (a[bad] + b[bad])
        new_a = np.concatenate([a[~bad], a[bad], mid])
        new_b = np.concatenate([b[~bad], mid, b[bad]])
        new_vals, new_errs = _gk15_batch(fv, np.concatenate([a[bad], mid]), np.concatenate([mid, b[bad]]))
        vals = np.concatenate([vals[~bad], new_vals])
        errs = np.concatenate([errs[~bad], new_errs])
        a, b = new_a, new_b
        value = math.fsum(vals.tolist())
        err = math.fsum(errs.tolist())
    if err <= max(cfg.abs_tol, cfg.rel_tol * abs(value)):
        return value, err
    raise QuadratureNonConvergence(value, err, cfg.max_depth)


def integrate_separable(factors, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """Product of 1D integrals of the given factors; empty sequence gives 1.

    Each factor is (f, lo, hi) or (f, lo, hi, breakpoints). Realizes every
    multidimensional integral of a product integrand as a product of 1D
    integrals.
    """
    result = 1.0
    for factor in factors:
        if len(factor) == 3:
            f, lo, hi = factor
            bp = None
        else:
            f, lo, hi, bp = factor
        value, _ = integrate_1d(f, lo, hi, cfg, breakpoints=bp)
        result *= value
    return result


_BLOCK = 2048


def _axis_grid(lo: float, hi: float, grid_per_unit: int):
    span = hi - lo
    n = max(2, int(round(span * grid_per_unit)) + 1)
    xs = np.linspace(lo, hi, n)
    h = span / (n - 1)
    w = np.full(n, h)
    w[0] *= 0.5
    w[-1] *= 0.5
    return xs, w


def _eval_block(func, xs, ys):
    out = np.asarray(func(xs[:, None], ys[None, :]), dtype=np.float64)
    return np.broadcast_to(out, (xs.size, ys.size))


def l2_distance_2d(f, g, box: Box2D, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """sqrt of the trapezoid-sampled integral of (f - g)^2 over the box.

    f and g are called with broadcastable arrays of shape (nx, 1) and
    (1, ny); evaluation is blocked so memory stays bounded and the partial
    sums are accumulated with exact summation for reproducibility.
    """
    xs, wx = _axis_grid(box.x_lo, box.x_hi, cfg.grid_per_unit)
    ys, wy = _axis_grid(box.y_lo, box.y_hi, cfg.grid_per_unit)
    partials = []
    for i0 in range(0, xs.size, _BLOCK):
        xi = xs[i0 : i0 + _BLOCK]
        for j0 in range(0, ys.size, _BLOCK):
            yj = ys[j0 : j0 + _BLOCK]
            d = _eval_block(f, xi, yj) - _eval_block(g, xi, yj)
            if not np.isfinite(d).all():
                raise ValueError("non-finite integrand value in l2_distance_2d")
            partials.append(backend.trapezoid_sq_sum(d, wx[i0 : i0 + _BLOCK], wy[j0 : j0 + _BLOCK]))
    return math.sqrt(max(math.fsum(partials), 0.0))
