"""Analytic primality and factorization diagnostics on tensor bump grids.

Two residuals are implemented and reported side by side:

* the literal flattening residual, the L2 distance between a full a x b
  grid and its y-flattened marginal, which is strictly positive even for
  perfect grids (closed form sqrt(a*I2*b*(I2 - 2b + b^2)) with I2 the
  squared bump norm);
* the separability defect, the L2 distance between an n-bump row-major
  arrangement with c columns and the normalized product of its marginals,
  which is zero exactly when the grid is full (c divides n).

The separability defect is the classification criterion. Because every
bump sits in its own grid cell, the trapezoid-sampled defect factors into
per-cell integrals times an exact integer form in (n, c); the production
path evaluates that factorization (the sampled brute-force computation
agrees to rounding and lives in the tests).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .bump_model import BumpComb
from .kernels import eval_bump
from .quadrature import ApproxConfig, Box2D, DEFAULT_CONFIG, integrate_separable, l2_distance_2d

__all__ = [
    "DEFAULT_EPSILON",
    "BumpArrangement2D",
    "FactorizationResult",
    "ResidualReport",
    "RigidityVerdict",
    "TensorGrid2D",
    "analytic_divides",
    "analytic_factorization",
    "build_arrangement",
    "flatten",
    "flattening_residual_literal",
    "grid_function",
    "residual_curve",
    "residual_report",
    "rigidity_scan",
    "separability_defect",
]

DEFAULT_EPSILON = 1e-4

_PRIME = "analytic_prime"
_COMPOSITE = "analytic_composite"


def _require_int(name: str, v, minimum: int) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {v!r}")
    return v


class TensorGrid2D:
    """F_{a,b}(x, y): the full a x b grid of 2D product bumps."""

    def __init__(self, a: int, b: int):
        self.a = _require_int("a", a, 1)
        self.b = _require_int("b", b, 1)
        self.comb_x = BumpComb.natural(a)
        self.comb_y = BumpComb.natural(b)
        self.box = Box2D(-0.5, a - 0.5, -0.5, b - 0.5)

    def __call__(self, x, y):
        out = self.comb_x(np.asarray(x, dtype=np.float64)) * self.comb_y(np.asarray(y, dtype=np.float64))
        if np.ndim(x) == 0 and np.ndim(y) == 0:
            return float(out)
        return out

    def integral(self, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
        return integrate_separable([self.comb_x.as_factor(), self.comb_y.as_factor()], cfg)


def grid_function(a: int, b: int) -> TensorGrid2D:
    """Evaluatable F_{a,b}; support is [-1/2, a-1/2] x [-1/2, b-1/2]."""
    return TensorGrid2D(a, b)


def flatten(a: int, b: int) -> BumpComb:
    """The y-flattened grid: a comb of a bumps with amplitude b (integral ab)."""
    _require_int("a", a, 1)
    _require_int("b", b, 1)
    return BumpComb.natural(a).scaled(b)


def flattening_residual_literal(a: int, b: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """L2 distance over the grid support box between F_{a,b} and its flattening.

    The flattened comb is treated as constant in y. This is the literal
    residual; it is strictly positive even when the grid is perfect.
    """
    F = grid_function(a, b)
    G = flatten(a, b)
    return l2_distance_2d(F, lambda X, Y: G(X), F.box, cfg)


class BumpArrangement2D:
    """n unit bumps placed row-major on a c-column grid (partial last row allowed).

    Bump t (0-indexed) is centered at (t mod c, t // c); each bump occupies
    its own unit cell, so the arrangement's marginals are combs weighted by
    the column and row occupancies.
    """

    def __init__(self, n: int, c: int):
        self.n = _require_int("n", n, 1)
        self.c = _require_int("c", c, 2)
        if c > n:
            raise ValueError("build_arrangement requires c <= n")
        self.r = -(-n // c)
        q, rem = divmod(n, c)
        self.colsums = tuple(q + 1 if i < rem else q for i in range(c))
        self.rowsums = tuple([c] * q + ([rem] if rem else []))
        self.box = Box2D(-0.5, c - 0.5, -0.5, self.r - 0.5)
        self._col_combs = tuple(BumpComb.natural(cs) for cs in self.colsums)

    def __call__(self, x, y):
        X = np.asarray(x, dtype=np.float64)
        Y = np.asarray(y, dtype=np.float64)
        out = np.zeros(np.broadcast_shapes(X.shape, Y.shape))
        for i, comb in enumerate(self._col_combs):
            if comb.terms:
                out = out + eval_bump(X - i) * comb(Y)
        if np.ndim(x) == 0 and np.ndim(y) == 0:
            return float(out)
        return out

    def marginal_x(self) -> BumpComb:
        """Integral over y: comb weighted by column occupancy."""
        return BumpComb(tuple((i + 1, Fraction(cs)) for i, cs in enumerate(self.colsums) if cs))

    def marginal_y(self) -> BumpComb:
        """Integral over x: comb weighted by row occupancy."""
        return BumpComb(tuple((j + 1, Fraction(rs)) for j, rs in enumerate(self.rowsums) if rs))

    def integral(self, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
        parts = []
        for i, comb in enumerate(self._col_combs):
            if not comb.terms:
                continue
            cell = ((lambda x, i=i: eval_bump(x - i)), i - 0.5, i + 0.5)
            parts.append(integrate_separable([cell, comb.as_factor()], cfg))
        return math.fsum(parts)


def build_arrangement(n: int, c: int) -> BumpArrangement2D:
    """Row-major placement of n unit bumps on c columns."""
    return BumpArrangement2D(n, c)


@lru_cache(maxsize=32)
def _cell_sq_trapezoid(grid_per_unit: int) -> float:
    """Trapezoid sum of phi^2 over one unit cell at the config's density."""
    g = grid_per_unit
    xs = np.linspace(-0.5, 0.5, g + 1)
    w = np.full(g + 1, 1.0 / g)
    w[0] *= 0.5
    w[-1] *= 0.5
    vals = eval_bump(xs)
    return float(w @ (vals * vals))


def _defect_numerator(n: int, c: int) -> int:
    """Exact integer n^3 - 2n*S_cr + S_c*S_r for the row-major arrangement.

    S_c and S_r are the sums of squared column/row occupancies and S_cr the
    sum over bumps of colsum*rowsum. The quantity is zero iff c divides n.
    """
    q, rem = divmod(n, c)
    s_c = rem * (q + 1) ** 2 + (c - rem) * q * q
    s_r = q * c * c + (rem * rem if rem else 0)
    s_cr = q * c * n + rem * rem * (q + 1)
    return n**3 - 2 * n * s_cr + s_c * s_r


def separability_defect(n: int, c: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """L2 distance between the (n, c) arrangement and its rank-1 marginal product.

    Computes ||H - (M_x x M_y)/n|| over the arrangement box on the config's
    trapezoid grid. Disjoint cell supports make the sampled norm factor
    exactly into the per-cell phi^2 trapezoid sum times an integer form, so
    the value is computed from that factorization; it is exactly 0.0 for
    full grids and strictly positive otherwise.
    """
    _require_int("n", n, 1)
    _require_int("c", c, 2)
    if c > (n + 1) // 2:
        raise ValueError(f"c must satisfy 2 <= c <= ceil(n/2), got c={c} for n={n}")
    t2 = _cell_sq_trapezoid(cfg.grid_per_unit)
    num = _defect_numerator(n, c)
    return t2 * math.sqrt(num) / n


@dataclass(frozen=True)
class ResidualReport:
    """Per-(n, c) residuals; literal_flattening only exists for full grids."""

    n: int
    c: int
    r: int
    defect: float
    literal_flattening: float | None


def residual_report(n: int, c: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> ResidualReport:
    defect = separability_defect(n, c, cfg)
    r = -(-n // c)
    literal = None
    if c * r == n:
        literal = flattening_residual_literal(c, n // c, cfg)
    return ResidualReport(n=n, c=c, r=r, defect=defect, literal_flattening=literal)


@dataclass(frozen=True)
class RigidityVerdict:
    """Minimal separability defect over all column counts, classified."""

    n: int
    min_defect: float
    best_c: int | None
    epsilon: float
    classification: str


def rigidity_scan(n: int, epsilon: float = DEFAULT_EPSILON, cfg: ApproxConfig = DEFAULT_CONFIG) -> RigidityVerdict:
    """Scan c in [2, n//2]; composite iff the minimal defect is below epsilon.

    n in {2, 3} has no candidate grid at all and is prime by definition
    (min_defect is the +inf sentinel, best_c is None). Ties in the minimal
    defect resolve to the smallest c.
    """
    _require_int("n", n, 2)
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    min_defect = math.inf
    best_c = None
    for c in range(2, n // 2 + 1):
        d = separability_defect(n, c, cfg)
        if d < min_defect:
            min_defect = d
            best_c = c
    classification = _COMPOSITE if min_defect < epsilon else _PRIME
    return RigidityVerdict(n=n, min_defect=min_defect, best_c=best_c, epsilon=epsilon, classification=classification)


def residual_curve(n_lo: int, n_hi: int, epsilon: float = DEFAULT_EPSILON, cfg: ApproxConfig = DEFAULT_CONFIG):
    """Verdicts for every n in [n_lo, n_hi], ascending."""
    _require_int("n_lo", n_lo, 2)
    _require_int("n_hi", n_hi, n_lo)
    return [rigidity_scan(n, epsilon, cfg) for n in range(n_lo, n_hi + 1)]


def analytic_divides(a: int, n: int) -> bool:
    """True iff a full a x b grid of n bumps exists (a * b = n)."""
    _require_int("a", a, 1)
    _require_int("n", n, 1)
    if a == 1 or a == n:
        return True
    if a > n // 2:
        return False
    return _defect_numerator(n, a) == 0


@dataclass(frozen=True)
class FactorizationResult:
    """Prime multiset of n plus the separable-integral verification defect."""

    factors: tuple
    verification_defect: float


def analytic_factorization(n: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> FactorizationResult:
    """Recursively split off the smallest zero-defect column count.

    The smallest c with a full-grid (zero-defect) arrangement is the
    smallest nontrivial divisor, hence prime; recursing on n // c yields
    the prime multiset. The result is verified by integrating the separable
    product of the per-factor combs and comparing with n (1 is the empty
    product).
    """
    _require_int("n", n, 1)
    factors = []
    m = n
    while m > 1:
        found = None
        for c in range(2, m // 2 + 1):
            if _defect_numerator(m, c) == 0:
                found = c
                break
        if found is None:
            factors.append(m)
            break
        factors.append(found)
        m //= found
    product = integrate_separable([BumpComb.natural(p).as_factor() for p in factors], cfg)
    return FactorizationResult(factors=tuple(factors), verification_defect=abs(product - n))
