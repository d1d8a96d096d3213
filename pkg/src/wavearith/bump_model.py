"""Bump-kernel arithmetic: numbers as disjoint bump combs.

Naturals are combs of unit bumps, rationals scale the amplitudes, products
are rectangular grids of 2D product bumps (integrated via separability),
and powers are b-dimensional tensors. The nine algebraic identity checks
evaluate both sides of each law through these representations.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import backend
from .kernels import default_bump
from .quadrature import ApproxConfig, DEFAULT_CONFIG, integrate_1d, integrate_separable

__all__ = [
    "AXIOM_IDS",
    "AXIOM_TOL",
    "BumpComb",
    "GridArrangement",
    "check_axiom",
    "mul_value",
    "nat_value",
    "pow_value",
    "rational_value",
]

# operand magnitude cap: a comb needs |numerator| bumps, so huge exact
# rationals (e.g. Fraction(0.1)) would be unbuildable
_MAX_NUMERATOR = 1000
_MAX_DENOMINATOR = 1000

AXIOM_TOL = 1e-8


def _as_fraction(value) -> Fraction:
    try:
        frac = Fraction(value)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"operand {value!r} is not rational") from exc
    if abs(frac.numerator) > _MAX_NUMERATOR or frac.denominator > _MAX_DENOMINATOR:
        raise ValueError(
            f"operand {value!r} reduces to {frac}; numerator/denominator exceed "
            f"the comb construction cap ({_MAX_NUMERATOR}/{_MAX_DENOMINATOR})"
        )
    return frac


@dataclass(frozen=True)
class BumpComb:
    """A finite sum of disjointly supported shifted bumps.

    Each term (k, r) contributes r * phi(x - (k - 1)); the represented
    value is the sum of the amplitudes.
    """

    terms: tuple = ()

    def __post_init__(self):
        norm = []
        seen = set()
        for shift, amp in self.terms:
            if not isinstance(shift, int) or isinstance(shift, bool):
                raise ValueError("shifts must be integers")
            if shift in seen:
                raise ValueError(f"duplicate shift {shift}: supports must be disjoint")
            seen.add(shift)
            norm.append((shift, Fraction(amp)))
        norm.sort(key=lambda t: t[0])
        object.__setattr__(self, "terms", tuple(norm))

    @classmethod
    def natural(cls, n: int) -> "BumpComb":
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError("natural comb requires an integer n >= 0")
        return cls(tuple((k, Fraction(1)) for k in range(1, n + 1)))

    @classmethod
    def rational(cls, m: int, n: int) -> "BumpComb":
        if not isinstance(m, int) or not isinstance(n, int) or isinstance(m, bool) or isinstance(n, bool):
            raise ValueError("rational comb requires integer m, n")
        if n < 1:
            raise ValueError("denominator must be >= 1")
        if abs(m) > 100_000:
            raise ValueError(f"|m| = {abs(m)} bumps is beyond the comb construction cap")
        sign = 1 if m >= 0 else -1
        amp = Fraction(sign, n)
        return cls(tuple((k, amp) for k in range(1, abs(m) + 1)))

    @classmethod
    def from_value(cls, r) -> "BumpComb":
        frac = _as_fraction(r)
        return cls.rational(frac.numerator, frac.denominator)

    @property
    def value(self) -> Fraction:
        return sum((amp for _, amp in self.terms), Fraction(0))

    @property
    def centers(self) -> np.ndarray:
        return np.array([float(k - 1) for k, _ in self.terms])

    @property
    def breakpoints(self) -> tuple:
        edges = set()
        for k, _ in self.terms:
            edges.add(k - 1.5)
            edges.add(k - 0.5)
        return tuple(sorted(edges))

    @property
    def support(self) -> tuple:
        if not self.terms:
            return (0.0, 0.0)
        shifts = [k for k, _ in self.terms]
        return (min(shifts) - 1.5, max(shifts) - 0.5)

    def __call__(self, x):
        xs = np.asarray(x, dtype=np.float64)
        amps = np.array([float(amp) for _, amp in self.terms])
        out = backend.comb_eval(xs, self.centers, amps, 1.0 / default_bump().normalization_constant)
        if np.ndim(x) == 0:
            return float(out)
        return out

    def scaled(self, c) -> "BumpComb":
        c = Fraction(c)
        return BumpComb(tuple((k, amp * c) for k, amp in self.terms))

    def integral(self, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
        if not self.terms:
            return 0.0
        lo, hi = self.support
        value, _ = integrate_1d(self, lo, hi, cfg, breakpoints=self.breakpoints)
        return value

    def as_factor(self):
        lo, hi = self.support
        return (self, lo, hi, self.breakpoints)


def _concat(first: BumpComb, second: BumpComb) -> BumpComb:
    """Disjoint union: relocate the second comb past the end of the first."""
    if not first.terms:
        return second
    if not second.terms:
        return first
    offset = max(k for k, _ in first.terms) - min(k for k, _ in second.terms) + 1
    moved = tuple((k + offset, amp) for k, amp in second.terms)
    return BumpComb(first.terms + moved)


@dataclass(frozen=True)
class GridArrangement:
    """Rectangular grid of product bumps: value = amplitude * prod(dims)."""

    dims: tuple
    amplitude: Fraction = Fraction(1)
    axis_spacings: tuple = field(default=())

    def __post_init__(self):
        dims = tuple(self.dims)
        if not dims or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims):
            raise ValueError("dims must be positive integers")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitude", Fraction(self.amplitude))
        spacings = tuple(float(s) for s in self.axis_spacings) or (1.0,) * len(dims)
        if len(spacings) != len(dims):
            raise ValueError("axis_spacings length must match dims")
        if not all(s > 0 for s in spacings):
            raise ValueError("axis_spacings must be positive")
        object.__setattr__(self, "axis_spacings", spacings)

    @property
    def value(self) -> Fraction:
        return self.amplitude * math.prod(self.dims)

    def factors(self) -> list:
        """Per-axis combs whose product of integrals is the grid integral."""
        if any(s != 1.0 for s in self.axis_spacings):
            raise ValueError("only unit spacings factor into disjoint combs")
        combs = [BumpComb.natural(d) for d in self.dims]
        combs[0] = combs[0].scaled(self.amplitude)
        return combs

    def integral(self, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
        return integrate_separable([c.as_factor() for c in self.factors()], cfg)


def nat_value(n: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """Integral of the n-term unit comb; exactly 0.0 for n = 0."""
    comb = BumpComb.natural(n)
    return comb.integral(cfg)


def rational_value(m: int, n: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """Integral of the |m|-term comb with amplitude sgn(m)/n."""
    comb = BumpComb.rational(m, n)
    return comb.integral(cfg)


def mul_value(a: int, b: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """Integral of the a x b grid of product bumps, via separability."""
    _require_positive_int("a", a)
    _require_positive_int("b", b)
    return GridArrangement((a, b)).integral(cfg)


def pow_value(a: int, b: int, cfg: ApproxConfig = DEFAULT_CONFIG) -> float:
    """Integral of the b-dimensional [1, a]^b tensor: (comb integral)^b."""
    _require_positive_int("a", a)
    _require_positive_int("b", b)
    if a**b >= 2**53:
        raise ValueError(f"a^b = {a}^{b} exceeds the double-precision guard 2^53")
    base = BumpComb.natural(a).integral(cfg)
    return base**b


def _require_positive_int(name: str, v) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise ValueError(f"{name} must be a positive integer, got {v!r}")


def _as_positive_int(value) -> int:
    frac = _as_fraction(value)
    if frac.denominator != 1 or frac.numerator < 1:
        raise ValueError(
            f"operand {value!r} is not a positive integer; grid multiplication "
            "is defined for positive integers only"
        )
    return frac.numerator


AXIOM_IDS = (
    "add_comm",
    "add_assoc",
    "mul_comm",
    "mul_assoc",
    "distributive",
    "neutral_add",
    "neutral_mul",
    "linearity",
    "inversion",
)

_ARITY = {
    "add_comm": 2,
    "add_assoc": 3,
    "mul_comm": 2,
    "mul_assoc": 3,
    "distributive": 3,
    "neutral_add": 1,
    "neutral_mul": 1,
    "linearity": 2,
    "inversion": 1,
}


def check_axiom(axiom_id: str, operands, cfg: ApproxConfig = DEFAULT_CONFIG):
    """Evaluate both sides of the named identity; returns (holds, defect).

    Addition is realized as integration of disjoint comb unions, scaling
    acts on amplitudes, and multiplication as separable grid integration
    (positive integer operands only; the bump model defines no product of
    two non-integer rationals). holds is defect < 1e-8.
    """
    if axiom_id not in _ARITY:
        raise ValueError(f"unknown axiom id: {axiom_id!r}")
    operands = tuple(operands)
    if len(operands) != _ARITY[axiom_id]:
        raise ValueError(
            f"axiom {axiom_id} takes {_ARITY[axiom_id]} operands, got {len(operands)}"
        )

    def comb(r) -> BumpComb:
        return BumpComb.from_value(r)

    def integ(c: BumpComb) -> float:
        return c.integral(cfg)

    def sep(*combs) -> float:
        return integrate_separable([c.as_factor() for c in combs], cfg)

    if axiom_id == "add_comm":
        r1, r2 = map(_as_fraction, operands)
        lhs = integ(_concat(comb(r1), comb(r2)))
        rhs = integ(_concat(comb(r2), comb(r1)))
    elif axiom_id == "add_assoc":
        r1, r2, r3 = map(_as_fraction, operands)
        lhs = integ(_concat(comb(r1), comb(r2))) + integ(comb(r3))
        rhs = integ(comb(r1)) + integ(_concat(comb(r2), comb(r3)))
    elif axiom_id == "mul_comm":
        a, b = map(_as_positive_int, operands)
        lhs = sep(comb(a), comb(b))
        rhs = sep(comb(b), comb(a))
    elif axiom_id == "mul_assoc":
        a, b, c = map(_as_positive_int, operands)
        lhs = (integ(comb(a)) * integ(comb(b))) * integ(comb(c))
        rhs = integ(comb(a)) * (integ(comb(b)) * integ(comb(c)))
    elif axiom_id == "distributive":
        a, b, c = map(_as_positive_int, operands)
        lhs = sep(comb(a), _concat(comb(b), comb(c)))
        rhs = sep(comb(a), comb(b)) + sep(comb(a), comb(c))
    elif axiom_id == "neutral_add":
        (r,) = map(_as_fraction, operands)
        lhs = integ(_concat(comb(r), BumpComb()))
        rhs = integ(comb(r))
    elif axiom_id == "neutral_mul":
        (a,) = map(_as_positive_int, operands)
        lhs = sep(comb(a), comb(1))
        rhs = integ(comb(a))
    elif axiom_id == "linearity":
        c, r = map(_as_fraction, operands)
        lhs = integ(comb(r).scaled(c))
        rhs = float(c) * integ(comb(r))
    else:  # inversion
        (r,) = map(_as_fraction, operands)
        lhs = integ(comb(-r))
        rhs = -integ(comb(r))

    defect = abs(lhs - rhs)
    return defect < AXIOM_TOL, defect
