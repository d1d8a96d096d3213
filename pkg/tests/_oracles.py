"""Frozen reference values and independent reference routines.

The constants below were computed once at 50-digit precision with
tanh-sinh quadrature applied directly to the raw integrand definitions,
then rounded to the nearest double and frozen. Tests compare the
package's double-precision pipeline against these anchors; nothing here
calls back into the package's quadrature or summation code.
"""

import math

import numpy as np

# integral of exp(-1/(1 - 4 x^2)) over [-1/2, 1/2]
Z = 0.2219969080840397

# peak of the normalized bump: exp(-1) / Z
PHI0 = 1.6571376797382102

# integral of the squared normalized bump over one cell
I2 = 1.350233626019395

# literal flattening residuals for selected (a, b) grids
E_LIT_11 = 0.6876752277158809
E_LIT_23 = 5.936580694082243
E_LIT_32 = 3.307383417295446

# L2 norm of two disjoint unit product bumps: sqrt(2) * I2
SQRT2_I2 = 1.9095187062888301

INV_2PI = 0.15915494309189535

# antiderivative of the standard kernel at 1.25: 1.25 - 1/(2 pi)
V_1_25 = 1.0908450569081047

# minimal l2 deviation on [0, 1] with a1 pinned to -1: 1/(2 pi sqrt(2))
L2_DEV_PINNED = 0.11253953951963826

# one-fragment series value for 1/3: 1/3 - sin(2 pi / 3)/(2 pi)
FRAG_1_3 = 0.19550110947788532


def closed_form_flattening(a: int, b: int) -> float:
    """Exact literal flattening residual of a full a x b grid."""
    return math.sqrt(a * I2 * b * (I2 - 2.0 * b + b * b))


def trial_division_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(math.isqrt(n)) + 1))


def trial_division_factors(n: int) -> tuple:
    """Prime multiset of n in ascending order; empty for n = 1."""
    out = []
    d, m = 2, n
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def gauss_legendre_integral(f, lo: float, hi: float, order: int = 40, pieces: int = 8) -> float:
    """Composite fixed-order Gauss-Legendre rule; no adaptivity, no shared code."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    total = 0.0
    edges = np.linspace(lo, hi, pieces + 1)
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        xs = 0.5 * (a + b) + half * nodes
        total += half * float(np.dot(weights, f(xs)))
    return total


def trapezoid_integral(f, lo: float, hi: float, n: int = 20001) -> float:
    xs = np.linspace(lo, hi, n)
    return float(np.trapezoid(f(xs), xs))


def brute_force_defect(arrangement, samples_per_unit: int = 256) -> float:
    """Sampled separability defect, written against the definition.

    Trapezoid-samples F - (marginal_x * marginal_y) / n on the support box
    with plain numpy accumulation. Independent of the package's factorized
    fast path and of its 2D distance routine.
    """
    box = arrangement.box
    nx = int(round((box.x_hi - box.x_lo) * samples_per_unit)) + 1
    ny = int(round((box.y_hi - box.y_lo) * samples_per_unit)) + 1
    xs = np.linspace(box.x_lo, box.x_hi, nx)
    ys = np.linspace(box.y_lo, box.y_hi, ny)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    mx = arrangement.marginal_x()
    my = arrangement.marginal_y()
    d = arrangement(X, Y) - mx(X) * my(Y) / arrangement.n
    wx = np.full(nx, (box.x_hi - box.x_lo) / (nx - 1))
    wx[0] *= 0.5
    wx[-1] *= 0.5
    wy = np.full(ny, (box.y_hi - box.y_lo) / (ny - 1))
    wy[0] *= 0.5
    wy[-1] *= 0.5
    return math.sqrt(max(float(wx @ (d * d) @ wy), 0.0))
