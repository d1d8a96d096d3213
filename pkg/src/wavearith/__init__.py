"""Wave arithmetic: numbers as integrals of bump and periodic kernels.

Numbers are represented constructively: a natural number as a comb of n
disjoint unit-mass bumps, a rational as amplitude-scaled bumps, a real as
the antiderivative of a periodic kernel. Arithmetic becomes geometry:
addition concatenates combs, multiplication integrates separable 2D grids,
and compositeness shows up as exact separability of a bump arrangement.
"""

from .backend import USING_NATIVE, get_backend
from .bump_model import (
    AXIOM_IDS,
    BumpComb,
    GridArrangement,
    check_axiom,
    mul_value,
    nat_value,
    pow_value,
    rational_value,
)
from .discrete_model import (
    DiscretizationParams,
    discrete_general,
    discrete_standard,
    series_rational,
)
from .kernel_opt import OptimizationProblem, OptimizeResult, optimize
from .kernels import (
    BumpKernel,
    FourierKernel,
    antiderivative,
    default_bump,
    eval_bump,
    eval_fourier,
    eval_shifted_scaled,
    make_fourier,
)
from .periodic_model import (
    AnalyticValue,
    analytic_product,
    analytic_value,
    deviation_l2,
    deviation_sup,
)
from .primality import (
    DEFAULT_EPSILON,
    BumpArrangement2D,
    FactorizationResult,
    ResidualReport,
    RigidityVerdict,
    TensorGrid2D,
    analytic_divides,
    analytic_factorization,
    build_arrangement,
    flatten,
    flattening_residual_literal,
    grid_function,
    residual_curve,
    residual_report,
    rigidity_scan,
    separability_defect,
)
from .quadrature import (
    DEFAULT_CONFIG,
    ApproxConfig,
    Box2D,
    QuadratureNonConvergence,
    integrate_1d,
    integrate_separable,
    l2_distance_2d,
)

__version__ = "0.1.0"

__all__ = [
    "USING_NATIVE",
    "get_backend",
    "AXIOM_IDS",
    "BumpComb",
    "GridArrangement",
    "check_axiom",
    "mul_value",
    "nat_value",
    "pow_value",
    "rational_value",
    "DiscretizationParams",
    "discrete_general",
    "discrete_standard",
    "series_rational",
    "OptimizationProblem",
    "OptimizeResult",
    "optimize",
    "BumpKernel",
    "FourierKernel",
    "antiderivative",
    "default_bump",
    "eval_bump",
    "eval_fourier",
    "eval_shifted_scaled",
    "make_fourier",
    "AnalyticValue",
    "analytic_product",
    "analytic_value",
    "deviation_l2",
    "deviation_sup",
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
    "DEFAULT_CONFIG",
    "ApproxConfig",
    "Box2D",
    "QuadratureNonConvergence",
    "integrate_1d",
    "integrate_separable",
    "l2_distance_2d",
    "__version__",
]
