"""Derivative-free kernel parameter optimization.

Minimizes a deviation objective (sup or L2 against the identity map) over a
kernel family: a coarse grid sweep over the feasible box spends about 60%
of the evaluation budget, then coordinate descent with step halving refines
the best probe. Deterministic for a fixed problem and budget.
"""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .kernels import FourierKernel
from .periodic_model import deviation_l2, deviation_sup

__all__ = ["OptimizationProblem", "OptimizeResult", "optimize"]

_FAMILIES = ("alpha", "alpha_beta", "explicit")
_OBJECTIVES = ("sup_deviation", "l2_deviation")

# feasible boxes: alpha in [0, 1], beta in [-1, 1], explicit coeffs in [-2, 2]
_ALPHA_BOX = (0.0, 1.0)
_BETA_BOX = (-1.0, 1.0)
_EXPLICIT_BOX = (-2.0, 2.0)

_STEP_FLOOR = 1e-6


@dataclass(frozen=True)
class OptimizationProblem:
    """What to optimize: family, interval, objective, budget, pins."""

    family: str
    interval: tuple = (0.0, 1.0)
    objective: str = "sup_deviation"
    budget: int = 200
    pins: dict = field(default_factory=dict)
    explicit_n: int = 0
    samples_per_unit: int = 10000

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {_FAMILIES}")
        if self.objective not in _OBJECTIVES:
            raise ValueError(f"unknown objective {self.objective!r}; expected one of {_OBJECTIVES}")
        lo, hi = (float(self.interval[0]), float(self.interval[1]))
        if not lo < hi:
            raise ValueError("interval must satisfy lo < hi")
        object.__setattr__(self, "interval", (lo, hi))
        if not (isinstance(self.budget, int) and not isinstance(self.budget, bool) and self.budget >= 10):
            raise ValueError("budget must be an integer >= 10")
        if self.family == "explicit":
            if not (isinstance(self.explicit_n, int) and self.explicit_n >= 1):
                raise ValueError("explicit family requires explicit_n >= 1")
        if not (isinstance(self.samples_per_unit, int) and self.samples_per_unit >= 1):
            raise ValueError("samples_per_unit must be a positive integer")
        pins = {str(k): float(v) for k, v in dict(self.pins).items()}
        if not all(math.isfinite(v) for v in pins.values()):
            raise ValueError("pinned coefficients must be finite")
        valid = set(self._coefficient_names())
        bad = set(pins) - valid
        if bad:
            raise ValueError(f"pins {sorted(bad)} are not coefficients of family {self.family!r}")
        object.__setattr__(self, "pins", pins)

    def _coefficient_names(self):
        if self.family == "alpha":
            return ["a1"]
        if self.family == "alpha_beta":
            return ["a1", "b2"]
        n = self.explicit_n if self.explicit_n else 0
        return [f"a{k}" for k in range(1, n + 1)] + [f"b{k}" for k in range(1, n + 1)]

    @classmethod
    def from_json(cls, data: dict) -> "OptimizationProblem":
        known = {"family", "interval", "objective", "budget", "pins", "explicit_n", "samples_per_unit"}
        bad = set(data) - known
        if bad:
            raise ValueError(f"unknown problem keys: {sorted(bad)}")
        kwargs = dict(data)
        if "interval" in kwargs:
            kwargs["interval"] = tuple(kwargs["interval"])
        return cls(**kwargs)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "interval": list(self.interval),
            "objective": self.objective,
            "budget": self.budget,
            "pins": dict(self.pins),
            "explicit_n": self.explicit_n,
            "samples_per_unit": self.samples_per_unit,
        }


@dataclass(frozen=True)
class OptimizeResult:
    kernel: FourierKernel
    params: dict
    objective_value: float
    evaluations_used: int
    converged: bool


def _parameter_space(problem: OptimizationProblem):
    """(names, boxes) of the free parameters, after translating pins.

    Families alpha and alpha_beta are parameterized by alpha = -a1 and
    beta = b2; explicit uses the coefficients directly. a0 is fixed at 1.
    """
    pins = problem.pins
    if problem.family == "alpha":
        fixed = {}
        free = [("alpha", _ALPHA_BOX)]
        if "a1" in pins:
            fixed["alpha"] = -pins["a1"]
            free = []
        return free, fixed
    if problem.family == "alpha_beta":
        fixed = {}
        free = []
        if "a1" in pins:
            fixed["alpha"] = -pins["a1"]
        else:
            free.append(("alpha", _ALPHA_BOX))
        if "b2" in pins:
            fixed["beta"] = pins["b2"]
        else:
            free.append(("beta", _BETA_BOX))
        return free, fixed
    fixed = {}
    free = []
    for name in problem._coefficient_names():
        if name in pins:
            fixed[name] = pins[name]
        else:
            free.append((name, _EXPLICIT_BOX))
    return free, fixed


def _build_kernel(problem: OptimizationProblem, params: dict) -> FourierKernel:
    if problem.family == "alpha":
        return FourierKernel.alpha(params["alpha"])
    if problem.family == "alpha_beta":
        return FourierKernel.alpha_beta(params["alpha"], params["beta"])
    n = problem.explicit_n
    a = [params[f"a{k}"] for k in range(1, n + 1)]
    b = [params[f"b{k}"] for k in range(1, n + 1)]
    return FourierKernel.explicit(1.0, a, b)


def _objective_fn(problem: OptimizationProblem):
    lo, hi = problem.interval
    samples = max(100, round((hi - lo) * problem.samples_per_unit))
    measure = deviation_sup if problem.objective == "sup_deviation" else deviation_l2
    def objective(params: dict) -> float:
        return measure(_build_kernel(problem, params), (lo, hi), samples)
    return objective


def optimize(problem: OptimizationProblem) -> OptimizeResult:
    """Coarse grid sweep then coordinate descent over the free parameters.

    The returned objective_value is the objective actually evaluated at the
    returned params. If the budget runs out before the descent steps shrink
    below 1e-6, the best point so far is returned flagged non-converged.
    """
    free, fixed = _parameter_space(problem)
    objective = _objective_fn(problem)
    evals = 0

    def run(assignment: dict) -> float:
        nonlocal evals
        evals += 1
        return objective({**fixed, **assignment})

    if not free:
        value = run({})
        params = dict(fixed)
        return OptimizeResult(_build_kernel(problem, params), params, value, evals, True)

    names = [name for name, _ in free]
    boxes = [box for _, box in free]
    d = len(free)
    grid_budget = max(1, int(0.6 * problem.budget))
    g = max(2, int(grid_budget ** (1.0 / d)))
    axes = [np.linspace(lo, hi, g) for lo, hi in boxes]

    best_point = None
    best_value = math.inf
    exhausted = False
    for combo in itertools.product(*axes):
        if evals >= problem.budget:
            exhausted = True
            break
        value = run(dict(zip(names, combo)))
        if value < best_value:
            best_value = value
            best_point = [float(v) for v in combo]

    steps = [(hi - lo) / (g - 1) for lo, hi in boxes]
    while not exhausted and max(steps) >= _STEP_FLOOR:
        improved = False
        for i in range(d):
            lo, hi = boxes[i]
            for sign in (1.0, -1.0):
                cand = min(hi, max(lo, best_point[i] + sign * steps[i]))
                if cand == best_point[i]:
                    continue
                if evals >= problem.budget:
                    exhausted = True
                    break
                trial = list(best_point)
                trial[i] = cand
                value = run(dict(zip(names, trial)))
                if value < best_value:
                    best_value = value
                    best_point = trial
                    improved = True
            if exhausted:
                break
        if not improved and not exhausted:
            steps = [s * 0.5 for s in steps]

    params = {**fixed, **dict(zip(names, best_point))}
    converged = max(steps) < _STEP_FLOOR
    return OptimizeResult(_build_kernel(problem, params), params, best_value, evals, converged)
