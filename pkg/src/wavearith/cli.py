"""Command-line front-end.

Verbs: eval, product, pow, rational, discrete, residual-scan, factor,
optimize, axioms. Output is text (12 significant digits), a JSON envelope
{"verb", "inputs", "result", "config"}, or CSV (residual-scan only). Exit
status: 0 success, 1 domain errors (one-line reason on stderr), 2 usage
errors. All verbs are deterministic for fixed inputs: nothing time- or
locale-dependent is ever written to stdout.

Config resolution order: built-in defaults, then the JSON file named by the
WAVEARITH_CONFIG environment variable, then --config PATH, then individual
tolerance flags. Config files accept rel_tol, abs_tol, grid_per_unit,
max_depth, and epsilon (the residual-scan threshold).
"""

import argparse
import dataclasses
import json
import math
import os
import random
import sys
from fractions import Fraction

from .bump_model import _ARITY, AXIOM_IDS, check_axiom, mul_value, pow_value, rational_value
from .discrete_model import (
    DiscretizationParams,
    discrete_general,
    discrete_standard,
    series_rational,
)
from .kernel_opt import OptimizationProblem, optimize
from .kernels import FourierKernel
from .periodic_model import analytic_product, analytic_value
from .primality import (
    DEFAULT_EPSILON,
    analytic_factorization,
    flattening_residual_literal,
    rigidity_scan,
)
from .quadrature import DEFAULT_CONFIG, ApproxConfig, QuadratureNonConvergence

__all__ = ["build_parser", "run", "main"]

_CSV_HEADER = "n,best_c,min_defect,literal_flattening,classification"
_CONFIG_KEYS = {"rel_tol", "abs_tol", "grid_per_unit", "max_depth", "epsilon"}
_AXIOM_SEED = 12345
_MULTIPLICATIVE_AXIOMS = {"mul_comm", "mul_assoc", "distributive", "neutral_mul"}


def _fmt(x: float) -> str:
    # 12 significant digits, locale-independent; +inf prints as "inf"
    return "%.12g" % (x,)


def _finite_float(s: str) -> float:
    v = float(s)
    if not math.isfinite(v):
        raise ValueError("must be finite")
    return v


@dataclasses.dataclass(frozen=True)
class _KernelSpec:
    text: str
    kind: str
    payload: tuple


def kernel_spec(s: str) -> _KernelSpec:
    """Parse the --kernel mini-syntax; file contents load lazily at run time."""
    if s == "standard":
        return _KernelSpec(s, "standard", ())
    if s.startswith("alpha:"):
        return _KernelSpec(s, "alpha", (_finite_float(s[len("alpha:"):]),))
    if s.startswith("alphabeta:"):
        parts = s[len("alphabeta:"):].split(",")
        if len(parts) != 2:
            raise ValueError("alphabeta takes exactly two comma-separated values")
        return _KernelSpec(s, "alphabeta", (_finite_float(parts[0]), _finite_float(parts[1])))
    if s.startswith("file:"):
        path = s[len("file:"):]
        if not path:
            raise ValueError("empty kernel file path")
        return _KernelSpec(s, "file", (path,))
    raise ValueError("expected standard, alpha:<v>, alphabeta:<v>,<v>, or file:<path>")


def _kernel_from_spec(spec: _KernelSpec) -> FourierKernel:
    if spec.kind == "standard":
        return FourierKernel.standard()
    if spec.kind == "alpha":
        return FourierKernel.alpha(*spec.payload)
    if spec.kind == "alphabeta":
        return FourierKernel.alpha_beta(*spec.payload)
    with open(spec.payload[0], encoding="utf-8") as fh:
        return FourierKernel.from_json(json.load(fh))


def _load_config_file(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"config file {path!r} must hold a JSON object")
    bad = set(data) - _CONFIG_KEYS
    if bad:
        raise ValueError(f"unknown config keys in {path!r}: {sorted(bad)}")
    return data


def _resolve_config(args) -> tuple:
    """(ApproxConfig, epsilon-or-None) with env < --config < flag precedence."""
    merged = {}
    for path in (os.environ.get("WAVEARITH_CONFIG"), args.config):
        if path:
            merged.update(_load_config_file(path))
    epsilon = merged.pop("epsilon", None)
    for name in ("rel_tol", "abs_tol", "grid_per_unit", "max_depth"):
        value = getattr(args, name)
        if value is not None:
            merged[name] = value
    cfg = dataclasses.replace(DEFAULT_CONFIG, **merged) if merged else DEFAULT_CONFIG
    if epsilon is not None:
        epsilon = float(epsilon)
        if not (math.isfinite(epsilon) and epsilon > 0):
            raise ValueError("config epsilon must be positive and finite")
    return cfg, epsilon


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json", "csv"), default="text",
                        help="output format (csv: residual-scan only)")
    common.add_argument("--config", metavar="PATH", help="JSON config file")
    common.add_argument("--rel-tol", dest="rel_tol", type=_finite_float, default=None)
    common.add_argument("--abs-tol", dest="abs_tol", type=_finite_float, default=None)
    common.add_argument("--grid-per-unit", dest="grid_per_unit", type=int, default=None)
    common.add_argument("--max-depth", dest="max_depth", type=int, default=None)
    common.add_argument("--seedless", action="store_true",
                        help="pin any randomized verb to its default seed")

    parser = argparse.ArgumentParser(prog="wavearith",
                                     description="Numbers as integrals of bump and periodic kernels.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("eval", parents=[common], help="antiderivative value of a periodic kernel")
    p.add_argument("--kernel", type=kernel_spec, required=True)
    p.add_argument("--x", type=_finite_float, required=True)

    p = sub.add_parser("product", parents=[common], help="product of two represented numbers")
    p.add_argument("--a", type=_finite_float, required=True)
    p.add_argument("--b", type=_finite_float, required=True)
    p.add_argument("--kernel", type=kernel_spec, default=None,
                   help="periodic product; without it the bump-grid product (integers only)")

    p = sub.add_parser("pow", parents=[common], help="iterated bump-grid product a**b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("rational", parents=[common], help="value of m/n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--series", choices=("fragment_sum", "cumulative"), default=None,
                   help="periodic-series route; default is the bump-comb integral")

    p = sub.add_parser("discrete", parents=[common], help="discrete subdivision sum")
    p.add_argument("--x", type=_finite_float, required=True)
    p.add_argument("--m", type=int, required=True, help="subintervals per unit")
    p.add_argument("--N", dest="n_modes", type=int, default=None, help="harmonic truncation")
    p.add_argument("--kernel", type=kernel_spec, default=None)
    p.add_argument("--telescoping", action="store_true",
                   help="closed telescoping sum (standard kernel, integer x)")

    p = sub.add_parser("residual-scan", parents=[common], help="separability scan over a range of n")
    p.add_argument("--from", dest="n_lo", type=int, required=True)
    p.add_argument("--to", dest="n_hi", type=int, required=True)
    p.add_argument("--epsilon", type=_finite_float, default=None,
                   help=f"classification threshold (default {DEFAULT_EPSILON:g})")

    p = sub.add_parser("factor", parents=[common], help="prime multiset via zero-defect grids")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("optimize", parents=[common], help="kernel parameter optimization")
    p.add_argument("--problem", metavar="PATH", default=None, help="problem JSON file")
    p.add_argument("--family", choices=("alpha", "alpha_beta", "explicit"), default=None)
    p.add_argument("--objective", choices=("sup_deviation", "l2_deviation"),
                   default="sup_deviation")
    p.add_argument("--lo", type=_finite_float, default=0.0)
    p.add_argument("--hi", type=_finite_float, default=1.0)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--pin", action="append", default=[], metavar="NAME=VALUE",
                   help="pin a coefficient, e.g. --pin a1=-1 (repeatable)")
    p.add_argument("--explicit-n", dest="explicit_n", type=int, default=0)
    p.add_argument("--samples-per-unit", dest="samples_per_unit", type=int, default=10000)

    p = sub.add_parser("axioms", parents=[common], help="randomized arithmetic identity checks")
    p.add_argument("--count", type=int, default=50, help="operand tuples per axiom")
    p.add_argument("--seed", type=int, default=_AXIOM_SEED)
    p.add_argument("--axiom", choices=AXIOM_IDS, default=None, help="check one axiom only")

    return parser


def _cmd_eval(args, cfg, eps_cfg):
    value = analytic_value(_kernel_from_spec(args.kernel), args.x)
    inputs = {"kernel": args.kernel.text, "x": args.x}
    return inputs, {"value": value}, [_fmt(value)], None, cfg.to_json()


def _require_integral(name: str, v: float) -> int:
    if not float(v).is_integer():
        raise ValueError(f"{name} must be an integer for the bump-grid product; pass --kernel for reals")
    return int(v)


def _cmd_product(args, cfg, eps_cfg):
    inputs = {"a": args.a, "b": args.b, "kernel": args.kernel.text if args.kernel else None}
    if args.kernel is not None:
        value = analytic_product(_kernel_from_spec(args.kernel), args.a, args.b)
    else:
        value = mul_value(_require_integral("a", args.a), _require_integral("b", args.b), cfg)
    return inputs, {"value": value}, [_fmt(value)], None, cfg.to_json()


def _cmd_pow(args, cfg, eps_cfg):
    value = pow_value(args.a, args.b, cfg)
    inputs = {"a": args.a, "b": args.b}
    return inputs, {"value": value}, [_fmt(value)], None, cfg.to_json()


def _cmd_rational(args, cfg, eps_cfg):
    if args.series is None:
        value = rational_value(args.m, args.n, cfg)
    else:
        value = series_rational(args.m, args.n, args.series)
    inputs = {"m": args.m, "n": args.n, "series": args.series}
    return inputs, {"value": value}, [_fmt(value)], None, cfg.to_json()


def _cmd_discrete(args, cfg, eps_cfg):
    if args.telescoping:
        if args.kernel is not None:
            raise ValueError("--telescoping fixes the standard kernel; --kernel is not allowed")
        if args.n_modes is not None:
            raise ValueError("--telescoping fixes N = 1; --N is not allowed")
        if not (float(args.x).is_integer() and args.x >= 1):
            raise ValueError("--telescoping requires integer x >= 1")
        value = discrete_standard(int(args.x), args.m)
        inputs = {"x": args.x, "m": args.m, "N": None, "kernel": "standard", "telescoping": True}
    else:
        kernel = _kernel_from_spec(args.kernel) if args.kernel else FourierKernel.standard()
        n_modes = args.n_modes if args.n_modes is not None else max(1, kernel.n_harmonics)
        value = discrete_general(kernel, args.x, DiscretizationParams(m=args.m, N=n_modes))
        inputs = {
            "x": args.x,
            "m": args.m,
            "N": n_modes,
            "kernel": args.kernel.text if args.kernel else "standard",
            "telescoping": False,
        }
    return inputs, {"value": value}, [_fmt(value)], None, cfg.to_json()


def _cmd_residual_scan(args, cfg, eps_cfg):
    epsilon = args.epsilon
    if epsilon is None:
        epsilon = eps_cfg if eps_cfg is not None else DEFAULT_EPSILON
    rows = []
    for n in range(args.n_lo, args.n_hi + 1):
        verdict = rigidity_scan(n, epsilon, cfg)
        literal = None
        if verdict.best_c is not None and n % verdict.best_c == 0:
            literal = flattening_residual_literal(verdict.best_c, n // verdict.best_c, cfg)
        rows.append((n, verdict.best_c, verdict.min_defect, literal, verdict.classification))

    csv_lines = [_CSV_HEADER]
    text_lines = []
    json_rows = []
    for n, c, defect, literal, cls in rows:
        c_csv = "" if c is None else str(c)
        lit_csv = "" if literal is None else _fmt(literal)
        csv_lines.append(f"{n},{c_csv},{_fmt(defect)},{lit_csv},{cls}")
        c_txt = "-" if c is None else str(c)
        lit_txt = "-" if literal is None else _fmt(literal)
        text_lines.append(f"{n} {c_txt} {_fmt(defect)} {lit_txt} {cls}")
        json_rows.append({
            "n": n,
            "best_c": c,
            "min_defect": defect if math.isfinite(defect) else "inf",
            "literal_flattening": literal,
            "classification": cls,
        })
    inputs = {"from": args.n_lo, "to": args.n_hi, "epsilon": epsilon}
    config = dict(cfg.to_json(), epsilon=epsilon)
    return inputs, {"rows": json_rows}, text_lines, csv_lines, config


def _cmd_factor(args, cfg, eps_cfg):
    res = analytic_factorization(args.n, cfg)
    inputs = {"n": args.n}
    result = {
        "n": args.n,
        "factors": list(res.factors),
        "verification_defect": res.verification_defect,
    }
    text_lines = [
        "factors: " + " ".join(str(f) for f in res.factors),
        "verification_defect: " + _fmt(res.verification_defect),
    ]
    return inputs, result, text_lines, None, cfg.to_json()


def _cmd_optimize(args, cfg, eps_cfg):
    if args.problem is not None:
        with open(args.problem, encoding="utf-8") as fh:
            problem = OptimizationProblem.from_json(json.load(fh))
    else:
        if args.family is None:
            raise ValueError("optimize needs --family or --problem")
        pins = {}
        for item in args.pin:
            name, sep, sval = item.partition("=")
            if not sep or not name:
                raise ValueError(f"--pin expects NAME=VALUE, got {item!r}")
            pins[name.strip()] = float(sval)
        problem = OptimizationProblem(
            family=args.family,
            interval=(args.lo, args.hi),
            objective=args.objective,
            budget=args.budget,
            pins=pins,
            explicit_n=args.explicit_n,
            samples_per_unit=args.samples_per_unit,
        )
    res = optimize(problem)
    inputs = {"problem": problem.to_json()}
    result = {
        "params": dict(res.params),
        "objective_value": res.objective_value,
        "evaluations_used": res.evaluations_used,
        "converged": res.converged,
        "kernel": res.kernel.to_json(),
    }
    text_lines = [f"{name} = {_fmt(res.params[name])}" for name in sorted(res.params)]
    text_lines += [
        "objective_value = " + _fmt(res.objective_value),
        "evaluations_used = " + str(res.evaluations_used),
        "converged = " + ("true" if res.converged else "false"),
    ]
    return inputs, result, text_lines, None, cfg.to_json()


def _axiom_operands(rng: random.Random, axiom_id: str) -> tuple:
    arity = _ARITY[axiom_id]
    if axiom_id in _MULTIPLICATIVE_AXIOMS:
        return tuple(rng.randint(1, 10) for _ in range(arity))
    return tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 8)) for _ in range(arity))


def _cmd_axioms(args, cfg, eps_cfg):
    if args.count < 1:
        raise ValueError("--count must be >= 1")
    seed = _AXIOM_SEED if args.seedless else args.seed
    axioms = (args.axiom,) if args.axiom else AXIOM_IDS
    rng = random.Random(seed)
    rows = []
    text_lines = []
    passed = 0
    for axiom_id in axioms:
        worst = 0.0
        ok = True
        for _ in range(args.count):
            holds, defect = check_axiom(axiom_id, _axiom_operands(rng, axiom_id), cfg)
            worst = max(worst, defect)
            ok = ok and holds
        rows.append({"axiom": axiom_id, "tuples": args.count, "worst_defect": worst, "pass": ok})
        passed += ok
        text_lines.append(f"{axiom_id}: {'pass' if ok else 'FAIL'} (worst defect {_fmt(worst)})")
    text_lines.append(f"{passed}/{len(axioms)} axioms pass on {args.count} tuples")
    inputs = {"count": args.count, "seed": seed, "axiom": args.axiom, "seedless": args.seedless}
    result = {"axioms": rows, "all_pass": passed == len(axioms)}
    return inputs, result, text_lines, None, cfg.to_json()


_HANDLERS = {
    "eval": _cmd_eval,
    "product": _cmd_product,
    "pow": _cmd_pow,
    "rational": _cmd_rational,
    "discrete": _cmd_discrete,
    "residual-scan": _cmd_residual_scan,
    "factor": _cmd_factor,
    "optimize": _cmd_optimize,
    "axioms": _cmd_axioms,
}


def run(argv, out=None) -> int:
    """Parse argv (no program name) and execute; returns the exit status."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.output == "csv" and args.verb != "residual-scan":
        sys.stderr.write("error: --output csv is only supported for residual-scan\n")
        return 2
    if args.verb == "optimize" and args.problem is not None and (
        args.family is not None or args.pin or args.explicit_n
    ):
        sys.stderr.write("error: --problem and inline problem flags are mutually exclusive\n")
        return 2

    try:
        cfg, eps_cfg = _resolve_config(args)
        inputs, result, text_lines, csv_lines, config = _HANDLERS[args.verb](args, cfg, eps_cfg)
    except QuadratureNonConvergence as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1

    if args.output == "json":
        envelope = {"verb": args.verb, "inputs": inputs, "result": result, "config": config}
        out.write(json.dumps(envelope, indent=2, sort_keys=True, allow_nan=False) + "\n")
    elif args.output == "csv":
        out.write("\n".join(csv_lines) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")
    return 0


def main(argv=None) -> int:
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2


if __name__ == "__main__":
    sys.exit(main())
