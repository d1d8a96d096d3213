#!/usr/bin/env python3
"""Timing comparison between the compiled core and the pure NumPy fallback.

Each backend function runs on a fixed, seeded workload; the table reports
the best per-call time over a few repeats. Without the compiled extension
only the fallback column is printed.
"""

import argparse
import timeit

import numpy as np

from wavearith import backend


def _workloads(points: int):
    rng = np.random.default_rng(20260816)
    xs_unit = rng.uniform(-0.75, 0.75, points)
    xs_wide = rng.uniform(-1000.0, 1000.0, points)
    xs_comb = rng.uniform(-0.5, 63.5, points)
    centers = np.arange(64, dtype=np.float64)
    amps = rng.uniform(0.5, 2.0, 64)
    a = rng.uniform(-0.5, 0.5, 8)
    b = rng.uniform(-0.5, 0.5, 8)
    d = rng.standard_normal((1537, 769))
    wx = np.full(1537, 1.0 / 256)
    wy = np.full(769, 1.0 / 256)
    wx[0] = wx[-1] = wx[0] / 2
    wy[0] = wy[-1] = wy[0] / 2
    return [
        ("bump_raw", lambda mod: mod.bump_raw(xs_unit)),
        ("sin2pi", lambda mod: mod.sin2pi(xs_wide)),
        ("cos2pi", lambda mod: mod.cos2pi(xs_wide)),
        ("comb_eval", lambda mod: mod.comb_eval(xs_comb, centers, amps, 4.5)),
        ("antideriv_series", lambda mod: mod.antideriv_series(xs_wide, 1.0, a, b)),
        ("discrete_sum", lambda mod: mod.discrete_sum(1.0, a, b, 64, points)),
        ("trapezoid_sq_sum", lambda mod: mod.trapezoid_sq_sum(d, wx, wy)),
    ]


def _best_ms(fn) -> float:
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat=3, number=number)) / number * 1e3


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--points", type=int, default=200_000, help="samples per array workload"
    )
    args = parser.parse_args()

    fallback = backend.get_backend(pure=True)
    native = backend.get_backend(pure=False) if backend.USING_NATIVE else None

    if native is None:
        print("compiled extension not available; timing the fallback only")
        print(f"{'function':<18} {'fallback':>12}")
        for name, call in _workloads(args.points):
            print(f"{name:<18} {_best_ms(lambda: call(fallback)):>10.3f} ms")
        return 0

    print(f"{'function':<18} {'fallback':>12} {'native':>12} {'speedup':>9}")
    for name, call in _workloads(args.points):
        t_fb = _best_ms(lambda: call(fallback))
        t_nat = _best_ms(lambda: call(native))
        print(f"{name:<18} {t_fb:>10.3f} ms {t_nat:>10.3f} ms {t_fb / t_nat:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
