#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

from czorb._kernels import fallback

try:
    from czorb._kernels import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench(name, make_call, repeats):
    slow = best_of(make_call(fallback), repeats)
    if _speedups is None:
        print(f"{name:<44} python {slow * 1e3:8.3f} ms   (compiled kernels not built)")
        return
    fast = best_of(make_call(_speedups), repeats)
    print(
        f"{name:<44} python {slow * 1e3:8.3f} ms   compiled {fast * 1e3:8.3f} ms   "
        f"speedup {slow / fast:6.1f}x"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="best-of-N timing (default 5)")
    args = parser.parse_args()

    print(f"kernel backends: fallback{' + compiled' if _speedups else ' only'}")
    print()

    quad_cases = [(2, 3), (7, 4), (29, 17), (1, 1)]
    bench(
        "chart_radial, 4 pairs at tol=5e-9",
        lambda mod: lambda: [mod.chart_radial(w0, w1, 5e-9, 10**6) for w0, w1 in quad_cases],
        args.repeats,
    )

    rates = (4, 4, 5, 14, 9, 20)
    samples = 4 * sum(rates) + 16
    bench(
        f"unwrapped_winding_phase, rates={rates}",
        lambda mod: lambda: mod.unwrapped_winding_phase(rates, samples),
        args.repeats,
    )

    big_rates = tuple(range(1, 41))
    big_samples = 4 * sum(big_rates) + 16
    bench(
        "unwrapped_winding_phase, 40 rates, 3296 samples",
        lambda mod: lambda: mod.unwrapped_winding_phase(big_rates, big_samples),
        args.repeats,
    )


if __name__ == "__main__":
    main()
