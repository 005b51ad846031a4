"""Compare the numba and numpy summation kernels.

    python benchmarks/bench_kernels.py --sizes 1e5 1e6 1e7 --repeat 3
"""

import argparse
import time

from zeta_forge import kernels


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t)
    return best, value


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--sizes", nargs="+", type=float, default=[1e5, 1e6, 1e7])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    # compile outside the timed region
    kernels.shifted_power_sum_numba(0.5, 2, 10)
    kernels.potential_sum_numba(0.5, 10)

    cases = [
        ("force  sum 1/(n-x)^2", lambda n: kernels.shifted_power_sum_numba(0.5, 2, n),
         lambda n: kernels.shifted_power_sum_numpy(0.5, 2, n)),
        ("psi_3  sum 1/(n-x)^4", lambda n: kernels.shifted_power_sum_numba(0.3, 4, n),
         lambda n: kernels.shifted_power_sum_numpy(0.3, 4, n)),
        ("U_R    sum x/(n(n-x))", lambda n: kernels.potential_sum_numba(0.5, n),
         lambda n: kernels.potential_sum_numpy(0.5, n)),
    ]
    print(f"{'kernel':24s} {'N':>10s} {'numba [ms]':>11s} {'numpy [ms]':>11s} {'speedup':>8s} {'|diff|':>9s}")
    for name, fast, slow in cases:
        for size in args.sizes:
            n = int(size)
            t_nb, v_nb = best_of(lambda: fast(n), args.repeat)
            t_np, v_np = best_of(lambda: slow(n), args.repeat)
            print(f"{name:24s} {n:>10d} {1e3 * t_nb:11.2f} {1e3 * t_np:11.2f} "
                  f"{t_np / t_nb:8.1f} {abs(v_nb - v_np):9.1e}")


if __name__ == "__main__":
    main()
