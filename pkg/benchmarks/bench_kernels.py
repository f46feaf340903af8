"""Time the integer kernels: pure Python against the compiled extension.

Run from the repository root:

    python3 benchmarks/bench_kernels.py            # default sizes
    python3 benchmarks/bench_kernels.py --repeat 5

If the compiled extension is not built the script still runs and
reports pure-Python timings only.
"""

import argparse
import random
import time

from cflat.zlinalg import _kernel_py

try:
    from cflat.zlinalg import _kernel_c
except ImportError:
    _kernel_c = None

SEED = 20260816


def rand_lists(rng, rows, cols, bound):
    return [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]


def identity_lists(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def bench_snf(impl, mats):
    for m in mats:
        n = len(m)
        d = [row[:] for row in m]
        impl.snf_inplace(d, identity_lists(n), identity_lists(n))


def bench_det(impl, mats):
    for m in mats:
        impl.det_inplace([row[:] for row in m])


def bench_rank(impl, mats):
    for m in mats:
        impl.rank_mod_inplace([row[:] for row in m], 3)


def bench_matmul(impl, mats):
    for m in mats:
        impl.matmul(m, m)


def time_case(fn, impl, mats, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(impl, mats)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="timing repeats, best kept")
    args = ap.parse_args()

    rng = random.Random(SEED)
    cases = [
        ("snf 16x16 x20", bench_snf, [rand_lists(rng, 16, 16, 9) for _ in range(20)]),
        ("snf 24x24 x10", bench_snf, [rand_lists(rng, 24, 24, 9) for _ in range(10)]),
        ("snf 32x32 x5", bench_snf, [rand_lists(rng, 32, 32, 9) for _ in range(5)]),
        ("det 32x32 x20", bench_det, [rand_lists(rng, 32, 32, 30) for _ in range(20)]),
        ("det 48x48 x10", bench_det, [rand_lists(rng, 48, 48, 30) for _ in range(10)]),
        ("rank mod 3 64x64 x10", bench_rank, [rand_lists(rng, 64, 64, 30) for _ in range(10)]),
        ("matmul 64x64 x10", bench_matmul, [rand_lists(rng, 64, 64, 30) for _ in range(10)]),
    ]

    if _kernel_c is None:
        print("compiled kernel: not built (pure-Python timings only)")
    else:
        print("compiled kernel: available")
    header = f"{'case':<22}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, fn, mats in cases:
        pure = time_case(fn, _kernel_py, mats, args.repeat)
        if _kernel_c is None:
            print(f"{name:<22}{pure:>12.4f}{'-':>14}{'-':>10}")
        else:
            comp = time_case(fn, _kernel_c, mats, args.repeat)
            ratio = pure / comp if comp > 0 else float("inf")
            print(f"{name:<22}{pure:>12.4f}{comp:>14.4f}{ratio:>9.2f}x")


if __name__ == "__main__":
    main()
