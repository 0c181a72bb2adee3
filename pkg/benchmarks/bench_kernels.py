"""Compare the compiled geometry kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Two levels are timed: the raw kernels on random integer point clouds, and
whole computations (characters and a tensor decomposition) run from a cold
table so that every Minkowski sum and containment test is redone.
"""

import argparse
import random
import time

from mvpoly import kernels, mvcalc
from mvpoly.rootsys import load_root_system
from mvpoly.tables import data_dir, load_table


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cloud(rng, n, dim, span=6):
    return [tuple(rng.randint(-span, span) for _ in range(dim)) for _ in range(n)]


def kernel_cases(rng):
    clouds2 = [cloud(rng, 40, 2) for _ in range(200)]
    clouds3 = [cloud(rng, 30, 3) for _ in range(100)]
    normals = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(12)]
    offsets = [100] * len(normals)  # every point inside: no early exit
    pts = cloud(rng, 20, 3)
    return {
        "hull2d (200 x 40 points)": lambda: [kernels.hull2d(c) for c in clouds2],
        "hull3d (100 x 30 points)": lambda: [kernels.hull3d(c) for c in clouds3],
        "all_within (2000 x 20x12)": lambda: [kernels.all_within(pts, normals, offsets) for _ in range(2000)],
    }


def cold(group):
    mvcalc.weylgon.cache_clear()
    mvcalc.shifted_weylgon.cache_clear()
    return load_table(data_dir() / f"{group}.json"), load_root_system(group)


def workload_cases():
    def char(group, lam):
        def run():
            t, rs = cold(group)
            mvcalc.character(t, rs, lam)
        return run

    def tensor(group, lam, mu):
        def run():
            t, rs = cold(group)
            mvcalc.tensor_decompose(t, rs, lam, mu)
        return run

    return {
        "character C2 (3,3)": char("C2", (3, 3)),
        "character A3 (2,1,2)": char("A3", (2, 1, 2)),
        "tensor C2 (2,2)x(2,2)": tensor("C2", (2, 2), (2, 2)),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if kernels._compiled is None:
        raise SystemExit("compiled kernels are not built; run `python3 setup.py build_ext --inplace` first")

    rng = random.Random(args.seed)
    cases = {**kernel_cases(rng), **workload_cases()}
    print(f"{'case':<28} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    try:
        for name, fn in cases.items():
            kernels.use_backend("python")
            py = best_of(fn, args.repeat)
            kernels.use_backend("cython")
            cy = best_of(fn, args.repeat)
            print(f"{name:<28} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")
    finally:
        kernels.use_backend("cython")


if __name__ == "__main__":
    main()
