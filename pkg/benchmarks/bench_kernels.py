"""Compare the numba and numpy backends of the monomial divisibility kernel.

    python benchmarks/bench_kernels.py [--nvars 9] [--degree 8] [--gens 60] [--repeat 5]

The two backends must agree on every mask; timings are best-of-repeat.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from borderline._kernels import HAS_NUMBA, as_array, divisible_mask
from borderline.ring import GradedRing, monomial_basis


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--nvars", type=int, default=9)
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--gens", type=int, default=60)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    ring = GradedRing.product([args.nvars])
    mons = as_array(monomial_basis(ring, (args.degree,)))
    rng = np.random.default_rng(args.seed)
    low = as_array(monomial_basis(ring, (max(1, args.degree // 2),)))
    gens = low[rng.choice(len(low), size=min(args.gens, len(low)), replace=False)]
    print(f"{len(mons)} monomials of degree {args.degree} in {args.nvars} variables, {len(gens)} generators")

    ref = divisible_mask(mons, gens, backend="numpy")
    t_np = best_of(lambda: divisible_mask(mons, gens, backend="numpy"), args.repeat)
    print(f"numpy : {t_np * 1e3:9.2f} ms")
    if not HAS_NUMBA:
        print("numba : not installed")
        return
    divisible_mask(mons[:2], gens, backend="numba")  # compile
    got = divisible_mask(mons, gens, backend="numba")
    if not np.array_equal(ref, got):
        raise SystemExit("backends disagree")
    t_nb = best_of(lambda: divisible_mask(mons, gens, backend="numba"), args.repeat)
    print(f"numba : {t_nb * 1e3:9.2f} ms  (x{t_np / t_nb:.1f})")


if __name__ == "__main__":
    main()
