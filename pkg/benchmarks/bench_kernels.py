"""Time the compiled NTT kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--rows 4] [--repeat 20]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from polyhe import kernels
from polyhe.modring import find_ntt_prime, ntt_tables


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--degrees", type=int, nargs="+", default=[1024, 4096, 8192])
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'n':>6} {'backend':>8} {'fwd ms':>9} {'inv ms':>9}")
    rng = np.random.default_rng(0)
    for n in args.degrees:
        p = find_ntt_prime(30, n).value
        tab = ntt_tables(n, p)
        base = rng.integers(0, p, (args.rows, n)).astype(np.uint64)
        times = {}
        for name, impl in backends.items():
            a = base.copy()
            fwd = _best(lambda: impl.ntt_forward_inplace(a, tab.psi_rev, tab.psi_rev_shoup, p), args.repeat)
            inv = _best(lambda: impl.ntt_inverse_inplace(
                a, tab.ipsi_rev, tab.ipsi_rev_shoup, tab.n_inv, tab.n_inv_shoup, p), args.repeat)
            times[name] = fwd + inv
            print(f"{n:>6} {name:>8} {fwd * 1e3:9.3f} {inv * 1e3:9.3f}")
        if len(times) == 2:
            print(f"{n:>6} {'speedup':>8} {times['numpy'] / times['cython']:9.1f}x")


if __name__ == "__main__":
    main()
