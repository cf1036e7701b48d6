"""Benchmark the compiled Jacobi kernel against the pure-Python fallback.

Run:  python benchmarks/bench_eigensolver.py
"""

import time

import numpy as np

from psombor import _kernels_py
from psombor.backend import backend_name

try:
    from psombor import _kernels
except ImportError:
    _kernels = None


def bench(kernel, matrices, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        copies = [(m.copy(), np.eye(m.shape[0])) for m in matrices]
        t0 = time.perf_counter()
        for a, v in copies:
            thr = 1e-12 * max(1.0, float(np.linalg.norm(a)))
            kernel.jacobi_sweeps(a, v, thr, 100)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    rng = np.random.default_rng(20240817)
    print(f"active backend: {backend_name()}")
    print(f"{'n':>5} {'count':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n, count in ((8, 200), (16, 100), (32, 40), (64, 10), (128, 3)):
        mats = []
        for _ in range(count):
            a = rng.standard_normal((n, n))
            mats.append(a + a.T)
        t_pure = bench(_kernels_py, mats)
        if _kernels is None:
            print(f"{n:>5} {count:>6} {t_pure:>10.4f} {'unavailable':>13} {'-':>8}")
            continue
        t_comp = bench(_kernels, mats)
        # parity spot check on the first matrix
        a1, v1 = mats[0].copy(), np.eye(n)
        a2, v2 = mats[0].copy(), np.eye(n)
        thr = 1e-12 * max(1.0, float(np.linalg.norm(mats[0])))
        _kernels_py.jacobi_sweeps(a1, v1, thr, 100)
        _kernels.jacobi_sweeps(a2, v2, thr, 100)
        drift = max(np.abs(a1 - a2).max(), np.abs(v1 - v2).max())
        print(f"{n:>5} {count:>6} {t_pure:>10.4f} {t_comp:>13.4f} "
              f"{t_pure / t_comp:>7.1f}x   (backend drift {drift:.1e})")


if __name__ == "__main__":
    main()
