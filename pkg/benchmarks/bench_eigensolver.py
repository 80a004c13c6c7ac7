"""Compare the compiled Jacobi kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_eigensolver.py [--repeats N]

Solves Laplacians of a few graph families at increasing sizes with both
kernels and prints per-solve wall time plus the speedup ratio.  Also
cross-checks that the two kernels agree to 1e-10 on every matrix.
"""

import argparse
import time

import numpy as np

from syncbound import _pykernel, cycle, from_edge_list, laplacian
from syncbound.graph import Graph

try:
    from syncbound import _speckernel
except ImportError:
    _speckernel = None


def _random_regularish(n: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = set()
    for u in range(n):
        for v in rng.choice(n, size=4, replace=False):
            v = int(v)
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return from_edge_list(n, sorted(edges))


def _cases():
    yield "cycle(64)", laplacian(cycle(64))
    yield "cycle(128)", laplacian(cycle(128))
    yield "random deg~6 (48)", laplacian(_random_regularish(48, 7))
    yield "random deg~6 (96)", laplacian(_random_regularish(96, 11))
    yield "random deg~6 (160)", laplacian(_random_regularish(160, 13))


def _time_solve(module, matrix: np.ndarray, repeats: int) -> tuple[float, np.ndarray]:
    n = matrix.shape[0]
    best = float("inf")
    values = None
    for _ in range(repeats):
        work = np.array(matrix, dtype=np.float64, order="C")
        start = time.perf_counter()
        module.jacobi_sweeps(work, 1e-10 * n, 64)
        best = min(best, time.perf_counter() - start)
        values = np.sort(np.diagonal(work).copy())
    return best, values


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _speckernel is None:
        print("compiled kernel unavailable; timing the fallback only")
        header = f"{'case':<22}{'python (ms)':>14}"
    else:
        header = f"{'case':<22}{'python (ms)':>14}{'compiled (ms)':>16}{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, matrix in _cases():
        py_time, py_vals = _time_solve(_pykernel, matrix, args.repeats)
        if _speckernel is None:
            print(f"{name:<22}{py_time * 1e3:>14.2f}")
            continue
        c_time, c_vals = _time_solve(_speckernel, matrix, args.repeats)
        if not np.allclose(py_vals, c_vals, atol=1e-10):
            raise SystemExit(f"kernel disagreement on {name}")
        print(
            f"{name:<22}{py_time * 1e3:>14.2f}{c_time * 1e3:>16.2f}"
            f"{py_time / c_time:>10.1f}x"
        )


if __name__ == "__main__":
    main()
