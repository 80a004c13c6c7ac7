"""Pure-Python cyclic Jacobi sweeps, the fallback for the compiled kernel.

Pivot order, rotation formulas, and the convergence rule match
syncbound._speckernel exactly; rotations are applied with numpy column
operations instead of an explicit inner loop.
"""

from __future__ import annotations

import math

import numpy as np


def kernel_name() -> str:
    return "python"


def _off_norm(a: np.ndarray) -> float:
    n = a.shape[0]
    off2 = float(np.sum(a * a)) - float(np.sum(np.diagonal(a) ** 2))
    # clamp: cancellation can leave a tiny negative residue
    return math.sqrt(off2) if off2 > 0.0 else 0.0


def jacobi_sweeps(a: np.ndarray, tol: float, max_sweeps: int) -> tuple[int, float]:
    """Run row-cyclic Jacobi rotations on `a` in place.

    Returns (sweeps_done, off_norm); the caller decides whether the final
    off-diagonal norm counts as converged.
    """
    n = a.shape[0]
    sweeps = 0
    off = _off_norm(a)
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                if apq == 0.0:
                    continue
                app = float(a[p, p])
                aqq = float(a[q, q])
                theta = (aqq - app) / (2.0 * apq)
                if theta > 1e10 or theta < -1e10:
                    # theta*theta would overflow; 1/(2*theta) is exact here
                    t = 0.5 / theta
                elif theta >= 0.0:
                    t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                new_p = c * colp - s * colq
                new_q = s * colp + c * colq
                a[:, p] = new_p
                a[p, :] = new_p
                a[:, q] = new_q
                a[q, :] = new_q
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off = _off_norm(a)
    return sweeps, off
