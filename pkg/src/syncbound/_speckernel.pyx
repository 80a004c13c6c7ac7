# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi sweeps for dense symmetric matrices.

Same contract as syncbound._pykernel.jacobi_sweeps; the caller owns input
validation, copying, and the convergence decision.
"""

from libc.math cimport fabs, sqrt


def kernel_name():
    return "compiled"


def jacobi_sweeps(double[:, ::1] a, double tol, int max_sweeps):
    """Run row-cyclic Jacobi rotations on `a` in place.

    Sweeps stop as soon as the off-diagonal Frobenius norm drops to `tol`
    or `max_sweeps` full sweeps have run.  Returns (sweeps_done, off_norm).
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i, p, q
    cdef int sweeps = 0
    cdef double off2, apq, app, aqq, theta, t, c, s, aip, aiq

    off2 = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off2 += a[p, q] * a[p, q]
    cdef double off = sqrt(2.0 * off2)

    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if theta > 1e10 or theta < -1e10:
                    # theta*theta would overflow; 1/(2*theta) is exact here
                    t = 0.5 / theta
                elif theta >= 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    if i == p or i == q:
                        continue
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[p, i] = a[i, p]
                    a[i, q] = s * aip + c * aiq
                    a[q, i] = a[i, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
        sweeps += 1
        off2 = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off2 += a[p, q] * a[p, q]
        off = sqrt(2.0 * off2)

    return sweeps, off
