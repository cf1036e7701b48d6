# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic-Jacobi sweep kernel.

Mirrors psombor._kernels_py operation for operation (same rotation formulas,
same row-major sweep order, same convergence test) so the two backends agree
bit for bit.
"""

from libc.math cimport sqrt, fabs


cdef double _off_norm(double[:, :] a, Py_ssize_t n) nogil:
    cdef double total = 0.0
    cdef Py_ssize_t p, q
    for p in range(n - 1):
        for q in range(p + 1, n):
            total += 2.0 * a[p, q] * a[p, q]
    return sqrt(total)


def off_diagonal_norm(double[:, :] a):
    """Frobenius norm of the off-diagonal part of a symmetric matrix."""
    return _off_norm(a, a.shape[0])


def jacobi_sweeps(double[:, :] a, v, double threshold, int max_sweeps):
    """Run cyclic Jacobi sweeps in place; see the pure-Python twin for docs."""
    cdef Py_ssize_t n = a.shape[0]
    cdef double[:, :] vm
    cdef bint with_vectors = v is not None
    if with_vectors:
        vm = v
    cdef int sweeps = 0
    cdef double off = _off_norm(a, n)
    cdef Py_ssize_t p, q, k
    cdef double apq, app, aqq, theta, t, c, s, tau
    cdef double akp, akq, rkp, rkq, vkp, vkq
    while off > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    if theta >= 0.0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    rkp = akp - s * (akq + tau * akp)
                    rkq = akq + s * (akp - tau * akq)
                    a[k, p] = rkp
                    a[p, k] = rkp
                    a[k, q] = rkq
                    a[q, k] = rkq
                if with_vectors:
                    for k in range(n):
                        vkp = vm[k, p]
                        vkq = vm[k, q]
                        vm[k, p] = vkp - s * (vkq + tau * vkp)
                        vm[k, q] = vkq + s * (vkp - tau * vkq)
        sweeps += 1
        off = _off_norm(a, n)
    return sweeps, off
