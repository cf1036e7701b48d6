"""Pure-Python cyclic-Jacobi sweep kernel.

Reference implementation of the hot loop; psombor._kernels is the compiled
twin with identical operation order, so both backends produce the same
floating-point results.
"""

from math import sqrt


def off_diagonal_norm(a) -> float:
    """Frobenius norm of the off-diagonal part of a symmetric matrix."""
    n = a.shape[0]
    rows = a.tolist()
    total = 0.0
    for p in range(n - 1):
        row = rows[p]
        for q in range(p + 1, n):
            total += 2.0 * row[q] * row[q]
    return sqrt(total)


def jacobi_sweeps(a, v, threshold: float, max_sweeps: int):
    """Run cyclic Jacobi sweeps in place on the symmetric matrix ``a``.

    Rotations visit the upper triangle in row-major order. ``v`` (optional)
    accumulates the rotations so its columns end up as eigenvectors. Returns
    (sweeps_used, final_off_diagonal_norm); the diagonal of ``a`` holds the
    eigenvalues once the returned norm is at or below ``threshold``.
    """
    n = a.shape[0]
    rows = a.tolist()
    vrows = v.tolist() if v is not None else None
    sweeps = 0
    off = _off_from_rows(rows, n)
    while off > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = rows[p][q]
                if apq == 0.0:
                    continue
                app = rows[p][p]
                aqq = rows[q][q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 1.0 / (2.0 * theta)
                else:
                    if theta >= 0.0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                rows[p][p] = app - t * apq
                rows[q][q] = aqq + t * apq
                rows[p][q] = 0.0
                rows[q][p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = rows[k][p]
                    akq = rows[k][q]
                    rkp = akp - s * (akq + tau * akp)
                    rkq = akq + s * (akp - tau * akq)
                    rows[k][p] = rkp
                    rows[p][k] = rkp
                    rows[k][q] = rkq
                    rows[q][k] = rkq
                if vrows is not None:
                    for k in range(n):
                        vkp = vrows[k][p]
                        vkq = vrows[k][q]
                        vrows[k][p] = vkp - s * (vkq + tau * vkp)
                        vrows[k][q] = vkq + s * (vkp - tau * vkq)
        sweeps += 1
        off = _off_from_rows(rows, n)
    for i in range(n):
        for j in range(n):
            a[i, j] = rows[i][j]
    if v is not None:
        for i in range(n):
            for j in range(n):
                v[i, j] = vrows[i][j]
    return sweeps, off


def _off_from_rows(rows, n: int) -> float:
    total = 0.0
    for p in range(n - 1):
        row = rows[p]
        for q in range(p + 1, n):
            total += 2.0 * row[q] * row[q]
    return sqrt(total)
