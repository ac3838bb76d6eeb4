"""Pure-Python GF(p) search kernels; reference semantics for the compiled ``_kernels`` module.

Candidates are numbered lexicographically: index ``t`` encodes the flattened ``n x n``
matrix whose entry ``k`` (row-major) is the ``k``-th base-``p`` digit of ``t``, most
significant first.  Structure constants are flat sequences of length ``n**3`` with
``c[(i*n + j)*n + k]`` the coefficient of ``e_k`` in ``e_i o e_j``, reduced mod ``p``.
"""

from __future__ import annotations


def decode(t: int, n: int, p: int) -> list[int]:
    m = n * n
    out = [0] * m
    for k in range(m - 1, -1, -1):
        t, out[k] = divmod(t, p)
    return out


def d_defect_is_zero(n: int, p: int, star, prec, succ, R) -> bool:
    nz = [(i, i2, R[i * n + i2]) for i in range(n) for i2 in range(n) if R[i * n + i2]]
    if not nz:
        return True
    acc = [0] * (n * n * n)
    for i, i2, a in nz:
        for j, j2, b in nz:
            w = a * b
            base = (i * n + j) * n
            for q in range(n):
                c = star[base + q]
                if c:
                    acc[(q * n + i2) * n + j2] += w * c
            base = (i2 * n + j2) * n
            for s in range(n):
                c = prec[base + s]
                if c:
                    acc[(i * n + j) * n + s] -= w * c
            base = (i * n + j2) * n
            for q in range(n):
                c = succ[base + q]
                if c:
                    acc[(j * n + q) * n + i2] -= w * c
    return all(v % p == 0 for v in acc)


def d_solutions(n: int, p: int, star, prec, succ, lo: int, hi: int) -> list[int]:
    return [t for t in range(lo, hi) if d_defect_is_zero(n, p, star, prec, succ, decode(t, n, p))]


def _bil(c, n, x, y):
    out = [0] * n
    for i in range(n):
        if x[i]:
            for j in range(n):
                if y[j]:
                    w = x[i] * y[j]
                    base = (i * n + j) * n
                    for k in range(n):
                        out[k] += w * c[base + k]
    return out


def rb_residual_is_zero(n: int, p: int, c, P, lam: int) -> bool:
    """``P(e_i) o P(e_j) - P(P(e_i) o e_j + e_i o P(e_j) + lam e_i o e_j)`` vanishes mod ``p``."""
    cols = [[P[k * n + i] for k in range(n)] for i in range(n)]
    units = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = _bil(c, n, cols[i], cols[j])
            a = _bil(c, n, cols[i], units[j])
            b = _bil(c, n, units[i], cols[j])
            base = (i * n + j) * n
            inner = [a[k] + b[k] + lam * c[base + k] for k in range(n)]
            for k in range(n):
                s = 0
                for m in range(n):
                    s += P[k * n + m] * inner[m]
                if (lhs[k] - s) % p:
                    return False
    return True


def rb_solutions(n: int, p: int, prec, succ, lam: int, lo: int, hi: int) -> list[int]:
    out = []
    for t in range(lo, hi):
        P = decode(t, n, p)
        if rb_residual_is_zero(n, p, prec, P, lam) and rb_residual_is_zero(n, p, succ, P, lam):
            out.append(t)
    return out
