# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(p) search kernels (same contract as ``_kernels_py``)."""

from libc.stdlib cimport malloc, free, calloc
from libc.string cimport memset


cdef long long* _carray(seq, Py_ssize_t m, long long p) except NULL:
    cdef long long* out = <long long*> malloc(max(m, 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    for k in range(m):
        out[k] = (<long long> seq[k]) % p
        if out[k] < 0:
            out[k] += p
    return out


cdef void _decode(long long t, int m, long long p, long long* digits) noexcept nogil:
    cdef int k
    for k in range(m - 1, -1, -1):
        digits[k] = t % p
        t = t // p


cdef bint _advance(int m, long long p, long long* digits) noexcept nogil:
    cdef int k = m - 1
    while k >= 0:
        digits[k] += 1
        if digits[k] < p:
            return True
        digits[k] = 0
        k -= 1
    return False


cdef bint _d_zero(int n, long long p, long long* star, long long* prec, long long* succ,
                  long long* R, long long* acc, int* nzi, int* nzj) noexcept nogil:
    cdef int m = n * n
    cdef int cnt = 0, a, b, i, i2, j, j2, q, s, base
    cdef long long w, c
    for a in range(m):
        if R[a]:
            nzi[cnt] = a // n
            nzj[cnt] = a % n
            cnt += 1
    if cnt == 0:
        return True
    memset(acc, 0, n * n * n * sizeof(long long))
    for a in range(cnt):
        i = nzi[a]
        i2 = nzj[a]
        for b in range(cnt):
            j = nzi[b]
            j2 = nzj[b]
            w = (R[i * n + i2] * R[j * n + j2]) % p
            base = (i * n + j) * n
            for q in range(n):
                c = star[base + q]
                if c:
                    acc[(q * n + i2) * n + j2] = (acc[(q * n + i2) * n + j2] + w * c) % p
            base = (i2 * n + j2) * n
            for s in range(n):
                c = prec[base + s]
                if c:
                    acc[(i * n + j) * n + s] = (acc[(i * n + j) * n + s] - w * c) % p
            base = (i * n + j2) * n
            for q in range(n):
                c = succ[base + q]
                if c:
                    acc[(j * n + q) * n + i2] = (acc[(j * n + q) * n + i2] - w * c) % p
    for a in range(n * n * n):
        if acc[a] % p:
            return False
    return True


def d_solutions(int n, long long p, star, prec, succ, long long lo, long long hi):
    cdef int m = n * n
    cdef long long* cs = _carray(star, n * m, p)
    cdef long long* cp = _carray(prec, n * m, p)
    cdef long long* cu = _carray(succ, n * m, p)
    cdef long long* R = <long long*> calloc(m, sizeof(long long))
    cdef long long* acc = <long long*> calloc(n * m, sizeof(long long))
    cdef int* nzi = <int*> calloc(m, sizeof(int))
    cdef int* nzj = <int*> calloc(m, sizeof(int))
    cdef long long t
    out = []
    try:
        if R == NULL or acc == NULL or nzi == NULL or nzj == NULL:
            raise MemoryError()
        if lo >= hi:
            return out
        _decode(lo, m, p, R)
        t = lo
        while t < hi:
            if _d_zero(n, p, cs, cp, cu, R, acc, nzi, nzj):
                out.append(t)
            t += 1
            _advance(m, p, R)
        return out
    finally:
        free(cs); free(cp); free(cu); free(R); free(acc); free(nzi); free(nzj)


cdef bint _rb_zero(int n, long long p, long long* c, long long* P, long long lam,
                   long long* lhs, long long* inner) noexcept nogil:
    cdef int i, j, k, a, b, base
    cdef long long s, w
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs[k] = 0
                inner[k] = (lam * c[(i * n + j) * n + k]) % p
            # P(e_i) o P(e_j)
            for a in range(n):
                if P[a * n + i]:
                    for b in range(n):
                        if P[b * n + j]:
                            w = (P[a * n + i] * P[b * n + j]) % p
                            base = (a * n + b) * n
                            for k in range(n):
                                lhs[k] = (lhs[k] + w * c[base + k]) % p
            # P(e_i) o e_j + e_i o P(e_j)
            for a in range(n):
                if P[a * n + i]:
                    base = (a * n + j) * n
                    for k in range(n):
                        inner[k] = (inner[k] + P[a * n + i] * c[base + k]) % p
                if P[a * n + j]:
                    base = (i * n + a) * n
                    for k in range(n):
                        inner[k] = (inner[k] + P[a * n + j] * c[base + k]) % p
            for k in range(n):
                s = 0
                for a in range(n):
                    s = (s + P[k * n + a] * inner[a]) % p
                if (lhs[k] - s) % p:
                    return False
    return True


def rb_solutions(int n, long long p, prec, succ, long long lam, long long lo, long long hi):
    cdef int m = n * n
    cdef long long* cp = _carray(prec, n * m, p)
    cdef long long* cu = _carray(succ, n * m, p)
    cdef long long* P = <long long*> calloc(m, sizeof(long long))
    cdef long long* lhs = <long long*> calloc(n, sizeof(long long))
    cdef long long* inner = <long long*> calloc(n, sizeof(long long))
    cdef long long t
    lam = lam % p
    out = []
    try:
        if P == NULL or lhs == NULL or inner == NULL:
            raise MemoryError()
        if lo >= hi:
            return out
        _decode(lo, m, p, P)
        t = lo
        while t < hi:
            if _rb_zero(n, p, cp, P, lam, lhs, inner) and _rb_zero(n, p, cu, P, lam, lhs, inner):
                out.append(t)
            t += 1
            _advance(m, p, P)
        return out
    finally:
        free(cp); free(cu); free(P); free(lhs); free(inner)
