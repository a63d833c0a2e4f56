# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_pykernels``."""
from fractions import Fraction
from math import factorial

V = (
    (1, -1, 0, 0, 0, -1, 1, 0, 0),
    (-1, 0, 0, 1, 1, 0, 0, -1, 0),
    (-1, 0, 0, 1, 0, 1, 0, 0, -1),
)

cdef list _FACT = [factorial(i) for i in range(64)]


cdef inline object _fact(long n):
    if n < 64:
        return _FACT[n]
    return factorial(n)


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple e1, e2, e
    cdef Py_ssize_t i, n
    for e1, c1 in a.items():
        n = len(e1)
        for e2, c2 in b.items():
            e = tuple([<long>e1[i] + <long>e2[i] for i in range(n)])
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    return out


cdef list _support(long[9] p):
    cdef list out = []
    cdef long u1, u2, u3, q0, lo3
    if p[2] < 0:
        return out
    for u1 in range(-p[6], p[1] + 1):
        for u2 in range(-p[4], p[7] + 1):
            lo3 = u1 - p[5]
            if -p[3] - u2 > lo3:
                lo3 = -p[3] - u2
            for u3 in range(lo3, p[8] + 1):
                q0 = p[0] + u1 - u2 - u3
                if q0 < 0:
                    continue
                out.append(((u1, u2, u3), (q0, p[1] - u1, p[2], p[3] + u2 + u3, p[4] + u2,
                                           p[5] - u1 + u3, p[6] + u1, p[7] - u2, p[8] - u3)))
    return out


cdef void _load(object base, long[9] p):
    cdef int i
    for i in range(9):
        p[i] = base[i]


def support(base):
    cdef long p[9]
    _load(base, p)
    return _support(p)


def layer_sum(base, s, signs):
    cdef long p[9]
    cdef long sv[3]
    cdef long sg[3]
    cdef long n = 0, t, k
    cdef int i, j
    _load(base, p)
    for i in range(9):
        n += p[i]
    for i in range(3):
        sv[i] = s[i]
        sg[i] = signs[i]
    den = 1
    for i in range(3):
        den *= _fact(sv[i])
    if n < 0:
        return 0, 1
    nf = _fact(n)
    num = 0
    for u, q in _support(p):
        w = 1
        for i in range(3):
            t = sg[i] * <long>u[i] + sv[i]
            for k in range(sv[i]):
                w *= t - k
            if not w:
                break
        if w:
            m = nf
            for j in range(9):
                m //= _fact(<long>q[j])
            num += w * m
    return num, den * nf


def gamma_terms(base):
    cdef long p[9]
    cdef int j
    _load(base, p)
    out = {}
    for _, q in _support(p):
        d = 1
        for j in range(9):
            d *= _fact(<long>q[j])
        out[q] = Fraction(1, d)
    return out
