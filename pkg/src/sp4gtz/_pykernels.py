"""Pure-Python hot loops.  ``_kernels.pyx`` mirrors this file exactly."""
from fractions import Fraction
from math import factorial

# Projected lattice basis over the 9 working labels (see diagrams.py).
V = (
    (1, -1, 0, 0, 0, -1, 1, 0, 0),
    (-1, 0, 0, 1, 1, 0, 0, -1, 0),
    (-1, 0, 0, 1, 0, 1, 0, 0, -1),
)


def poly_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e, 0) + c1 * c2
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def support(p):
    """All (u, q) with q = p + u.V >= 0.

    Every coordinate of V is in {-1, 0, 1} and the constraints pin u to
    an explicit box: q1 = p1-u1, q6 = p6+u1, q4 = p4+u2, q7 = p7-u2,
    q8 = p8-u3, q5 = p5-u1+u3, q3 = p3+u2+u3; q0 is checked last.
    """
    out = []
    if p[2] < 0:
        return out
    for u1 in range(-p[6], p[1] + 1):
        for u2 in range(-p[4], p[7] + 1):
            for u3 in range(max(u1 - p[5], -p[3] - u2), p[8] + 1):
                q0 = p[0] + u1 - u2 - u3
                if q0 < 0:
                    continue
                q = (q0, p[1] - u1, p[2], p[3] + u2 + u3, p[4] + u2,
                     p[5] - u1 + u3, p[6] + u1, p[7] - u2, p[8] - u3)
                out.append(((u1, u2, u3), q))
    return out


def _falling(n, k):
    r = 1
    for i in range(k):
        r *= n - i
    return r


def layer_sum(base, s, signs):
    """Value at the all-ones point of a binomially weighted layer.

    Returns (num, den) with
    num/den = sum_u prod_i C(t_i + s_i, s_i) / prod_j q_j!,  t_i = signs_i*u_i.
    """
    n = sum(base)
    den = 1
    for si in s:
        den *= factorial(si)
    if n < 0:
        return 0, 1
    nf = factorial(n)
    num = 0
    for u, q in support(base):
        w = 1
        for i in range(3):
            w *= _falling(signs[i] * u[i] + s[i], s[i])
            if not w:
                break
        if w:
            m = nf
            for x in q:
                m //= factorial(x)
            num += w * m
    return num, den * nf


def gamma_terms(p):
    """Monomials and coefficients 1/q! of the Gamma-series on p + B."""
    out = {}
    for _, q in support(p):
        d = 1
        for x in q:
            d *= factorial(x)
        out[q] = Fraction(1, d)
    return out
