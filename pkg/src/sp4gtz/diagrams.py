"""GTZ diagrams for sp4, the exponent lattice B and shift vectors.

Exponent vectors live on the 9 working labels of ``poly.COLUMNS``.  The
10-label layout (with a_{-2,2}) is kept for the 10-column lattice matrices and
converted with ``project`` / ``lift``.
"""
from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .poly import NLABELS, DetLabel

# 10-label layout: a-2, a-1, a1, a2, a-2-1, a-21, a-22, a-11, a-12, a12
LABELS10 = ("-2", "-1", "1", "2", "-2,-1", "-2,1", "-2,2", "-1,1", "-1,2", "1,2")

LATTICE10 = (
    (1, -1, 0, 0, 0, -1, 0, 1, 0, 0),
    (-1, 0, 0, 1, 1, 0, 0, 0, -1, 0),
    # the a_{1,2} entry is -1: with +1 the vector is not homogeneous
    (-1, 0, 0, 1, 0, 1, 0, 0, 0, -1),
)
R10 = (
    (-1, 0, 1, 0, 1, 0, 0, -1, 0, 0),
    (-1, 1, 0, 0, 0, 0, 1, 0, -1, 0),
    (-1, 0, 1, 0, 0, 0, 1, 0, 0, -1),
)


def project(v10) -> tuple[int, ...]:
    """10-label exponent vector to the working labels.

    a_{-2,2} = -a_{-1,1} and a_{-1,2} = -a_{2,-1}, a_{1,2} = -a_{2,1}; for
    lattice directions only the index set matters, so signs are dropped.
    """
    v = list(v10)
    return (v[0], v[1], v[2], v[3], v[4], v[5], v[7] + v[6], v[8], v[9])


def lift(v9) -> tuple[int, ...]:
    v = list(v9)
    return (v[0], v[1], v[2], v[3], v[4], v[5], 0, v[6], v[7], v[8])


def lattice_basis() -> tuple[tuple[int, ...], ...]:
    return LATTICE10


def r_vectors() -> tuple[tuple[int, ...], ...]:
    return R10


V = tuple(project(v) for v in LATTICE10)
R = tuple(project(r) for r in R10)
# The antisymmetrized system pairs r_i with the positive part of the
# oriented vector V_STAR[i]; for v2 and v3 that is the negated row.
ORIENT = (1, -1, -1)
V_STAR = tuple(tuple(o * x for x in v) for o, v in zip(ORIENT, V))
V_STAR_SUM = tuple(sum(col) for col in zip(*V_STAR))
ZERO = (0,) * NLABELS


def unit(lab: DetLabel | int) -> tuple[int, ...]:
    i = lab if isinstance(lab, int) else lab.index
    e = [0] * NLABELS
    e[i] = 1
    return tuple(e)


def vadd(a, b, k: int = 1) -> tuple[int, ...]:
    return tuple(x + k * y for x, y in zip(a, b))


def combo(base, coeffs, vecs) -> tuple[int, ...]:
    out = list(base)
    for c, v in zip(coeffs, vecs):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(out)


class OutsideChamber(ValueError):
    """Sums of an exponent vector violate the betweenness conditions."""


class HighestWeight(NamedTuple):
    m_2: int
    m_1: int

    def validate(self) -> "HighestWeight":
        if not self.m_2 >= self.m_1 >= 0:
            raise ValueError(f"invalid highest weight {tuple(self)}")
        return self


class GTZDiagram(NamedTuple):
    """Entries (m_{-2}, m_{-1}, k_{-2}, k_{-1}, h_{-2}, h_{-1})."""

    m_2: int
    m_1: int
    k_2: int
    k_1: int
    h_2: int
    h_1: int

    @property
    def weight(self) -> HighestWeight:
        return HighestWeight(self.m_2, self.m_1)

    def is_valid(self) -> bool:
        m2, m1, k2, k1, h2, h1 = self
        return m2 >= k2 >= m1 >= k1 >= 0 and k2 >= h2 >= k1 and h2 >= h1 >= 0

    def validate(self) -> "GTZDiagram":
        if not self.is_valid():
            raise ValueError(f"invalid diagram {tuple(self)}")
        return self

    def to_json(self) -> list[int]:
        return list(self)


def order_key(d: GTZDiagram):
    tail = (d.k_2, d.k_1, d.h_2, d.h_1)
    return (sum(tail), tail)


def enumerate_diagrams(w) -> list[GTZDiagram]:
    m2, m1 = HighestWeight(*w).validate()
    out = [
        GTZDiagram(m2, m1, k2, k1, h2, h1)
        for k2 in range(m1, m2 + 1)
        for k1 in range(0, m1 + 1)
        for h2 in range(k1, k2 + 1)
        for h1 in range(0, h2 + 1)
    ]
    out.sort(key=order_key)
    return out


def highest_diagram(w) -> GTZDiagram:
    m2, m1 = HighestWeight(*w).validate()
    return GTZDiagram(m2, m1, m2, m1, m2, m2)


def weyl_dimension(w) -> int:
    a, b = w
    return (a - b + 1) * (a + b + 3) * (a + 2) * (b + 1) // 6


def ur_sums(e) -> tuple[int, ...]:
    """The six linear functionals that cut out a class mod B.

    Order matches the diagram entries (m_{-2}, m_{-1}, k_{-2}, k_{-1},
    h_{-2}, h_{-1}).
    """
    total = sum(e)
    two = e[4] + e[5] + e[6] + e[7] + e[8]
    k2 = total - e[2]
    k1 = e[4] + e[7]
    h2 = e[0] + e[3] + e[4] + e[5] + e[7] + e[8]
    h1 = e[0] + e[4] + e[5]
    return (total, two, k2, k1, h2, h1)


def same_class(a, b) -> bool:
    """a - b in B.  B is saturated, so equal sums suffice."""
    return ur_sums(a) == ur_sums(b)


def lattice_coords(diff) -> tuple[int, int, int]:
    """Integer t with diff = t . V; raises if diff is not in B."""
    # coordinate 6 sees only v1, 4 only v2, 8 only v3 (with sign)
    t = (diff[6], diff[4], -diff[8])
    if combo(ZERO, t, V) != tuple(diff):
        raise ValueError(f"{diff} is not in the lattice")
    return t


def diagram_to_shift(d) -> tuple[int, ...]:
    m2, m1, k2, k1, h2, h1 = GTZDiagram(*d).validate()
    # gl3 shift on a-2, a-1, a1, a-2-1, a-21, a-11
    g = [h2 - m1, k2 - h2, m2 - k2, 0, k1, m1 - k1, 0, 0, 0]
    # lower by h2-h1 with the divided power of F_{2,-2}, greedily:
    # a_{-2,-1} -> a_{2,-1}, then a_{-2} -> a_2, then a_{-2,1} -> a_{2,1}
    n = h2 - h1
    for src, dst in ((4, 7), (0, 3), (5, 8)):
        mv = min(max(g[src], 0), n)
        g[src] -= mv
        g[dst] += mv
        n -= mv
    g[0] -= n
    g[3] += n
    g = tuple(g)
    assert ur_sums(g) == tuple(d), (d, g)
    return g


def shift_to_diagram(gamma) -> GTZDiagram:
    d = GTZDiagram(*ur_sums(gamma))
    if not d.is_valid():
        raise OutsideChamber(f"sums {tuple(d)} are outside the Weyl chamber")
    return d


def apply_transform(d, X: DetLabel, Y: DetLabel, p=(0, 0, 0)) -> GTZDiagram | None:
    """Diagram of gamma - e_Y + e_X + p.r, or None when outside."""
    g = diagram_to_shift(d)
    g = combo(vadd(vadd(g, unit(Y), -1), unit(X)), p, R)
    try:
        return shift_to_diagram(g)
    except OutsideChamber:
        return None


def r_transform(p) -> tuple[int, int, int, int]:
    """Change of (k_{-2}, k_{-1}, h_{-2}, h_{-1}) when p.r is added."""
    delta = ur_sums(combo(ZERO, p, R))
    return delta[2:]


def sign_box(gamma, direction: int) -> tuple[int, int, int]:
    """Bounds on s for which gamma + direction*s.r can have support.

    For a nonnegative vector the sums satisfy m_{-2} >= k_{-2},
    k_{-2} >= h_{-2} >= h_{-1} >= 0, m_{-1} >= k_{-1} >= 0.  Adding r
    lowers k_{-2} (r1, r3) and h_{-1} (r2, r3); subtracting r lowers
    m_{-2}-k_{-2} (r1, r3) and m_{-1}-k_{-1} or k_{-2}-h_{-2} (r2).
    """
    m2, m1, k2, k1, h2, h1 = ur_sums(gamma)
    if direction > 0:
        return (k2, h1, min(k2, h1))
    a = m2 - k2
    return (a, m1 - k1 + a, a)


def s_range(gamma, direction: int):
    b = sign_box(gamma, direction)
    if min(b) < 0:
        return []
    return sorted(product(*(range(x + 1) for x in b)), key=lambda s: (sum(s), s))

