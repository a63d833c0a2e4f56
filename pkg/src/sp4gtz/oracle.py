"""Brute-force realization on the first two rows of a group element.

Entry variables x[c, r] stand for a_c^r, column c in {-2,-1,1,2} and row
r in {-2,-1}.  Functions are reduced modulo the symplectic condition
det(-2,2) + det(-1,1) = 0 on those rows, which holds on Sp4 and is
needed for a_{-2,2} = -a_{-1,1}.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .diagrams import enumerate_diagrams, diagram_to_shift, GTZDiagram
from .gamma import realize_gamma
from .poly import COLUMNS, LABELS, NLABELS, DetLabel, Poly

COLS = (-2, -1, 1, 2)
ROWS = (-2, -1)
ENTRIES = tuple((c, r) for r in ROWS for c in COLS)
NENTRIES = len(ENTRIES)
_EIDX = {e: i for i, e in enumerate(ENTRIES)}
ENTRY_NAMES = [f"a[{c}]^{r}" for c, r in ENTRIES]


def entry(c: int, r: int) -> Poly:
    return Poly.var(NENTRIES, _EIDX[(c, r)])


def _minor(i: int, j: int) -> Poly:
    return entry(i, -2) * entry(j, -1) - entry(j, -2) * entry(i, -1)


def det_poly(lab: DetLabel) -> Poly:
    """The minor (or entry) that a working label stands for, unreduced."""
    cols = lab.columns
    if len(cols) == 1:
        return entry(cols[0], -2)
    return _minor(*cols)


def det_of_columns(cols) -> Poly:
    return entry(cols[0], -2) if len(cols) == 1 else _minor(*cols)


# normal form modulo q = det(-2,2) + det(-1,1): rewrite x[-2,-2] x[2,-1]
_LA, _LB = _EIDX[(-2, -2)], _EIDX[(2, -1)]
_REPL = entry(2, -2) * entry(-2, -1) - entry(-1, -2) * entry(1, -1) + entry(1, -2) * entry(-1, -1)
SYMPLECTIC = _minor(-2, 2) + _minor(-1, 1)


@lru_cache(maxsize=None)
def _repl_power(k: int) -> Poly:
    return Poly.const(NENTRIES, 1) if k == 0 else _repl_power(k - 1) * _REPL


def reduce_symplectic(p: Poly) -> Poly:
    out: dict = {}
    for e, c in p.terms.items():
        k = min(e[_LA], e[_LB])
        if k == 0:
            items = ((e, c),)
        else:
            ne = list(e)
            ne[_LA] -= k
            ne[_LB] -= k
            items = ((m, v * c) for m, v in (Poly.monomial(tuple(ne)) * _repl_power(k)).terms.items())
        for m, v in items:
            s = out.get(m, 0) + v
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return Poly(NENTRIES, out, _trusted=True)


@lru_cache(maxsize=None)
def _det_power(i: int, k: int) -> Poly:
    if k == 0:
        return Poly.const(NENTRIES, 1)
    return reduce_symplectic(_det_power(i, k - 1) * det_poly(LABELS[i]))


def realize(p: Poly) -> Poly:
    """Substitute minors for determinant variables, then reduce."""
    out = Poly.zero(NENTRIES)
    for e, c in p.terms.items():
        t = Poly.const(NENTRIES, c)
        for i, k in enumerate(e):
            if k:
                t = t * _det_power(i, k)
        out = out + t
    return reduce_symplectic(out)


def act_E(i: int, j: int, p: Poly) -> Poly:
    """E_{i,j} = sum_r x[i,r] d/dx[j,r]: replaces column j by column i."""
    out = Poly.zero(NENTRIES)
    for r in ROWS:
        d = p.deriv(_EIDX[(j, r)])
        if d:
            out = out + entry(i, r) * d
    return out


def _sgn(i: int) -> int:
    return 1 if i > 0 else -1


def act_F(i: int, j: int, p: Poly, reduce: bool = True) -> Poly:
    out = act_E(i, j, p) - act_E(-j, -i, p).scale(_sgn(i) * _sgn(j))
    return reduce_symplectic(out) if reduce else out


# --------------------------------------------------------------- vectors

def _fact(n: int) -> int:
    r = 1
    for k in range(2, n + 1):
        r *= k
    return r


def _mono(exps: dict, coeff) -> Poly:
    e = [0] * NLABELS
    for cols, k in exps.items():
        e[COLUMNS.index(cols)] += k
    return Poly.monomial(tuple(e), coeff)


def gl3_sum(d) -> Poly:
    """Highest vector for sp2 attached to the gl3 part of ``d``."""
    m2, m1, k2, k1, h2, _ = d
    out = Poly.zero(NLABELS)
    pre = Fraction(1, _fact(m2 - k2) * _fact(k1))
    for p_1 in range(0, k2 - h2 + 1):
        p_2 = k2 - m1 - p_1
        p_11 = k2 - h2 - p_1
        p_21 = m1 - k1 - p_11
        if min(p_2, p_11, p_21) < 0:
            continue
        c = pre / (_fact(p_1) * _fact(p_2) * _fact(p_11) * _fact(p_21))
        out = out + _mono({(1,): m2 - k2, (-2, -1): k1, (-1,): p_1, (-2,): p_2,
                           (-1, 1): p_11, (-2, 1): p_21}, c)
    return out


def lowered_sum(d) -> Poly:
    """The gl3 sum after the divided power of E_{2,-2}, term by term."""
    m2, m1, k2, k1, h2, h1 = d
    n = h2 - h1
    out = Poly.zero(NLABELS)
    for e, c in gl3_sum(d).terms.items():
        a1, am1, am2, aa, ab, am11 = e[2], e[1], e[0], e[4], e[5], e[6]
        # split a_{-2,-1}, a_{-2}, a_{-2,1} exponents into kept and moved parts
        for k_, p_, q_ in product(range(aa + 1), range(am2 + 1), range(ab + 1)):
            if k_ + p_ + q_ != n:
                continue
            coef = c * _fact(aa) * _fact(am2) * _fact(ab)
            coef /= _fact(aa - k_) * _fact(k_) * _fact(am2 - p_) * _fact(p_) * _fact(ab - q_) * _fact(q_)
            out = out + _mono({(1,): a1, (-1,): am1, (-1, 1): am11,
                               (-2, -1): aa - k_, (2, -1): k_,
                               (-2,): am2 - p_, (2,): p_,
                               (-2, 1): ab - q_, (2, 1): q_}, coef)
    return out


def operator_construction(d) -> Poly:
    """F_{2,-2}^n / (2^n n!) applied to the realized gl3 sum."""
    m2, m1, k2, k1, h2, h1 = d
    v = realize(gl3_sum(d))
    for step in range(1, h2 - h1 + 1):
        v = act_F(2, -2, v).scale(Fraction(1, 2 * step))
    return v


def zhelobenko_vector(d) -> Poly:
    from .gamma import TheoremViolation

    d = GTZDiagram(*d).validate()
    explicit = realize(lowered_sum(d))
    operator = operator_construction(d)
    series = basis_vector(d)
    if not explicit == operator == series:
        raise TheoremViolation("vector constructions disagree", diagram=d, explicit=explicit,
                               operator=operator, series=series)
    return series


@lru_cache(maxsize=None)
def basis_vector(d) -> Poly:
    return realize(realize_gamma(diagram_to_shift(d)))


# ------------------------------------------------------- linear algebra

class NotInSpan(ValueError):
    pass


class SpanSolver:
    """Incremental row echelon form over the rationals with tracking."""

    def __init__(self, vectors=()):
        self.pivots: list = []   # (monomial, vector, combination)
        self.size = 0
        self.independent = True
        for v in vectors:
            self.add(v)

    def _reduce(self, vec: dict, combo: dict):
        for mon, pv, pc in self.pivots:
            c = vec.get(mon)
            if c:
                for m, x in pv.items():
                    y = vec.get(m, 0) - c * x
                    if y:
                        vec[m] = y
                    else:
                        vec.pop(m, None)
                for k, x in pc.items():
                    y = combo.get(k, 0) - c * x
                    if y:
                        combo[k] = y
                    else:
                        combo.pop(k, None)
        return vec, combo

    def add(self, p: Poly) -> bool:
        idx = self.size
        self.size += 1
        vec, combo = self._reduce(dict(p.terms), {idx: Fraction(1)})
        if not vec:
            self.independent = False
            return False
        mon = max(vec)
        c = vec[mon]
        self.pivots.append((mon, {m: x / c for m, x in vec.items()}, {k: x / c for k, x in combo.items()}))
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve(self, p: Poly) -> list[Fraction]:
        vec = dict(p.terms)
        out: dict = {}
        for mon, pv, pc in self.pivots:
            c = vec.get(mon)
            if c:
                for m, x in pv.items():
                    y = vec.get(m, 0) - c * x
                    if y:
                        vec[m] = y
                    else:
                        vec.pop(m, None)
                for k, x in pc.items():
                    out[k] = out.get(k, 0) + c * x
        if vec:
            raise NotInSpan("not in representation space")
        return [Fraction(out.get(k, 0)) for k in range(self.size)]


def rank(polys) -> int:
    return SpanSolver(polys).rank


ALGEBRA_GENERATORS = ((-2, -2), (-1, -1), (2, -2), (-2, 2), (-2, 1), (1, -2))


def highest_vector(w) -> Poly:
    m2, m1 = w
    return realize(Poly.monomial(tuple(
        (m2 - m1 if lab == DetLabel((-2,)) else m1 if lab == DetLabel((-2, -1)) else 0)
        for lab in LABELS), 1))


def representation_dimension(w) -> int:
    """Dimension of the span of v0 closed under the six generators.

    Uses no diagram data, so it is an independent count.
    """
    span = SpanSolver()
    todo = [highest_vector(tuple(w))]
    span.add(todo[0])
    while todo:
        p = todo.pop()
        for i, j in ALGEBRA_GENERATORS:
            q = act_F(i, j, p)
            if q and span.add(q):
                todo.append(q)
    return span.rank


@lru_cache(maxsize=None)
def basis_solver(w) -> SpanSolver:
    s = SpanSolver(basis_vector(d) for d in enumerate_diagrams(tuple(w)))
    if not s.independent:
        raise ValueError(f"basis vectors of weight {tuple(w)} are dependent")
    return s


def expand_in_basis(p: Poly, w) -> list[Fraction]:
    return basis_solver(tuple(w)).solve(p)


def oracle_columns(w, gen) -> dict:
    """Sparse matrix {(row, col): value} of a generator, from the oracle."""
    i, j = gen
    out = {}
    for col, d in enumerate(enumerate_diagrams(tuple(w))):
        for row, c in enumerate(expand_in_basis(act_F(i, j, basis_vector(d)), w)):
            if c:
                out[(row, col)] = c
    return out


def label_action(i: int, j: int) -> dict:
    """F_{i,j} on each working variable as {Y: (coef, X)} (X None for 0)."""
    out = {}
    images = [reduce_symplectic(det_poly(lab)) for lab in LABELS]
    for y, lab in enumerate(LABELS):
        img = act_F(i, j, images[y])
        if not img:
            continue
        hit = None
        for x in range(NLABELS):
            target = images[x]
            mon = max(target.terms)
            k = img.coeff(mon) / target.coeff(mon)
            if k and img == target.scale(k):
                hit = (k, LABELS[x])
                break
        if hit is None:
            raise ValueError(f"F({i},{j}) does not map {lab} to a variable")
        out[lab] = hit
    return out


__all__ = [
    "ALGEBRA_GENERATORS", "ENTRIES", "ENTRY_NAMES", "NotInSpan", "SpanSolver", "act_E", "act_F", "basis_vector",
    "det_of_columns", "det_poly", "expand_in_basis", "label_action",
    "highest_vector", "oracle_columns", "rank", "realize", "representation_dimension", "reduce_symplectic", "zhelobenko_vector",
]
