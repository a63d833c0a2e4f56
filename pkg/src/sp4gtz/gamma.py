"""Finite Gamma-series on shifted lattices and the F^s / F hierarchy."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb

from . import kernels
from .diagrams import (
    ORIENT, R, V, V_STAR, V_STAR_SUM, ZERO, OutsideChamber, combo, diagram_to_shift, s_range,
    shift_to_diagram, sign_box, unit, ur_sums, vadd,
)
from .poly import LABEL_NAMES, NLABELS, DetLabel, Poly, det_var


class TheoremViolation(AssertionError):
    """A dual-path identity failed; carries both sides."""

    def __init__(self, message, **data):
        super().__init__(message)
        self.data = data


# ------------------------------------------------------------ Gamma-series

def support_points(gamma) -> list[tuple[int, ...]]:
    return [q for _, q in kernels.support(tuple(gamma))]


@lru_cache(maxsize=4096)
def _gamma_terms(gamma):
    return kernels.gamma_terms(gamma)


def realize_gamma(gamma) -> Poly:
    return Poly(NLABELS, dict(_gamma_terms(tuple(gamma))), _trusted=True)


def euler(p: Poly, xi) -> Poly:
    """sum_i xi_i A_i d/dA_i."""
    return Poly(NLABELS, {e: c * sum(a * b for a, b in zip(xi, e))
                          for e, c in p.terms.items()
                          if sum(a * b for a, b in zip(xi, e))}, _trusted=True)


# rows of the six sum functionals; together they span the annihilator of B
SUM_FUNCTIONALS = tuple(
    tuple(ur_sums(unit(i))[k] for i in range(NLABELS)) for k in range(6)
)


def split(b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(max(x, 0) for x in b), tuple(max(-x, 0) for x in b)


def check_gkz(gamma, poly: Poly | None = None) -> bool:
    """Homogeneity equations and box equations for v1, v2, v3."""
    f = realize_gamma(gamma) if poly is None else poly
    for xi in SUM_FUNCTIONALS:
        val = sum(a * b for a, b in zip(xi, gamma))
        if euler(f, xi) != f.scale(val):
            return False
    for b in V:
        plus, minus = split(b)
        if f.apply_derivative(plus) != f.apply_derivative(minus):
            return False
    return True


# ------------------------------------------------------ Plucker relations

def _rel(*terms) -> Poly:
    out = Poly.zero(NLABELS)
    for coef, a, b in terms:
        out = out + (det_var(*a) * det_var(*b)).scale(coef)
    return out


# three-term relations paired with (v_i, r_i); written in working labels
PLUCKER = (
    _rel((1, (-2,), (-1, 1)), (-1, (-1,), (-2, 1)), (1, (1,), (-2, -1))),
    _rel((1, (2,), (-2, -1)), (-1, (-2,), (2, -1)), (1, (-1,), (-1, 1))),
    _rel((1, (2,), (-2, 1)), (-1, (-2,), (2, 1)), (1, (1,), (-1, 1))),
)
# quadratic relations that are not consequences of the three above
EXTRA_RELATIONS = (
    _rel((1, (2,), (-1, 1)), (-1, (-1,), (2, 1)), (1, (1,), (2, -1))),
    _rel((1, (-2, 1), (2, -1)), (-1, (-2, -1), (2, 1)), (-1, (-1, 1), (-1, 1))),
)


def apply_relation(rel: Poly, f: Poly) -> Poly:
    """rel(d/dA) applied to f."""
    out = Poly.zero(NLABELS)
    for e, c in rel.terms.items():
        out = out + f.apply_derivative(e).scale(c)
    return out


def obar(i: int, f: Poly) -> Poly:
    """Antisymmetrized operator number i (0-based)."""
    return apply_relation(PLUCKER[i], f)


def box(i: int, f: Poly) -> Poly:
    """Plain GKZ box operator for the i-th lattice vector."""
    plus, minus = split(V[i])
    return f.apply_derivative(plus) - f.apply_derivative(minus)


def box_star(i: int, f: Poly) -> Poly:
    """Box operator for the oriented vector v*_i."""
    return box(i, f).scale(ORIENT[i])


def layer_descent(gamma, s, i: int) -> Poly:
    """d^(P(v*_i) + r_i) applied to f_s(gamma, s - e_i).

    Equals box_star(i, f_s(gamma, s)) by Pascal's rule on the i-th weight.
    """
    if s[i] == 0:
        return Poly.zero(NLABELS)
    lower = tuple(x - (k == i) for k, x in enumerate(s))
    third = vadd(split(V_STAR[i])[0], R[i])
    return f_s(gamma, lower).apply_derivative(third)


# ------------------------------------------------------ layered solutions

def layer_sign(s) -> int:
    return -1 if s[0] % 2 else 1


def f_s(gamma, s) -> Poly:
    """Binomially weighted layer sum_t C(t+s, s) A^(gamma-s.r+t.v*)/(...)!."""
    base = combo(gamma, [-x for x in s], R)
    out = {}
    for u, q in kernels.support(base):
        w = Fraction(1)
        for i in range(3):
            w *= binom_poly(ORIENT[i] * u[i] + s[i], s[i])
            if not w:
                break
        if w:
            d = 1
            for x in q:
                d *= _fact(x)
            out[q] = w / d
    return Poly(NLABELS, out, _trusted=True)


@lru_cache(maxsize=None)
def layer_at_one(base, s) -> Fraction:
    """f_s(base + s.r, s) evaluated at A = 1, i.e. the layer around ``base``."""
    num, den = kernels.layer_sum(tuple(base), tuple(s), ORIENT)
    return Fraction(num, den)


def f_s_at_one(gamma, s) -> Fraction:
    return layer_at_one(combo(gamma, [-x for x in s], R), tuple(s))


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return 1 if n < 2 else n * _fact(n - 1)


def binom_poly(n: int, k: int) -> Fraction:
    """n(n-1)...(n-k+1)/k!, a polynomial in n; zero for k < 0."""
    if k < 0:
        return Fraction(0)
    num = 1
    for i in range(k):
        num *= n - i
    return Fraction(num, _fact(k))


@dataclass
class GradedSolution:
    shift: tuple[int, ...]
    layers: dict = field(default_factory=dict)

    def total(self) -> Poly:
        out = Poly.zero(NLABELS)
        for s in sorted(self.layers):
            out = out + self.layers[s].scale(layer_sign(s))
        return out

    def to_json(self) -> dict:
        return {
            "shift": list(self.shift),
            "layers": [
                {"s": list(s), "sign": layer_sign(s), "poly": self.layers[s].to_json(LABEL_NAMES)}
                for s in sorted(self.layers)
            ],
        }


def f_full(gamma) -> GradedSolution:
    gamma = tuple(gamma)
    layers = {}
    for s in s_range(gamma, -1):
        p = f_s(gamma, s)
        if p:
            layers[s] = p
    return GradedSolution(gamma, layers)


@lru_cache(maxsize=2048)
def f_total(gamma) -> Poly:
    return f_full(gamma).total()


# -------------------------------------------------------- operator expansion

@dataclass
class OperatorExpansion:
    gamma: tuple
    omega: tuple
    coeffs: dict  # j -> coefficient of F_{omega-gamma-j.r}
    direct: Poly
    expanded: Poly


def apply_gamma_operator(gamma, omega) -> OperatorExpansion:
    """Gamma_gamma(d/dA) F_omega computed directly and via the expansion.

    The expansion side is sum_j (-1)^{j1} F^j_{gamma+v*+j.r}(1) F_{omega-gamma-j.r}
    with v* the sum of the oriented lattice basis.
    """
    gamma, omega = tuple(gamma), tuple(omega)
    f_om = f_total(omega)
    direct = Poly.zero(NLABELS)
    for e, c in realize_gamma(gamma).terms.items():
        direct = direct + f_om.apply_derivative(e).scale(c)
    base = vadd(gamma, V_STAR_SUM)
    rest = vadd(omega, gamma, -1)
    coeffs = {}
    expanded = Poly.zero(NLABELS)
    for j in s_range(rest, -1):
        c = layer_sign(j) * layer_at_one(base, j)
        if not c:
            continue
        target = combo(rest, [-x for x in j], R)
        term = f_total(target)
        if term:
            coeffs[j] = c
            expanded = expanded + term.scale(c)
    if direct != expanded:
        raise TheoremViolation("operator expansion mismatch", gamma=gamma, omega=omega,
                               direct=direct, expanded=expanded)
    return OperatorExpansion(gamma, omega, coeffs, direct, expanded)


# ------------------------------------------------------- product expansion

@dataclass
class ProductExpansion:
    delta: tuple          # gamma - e_Y
    X: DetLabel
    closed: dict          # s -> c_s, full Neumann series of the system
    triangular: dict      # s -> c_s by forward substitution
    first_order: dict         # s -> c_s, Neumann series cut after the first correction
    skipped: dict         # zero-pivot rows with a nonzero residual
    order: int            # number of nonzero Neumann terms

    @property
    def coeffs(self) -> dict:
        return self.closed

    def targets(self):
        """(p, shift of the Gamma-series, coefficient)."""
        dx = vadd(self.delta, unit(self.X))
        return [(p, combo(dx, p, R), c) for p, c in sorted(self.closed.items())]


def product_coeffs(gamma, X: DetLabel, Y: DetLabel) -> ProductExpansion:
    """A_X Gamma_{gamma-e_Y} = sum_p c_p Gamma_{gamma-e_Y+e_X+p.r} mod Plucker."""
    delta = vadd(tuple(gamma), unit(Y), -1)
    return product_expansion(delta, X)


@lru_cache(maxsize=None)
def product_expansion(delta, X: DetLabel) -> ProductExpansion:
    """Solve the lower-triangular system D c + N c = b two ways.

    Rows are s in the finite box where gamma-e_Y+e_X+s.r can have support.
    Rows whose pivot D_s vanishes carry no unknown and are left out; their
    residuals are kept in ``skipped``.
    """
    dx = vadd(delta, unit(X))
    box = sign_box(dx, 1)
    # one extra shell: its pivots must vanish, and its residuals are logged
    rows = sorted(product(*(range(max(b, -1) + 2) for b in box)), key=lambda s: (sum(s), s))
    d_base = vadd(delta, V_STAR_SUM)
    x_base = vadd(dx, V_STAR_SUM)

    def alpha(s):
        return layer_sign(s) * layer_at_one(d_base, s)

    def beta(p, s):
        j = tuple(a - b for a, b in zip(s, p))
        return layer_sign(j) * layer_at_one(combo(x_base, p, R), j)

    pivots = {s: layer_at_one(combo(dx, s, R), (0, 0, 0)) for s in rows}
    unknowns = [s for s in rows if pivots[s]]
    if any(a > b for s in unknowns for a, b in zip(s, box)):
        raise TheoremViolation("support outside the computed box", delta=delta, X=X)

    def below(p, s):
        return p != s and all(a <= b for a, b in zip(p, s))

    tri, skipped = {}, {}
    for s in rows:
        rhs = alpha(s) - sum((tri[p] * beta(p, s) for p in tri if below(p, s)), Fraction(0))
        if pivots[s]:
            tri[s] = rhs / pivots[s]
        elif rhs:
            skipped[s] = rhs

    # c = sum_k (-D^-1 N)^k D^-1 b; N is strictly lower so the sum is finite
    lower = {s: [(p, beta(p, s)) for p in unknowns if below(p, s)] for s in unknowns}
    lower = {s: [(p, b) for p, b in ps if b] for s, ps in lower.items()}
    term = {s: alpha(s) / pivots[s] for s in unknowns}
    term = {s: c for s, c in term.items() if c}
    closed, first_order, order = {}, {}, 0
    while term:
        for s, c in term.items():
            closed[s] = closed.get(s, 0) + c
            if order < 2:
                first_order[s] = first_order.get(s, 0) + c
        order += 1
        nxt = {}
        for s in unknowns:
            acc = sum((b * term[p] for p, b in lower[s] if p in term), Fraction(0))
            if acc:
                nxt[s] = -acc / pivots[s]
        term = nxt

    def nz(m):
        return {s: c for s, c in m.items() if c}

    return ProductExpansion(delta, X, nz(closed), nz(tri), nz(first_order), skipped, order)


# ------------------------------------------------------- decomposition

def canonical_shift(e) -> tuple[int, ...]:
    """Deterministic representative of the class of e mod B."""
    try:
        return diagram_to_shift(shift_to_diagram(e))
    except OutsideChamber:
        return min(support_points(e)) if support_points(e) else tuple(e)


def decompose(f: Poly) -> list[tuple[tuple[int, ...], Fraction]]:
    """Write a solution of the antisymmetrized system as sum c F_gamma."""
    for i in range(3):
        if obar(i, f):
            raise ValueError(f"input is not annihilated by operator {i + 1}")
    out = []
    rest = f
    bound = len({ur_sums(e) for e in f.terms}) + sum(len(s_range(e, -1)) for e in f.terms)
    while rest:
        if len(out) > bound:
            raise TheoremViolation("decomposition did not terminate", remainder=rest)
        # the top layer of F_gamma has the smallest k_{-2} + h_{-1}
        classes = {}
        for e in rest.terms:
            classes.setdefault(ur_sums(e), []).append(e)
        key = min(classes, key=lambda t: (t[2] + t[5], t))
        gamma = canonical_shift(classes[key][0])
        top = realize_gamma(gamma)
        part = Poly(NLABELS, {e: rest.terms[e] for e in classes[key]}, _trusted=True)
        lead = max(top.terms)
        c = part.coeff(lead) / top.coeff(lead) if lead in part.terms else Fraction(0)
        if not c or part != top.scale(c):
            raise TheoremViolation("class restriction is not a Gamma-series", gamma=gamma, part=part)
        out.append((gamma, c))
        rest = rest - f_total(gamma).scale(c)
    return out


# ------------------------------------------------------- binomial identity

def binom(n: int, k: int) -> int:
    """C(n, k) with C(-1, -1) = 1 and zero outside 0 <= k <= n."""
    if n == k == -1:
        return 1
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def triangle_sides(N: int, a: int, b: int) -> tuple[int, int]:
    lhs = binom(N, a + b)
    rhs = sum(binom(n1, a) * binom(N - n1 - 1, b - 1) for n1 in range(N + 1))
    return lhs, rhs
