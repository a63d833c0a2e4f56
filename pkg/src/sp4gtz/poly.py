"""Exact rationals, determinant labels and sparse polynomials.

Polynomials are immutable maps from exponent tuples to nonzero
``Fraction`` coefficients.  The same class serves the 9 determinant
variables and the 8 group-entry variables; only ``nvars`` differs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from . import kernels

Rational = Fraction

# Working determinant variables.  Two-index labels containing column 2
# are oriented with 2 first, so a_{2,-1} and a_{2,1} are the variables
# that carry positive coefficients in every Gamma-series.
COLUMNS: tuple[tuple[int, ...], ...] = (
    (-2,), (-1,), (1,), (2,),
    (-2, -1), (-2, 1), (-1, 1), (2, -1), (2, 1),
)
NLABELS = len(COLUMNS)
_INDEX = {c: i for i, c in enumerate(COLUMNS)}


class DetLabel(NamedTuple):
    """A determinant variable, identified by its sorted index set."""

    indices: tuple[int, ...]

    @property
    def columns(self) -> tuple[int, ...]:
        """Column order of the minor that this variable stands for."""
        if len(self.indices) == 2 and 2 in self.indices:
            return (2, self.indices[0])
        return self.indices

    @property
    def index(self) -> int:
        return _INDEX[self.columns]

    @property
    def name(self) -> str:
        return ",".join(str(c) for c in self.columns)

    def __str__(self) -> str:
        return f"a[{self.name}]"


LABELS: tuple[DetLabel, ...] = tuple(DetLabel(tuple(sorted(c))) for c in COLUMNS)


def label(*cols: int) -> DetLabel:
    """Look up a working label by either column order (no sign)."""
    lab, _ = canonicalize_label(cols) if len(cols) == 2 else (DetLabel(tuple(cols)), 1)
    if lab.columns not in _INDEX:
        raise ValueError(f"unknown label {cols}")
    return lab


def label_from_name(name: str) -> DetLabel:
    cols = tuple(int(x) for x in name.replace("a[", "").replace("]", "").split(","))
    return label(*cols)


def canonicalize_label(pair: Iterable[int]) -> tuple[DetLabel, int]:
    """Return the working variable and sign equal to the minor on ``pair``.

    Singletons map to themselves.  The minor on columns {-2, 2} is not a
    working variable: a_{-2,2} = -a_{-1,1}.
    """
    cols = tuple(pair)
    if any(c not in (-2, -1, 1, 2) for c in cols) or not 1 <= len(cols) <= 2:
        raise ValueError(f"bad column indices {cols}")
    if len(cols) == 1:
        return DetLabel(cols), 1
    i, j = cols
    if i == j:
        raise ValueError("degenerate determinant")
    if {i, j} == {-2, 2}:
        return DetLabel((-1, 1)), (-1 if i == -2 else 1)
    lab = DetLabel(tuple(sorted(cols)))
    return lab, (1 if lab.columns == cols else -1)


# ---------------------------------------------------------------- rationals

def rational_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


# -------------------------------------------------------------- polynomials

Exps = tuple[int, ...]


class Poly:
    """Sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exps, Fraction] | None = None, *, _trusted=False):
        self.nvars = nvars
        if _trusted:
            self.terms = terms
        else:
            clean = {}
            for e, c in (terms or {}).items():
                e = tuple(e)
                if len(e) != nvars or min(e, default=0) < 0:
                    raise ValueError(f"bad exponent {e}")
                if c:
                    clean[e] = Fraction(c)
            self.terms = clean
        self._hash = None

    # construction
    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars, {}, _trusted=True)

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: Fraction(c)} if c else {}, _trusted=True)

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "Poly":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): Fraction(1)}, _trusted=True)

    @classmethod
    def monomial(cls, exps: Exps, coeff=1) -> "Poly":
        return cls(len(exps), {tuple(exps): Fraction(coeff)})

    # queries
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def items(self):
        """Terms in canonical (graded lexicographic) order."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def coeff(self, exps: Exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # arithmetic
    def __add__(self, other: "Poly") -> "Poly":
        return self._combine(other, 1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self._combine(other, -1)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def _combine(self, other: "Poly", sign: int) -> "Poly":
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + sign * c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly(self.nvars, out, _trusted=True)

    def scale(self, k) -> "Poly":
        k = Fraction(k)
        if not k:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {e: c * k for e, c in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly.const(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def deriv(self, i: int, order: int = 1) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k >= order:
                f = 1
                for j in range(order):
                    f *= k - j
                ne = list(e)
                ne[i] -= order
                out[tuple(ne)] = c * f
        return Poly(self.nvars, out, _trusted=True)

    def apply_derivative(self, exps: Exps) -> "Poly":
        """Apply the constant-coefficient operator d^exps."""
        p = self
        for i, k in enumerate(exps):
            if k:
                p = p.deriv(i, k)
                if not p:
                    break
        return p

    def substitute(self, images: list["Poly"]) -> "Poly":
        """Ring homomorphism sending variable i to ``images[i]``."""
        nv = images[0].nvars
        cache: dict[tuple[int, int], Poly] = {}

        def power(i, k):
            if (i, k) not in cache:
                cache[(i, k)] = Poly.const(nv, 1) if k == 0 else power(i, k - 1) * images[i]
            return cache[(i, k)]

        out: dict = {}
        for e, c in self.terms.items():
            t = Poly.const(nv, c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            for m, v in t.terms.items():
                s = out.get(m, 0) + v
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(nv, out, _trusted=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        return "Poly(" + " + ".join(f"{rational_to_str(c)}*{e}" for e, c in self.items()) + ")"

    # serialization
    def to_json(self, names: list[str] | None = None) -> list[dict]:
        names = names or [str(i) for i in range(self.nvars)]
        return [
            {"exponents": {names[i]: k for i, k in enumerate(e) if k}, "coeff": rational_to_str(c)}
            for e, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict], names: list[str]) -> "Poly":
        idx = {n: i for i, n in enumerate(names)}
        terms: dict = {}
        for t in data:
            e = [0] * len(names)
            for n, k in t["exponents"].items():
                e[idx[n]] = int(k)
            e = tuple(e)
            terms[e] = terms.get(e, 0) + Fraction(t["coeff"])
        return cls(len(names), terms)


def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.nvars != q.nvars:
        raise ValueError("variable count mismatch")
    return Poly(p.nvars, kernels.poly_mul(p.terms, q.terms), _trusted=True)


def eval_at_one(p: Poly) -> Fraction:
    return sum(p.terms.values(), Fraction(0))


# convenience for the determinant ring

LABEL_NAMES = [lab.name for lab in LABELS]


def det_var(*cols: int) -> Poly:
    """The minor on ``cols`` as a signed determinant-variable polynomial."""
    lab, sign = canonicalize_label(cols)
    return Poly.var(NLABELS, lab.index).scale(sign)


def det_monomial(exps: Exps, coeff=1) -> Poly:
    return Poly.monomial(tuple(exps), coeff)
