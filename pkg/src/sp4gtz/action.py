"""Closed-form action of the sp4 generators on GTZ diagrams."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .diagrams import GTZDiagram, HighestWeight, diagram_to_shift, enumerate_diagrams, shift_to_diagram
from .gamma import TheoremViolation, product_coeffs, realize_gamma
from .diagrams import unit, vadd
from .poly import DetLabel, label, rational_to_str

GENERATORS = ((-2, -2), (-1, -1), (2, -2), (-2, 2), (-2, 1), (1, -2))
CARTAN = ((-2, -2), (-1, -1))


def generator_name(gen) -> str:
    return f"F({gen[0]},{gen[1]})"


_GEN_RE = re.compile(r"^\s*f\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*$", re.IGNORECASE)


def parse_generator(name: str) -> tuple[int, int]:
    m = _GEN_RE.match(name)
    gen = (int(m.group(1)), int(m.group(2))) if m else None
    if gen not in GENERATORS:
        valid = ", ".join(generator_name(g) for g in GENERATORS)
        raise ValueError(f"unknown generator {name!r}; valid names: {valid}")
    return gen


# Each long generator acts on determinant variables as a derivation
# sum coef * A_X d/dA_Y.  Series are grouped by diagram transformation.
FFD_TERMS = {
    (-2, 1): (
        (1, label(-2), label(1), Fraction(1)),
        (2, label(-1), label(2), Fraction(1)),
        (3, label(-2, -1), label(-1, 1), Fraction(-1)),
        (2, label(-1, 1), label(2, 1), Fraction(2)),
    ),
    (1, -2): (
        (1, label(1), label(-2), Fraction(1)),
        (2, label(2), label(-1), Fraction(1)),
        (3, label(-1, 1), label(-2, -1), Fraction(-2)),
        (2, label(2, 1), label(-1, 1), Fraction(1)),
    ),
}


def cartan_eigenvalue(d, which) -> int:
    m2, m1, k2, k1, h2, h1 = GTZDiagram(*d).validate()
    which = tuple(which)
    if which == (-2, -2):
        # index -2 occurs h_{-1} times and index 2 occurs h_{-2}-h_{-1} times
        return 2 * h1 - h2
    if which == (-1, -1):
        return 2 * (k2 + k1) - (m2 + m1) - h2
    raise ValueError(f"{which} is not a Cartan generator")


def _clean(terms: dict) -> dict:
    return {d: c for d, c in terms.items() if c}


def sl2_ladder(d, direction: str) -> dict:
    d = GTZDiagram(*d).validate()
    if direction == "lower":
        if d.h_1 == 0:
            return {}
        return {d._replace(h_1=d.h_1 - 1): Fraction(2 * (d.h_2 - d.h_1 + 1))}
    if direction == "raise":
        if d.h_1 == d.h_2:
            return {}
        return {d._replace(h_1=d.h_1 + 1): Fraction(2 * (d.h_1 + 1))}
    raise ValueError("direction must be 'lower' or 'raise'")


@dataclass
class SeriesTerm:
    series: int
    X: DetLabel
    Y: DetLabel
    multiplicity: Fraction
    p: tuple
    coeff: Fraction
    target: GTZDiagram


def act_long_terms(d, gen) -> list[SeriesTerm]:
    """Every (ffd term, p) contribution before summation."""
    d = GTZDiagram(*d).validate()
    gen = tuple(gen)
    if gen not in FFD_TERMS:
        raise ValueError(f"{gen} is not F(-2,1) or F(1,-2)")
    gamma = diagram_to_shift(d)
    out = []
    for series, X, Y, mult in FFD_TERMS[gen]:
        delta = vadd(gamma, unit(Y), -1)
        if not realize_gamma(delta):
            continue
        exp = product_coeffs(gamma, X, Y)
        if exp.closed != exp.triangular:
            raise TheoremViolation("product coefficients disagree", diagram=d, X=X, Y=Y,
                                   closed=exp.closed, triangular=exp.triangular)
        for p, shift, c in exp.targets():
            # a nonzero pivot means nonempty support, hence a valid diagram
            out.append(SeriesTerm(series, X, Y, mult, p, c, shift_to_diagram(shift)))
    return out


def act_long(d, gen) -> dict:
    out: dict = {}
    for t in act_long_terms(d, gen):
        out[t.target] = out.get(t.target, 0) + t.multiplicity * t.coeff
    return _clean(out)


def act(d, gen) -> dict:
    """Closed-form image of basis vector ``d`` as {diagram: coefficient}."""
    gen = tuple(gen)
    d = GTZDiagram(*d).validate()
    if gen in CARTAN:
        return _clean({d: Fraction(cartan_eigenvalue(d, gen))})
    if gen == (2, -2):
        return sl2_ladder(d, "lower")
    if gen == (-2, 2):
        return sl2_ladder(d, "raise")
    return act_long(d, gen)


@dataclass
class GeneratorMatrix:
    weight: HighestWeight
    generator: tuple
    dim: int
    entries: dict = field(default_factory=dict)  # (row, col) -> Fraction

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "weight": list(self.weight),
            "generator": generator_name(self.generator),
            "dim": self.dim,
            "entries": [[r, c, rational_to_str(v)] for (r, c), v in sorted(self.entries.items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def dense(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for (r, c), v in self.entries.items():
            m[r][c] = v
        return m


def generator_matrix(w, gen, method: str = "closed") -> GeneratorMatrix:
    w = HighestWeight(*w).validate()
    gen = tuple(gen)
    basis = enumerate_diagrams(w)
    if method == "oracle":
        from .oracle import oracle_columns

        return GeneratorMatrix(w, gen, len(basis), oracle_columns(w, gen))
    if method != "closed":
        raise ValueError("method must be 'closed' or 'oracle'")
    index = {d: i for i, d in enumerate(basis)}
    entries = {}
    for col, d in enumerate(basis):
        for target, c in act(d, gen).items():
            if target not in index:
                raise TheoremViolation("image left the representation", diagram=d, target=target)
            entries[(index[target], col)] = c
    return GeneratorMatrix(w, gen, len(basis), entries)


def matrix_diff(a: GeneratorMatrix, b: GeneratorMatrix) -> list:
    keys = sorted(set(a.entries) | set(b.entries))
    return [(k, a.entries.get(k, Fraction(0)), b.entries.get(k, Fraction(0)))
            for k in keys if a.entries.get(k, 0) != b.entries.get(k, 0)]


def verify_against_oracle(w, gen, matrix: GeneratorMatrix | None = None) -> bool:
    closed = matrix if matrix is not None else generator_matrix(w, gen)
    return not matrix_diff(closed, generator_matrix(w, gen, "oracle"))


# ------------------------------------------------------------ brackets

_IDX4 = {-2: 0, -1: 1, 1: 2, 2: 3}


def model_matrix(gen) -> tuple:
    """F_{i,j} = E_{i,j} - sign(i) sign(j) E_{-j,-i} as a 4x4 matrix."""
    i, j = gen
    m = [[0] * 4 for _ in range(4)]
    m[_IDX4[i]][_IDX4[j]] += 1
    m[_IDX4[-j]][_IDX4[-i]] -= (1 if i > 0 else -1) * (1 if j > 0 else -1)
    return tuple(tuple(Fraction(x) for x in row) for row in m)


def _mm(a, b, n):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _bracket_dense(a, b, n):
    ab, ba = _mm(a, b, n), _mm(b, a, n)
    return tuple(tuple(ab[i][j] - ba[i][j] for j in range(n)) for i in range(n))


def _sparse_bracket(a: dict, b: dict) -> dict:
    def mul(x, y):
        out = {}
        rows = {}
        for (k, j), v in y.items():
            rows.setdefault(k, []).append((j, v))
        for (i, k), u in x.items():
            for j, v in rows.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + u * v
        return out

    out = mul(a, b)
    for k, v in mul(b, a).items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def _solve_in_span(target, mats):
    """Exact coefficients c with sum c_k mats[k] = target, or None."""
    cols = [[x for row in m for x in row] for m in mats]
    rhs = [x for row in target for x in row]
    n = len(cols)
    aug = [[cols[k][r] for k in range(n)] + [rhs[r]] for r in range(len(rhs))]
    piv_cols, r = [], 0
    for c in range(n):
        pr = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(row[n] for row in aug[r:]):
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][n]
    return sol


def verify_brackets(w, method: str = "closed") -> list[dict]:
    """Close the generating set under brackets and compare structure constants.

    Returns the violated relations; an empty list means every bracket of
    representation matrices matches the 4x4 model.
    """
    w = HighestWeight(*w).validate()
    names = [generator_name(g) for g in GENERATORS]
    model = [model_matrix(g) for g in GENERATORS]
    reps = [generator_matrix(w, g, method).entries for g in GENERATORS]
    report = []
    k = 0
    pairs = [(a, b) for a in range(len(model)) for b in range(a + 1, len(model))]
    while k < len(pairs):
        a, b = pairs[k]
        k += 1
        mb = _bracket_dense(model[a], model[b], 4)
        rb = _sparse_bracket(reps[a], reps[b])
        coeffs = _solve_in_span(mb, model)
        if coeffs is None:
            names.append(f"[{names[a]},{names[b]}]")
            model.append(mb)
            reps.append(rb)
            pairs.extend((x, len(model) - 1) for x in range(len(model) - 1))
            continue
        expect: dict = {}
        for c, rep in zip(coeffs, reps):
            if c:
                for key, v in rep.items():
                    expect[key] = expect.get(key, 0) + c * v
        expect = {key: v for key, v in expect.items() if v}
        if expect != rb:
            report.append({
                "bracket": f"[{names[a]},{names[b]}]",
                "expected": {names[i]: rational_to_str(c) for i, c in enumerate(coeffs) if c},
                "mismatched_entries": len(set(expect.items()) ^ set(rb.items())),
            })
    if len(model) != 10:
        report.append({"bracket": "closure", "expected": "dimension 10", "mismatched_entries": len(model)})
    return report
