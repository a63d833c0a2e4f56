import json
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from sp4gtz.diagrams import diagram_to_shift, highest_diagram
from sp4gtz.gamma import realize_gamma
from sp4gtz.oracle import det_of_columns, reduce_symplectic
from sp4gtz.poly import (
    LABEL_NAMES, LABELS, NLABELS, DetLabel, Poly, canonicalize_label, det_var, eval_at_one,
    label, label_from_name, poly_mul, rational_from_str, rational_to_str,
)

NV = 4
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
exps = st.tuples(*[st.integers(0, 3)] * NV)
polys = st.dictionaries(exps, rationals, max_size=6).map(lambda t: Poly(NV, t))


def a(*cols):
    return det_var(*cols)


def test_nine_labels():
    assert len(LABELS) == NLABELS == 9
    assert DetLabel((-2, 2)) not in LABELS
    assert len(set(LABEL_NAMES)) == 9


@pytest.mark.parametrize("pair,expected", [
    ((-2, -1), (DetLabel((-2, -1)), 1)),
    ((-1, -2), (DetLabel((-2, -1)), -1)),
    ((-2, 2), (DetLabel((-1, 1)), -1)),
    ((2, -2), (DetLabel((-1, 1)), 1)),
    # the working variable for {-1, 2} is the minor on columns (2, -1)
    ((2, -1), (DetLabel((-1, 2)), 1)),
    ((-1, 2), (DetLabel((-1, 2)), -1)),
])
def test_canonicalize_examples(pair, expected):
    assert canonicalize_label(pair) == expected


def test_canonicalize_degenerate():
    with pytest.raises(ValueError, match="degenerate determinant"):
        canonicalize_label((1, 1))
    with pytest.raises(ValueError):
        canonicalize_label((3, 1))


@pytest.mark.parametrize("i,j", [p for p in permutations((-2, -1, 1, 2), 2) if set(p) != {-2, 2}])
def test_swap_flips_sign(i, j):
    lab1, s1 = canonicalize_label((i, j))
    lab2, s2 = canonicalize_label((j, i))
    assert lab1 == lab2 and s1 * s2 == -1


@pytest.mark.parametrize("pair", [(-2, 2), (2, -2), (-2, 1), (2, -1), (1, 2), (-1, 1)])
def test_sign_matches_minor(pair):
    # a signed working variable realizes to the minor on the given columns
    lab, sign = canonicalize_label(pair)
    lhs = reduce_symplectic(det_of_columns(pair))
    rhs = reduce_symplectic(det_of_columns(lab.columns)).scale(sign)
    assert lhs == rhs


def test_label_lookup():
    assert label(-1, 2) == label(2, -1) == label_from_name("2,-1")
    assert label_from_name("a[-2,-1]").index == 4
    # the sign is dropped: a_{-2,2} is carried by the variable a_{-1,1}
    assert label(-2, 2) == label(-1, 1)
    with pytest.raises(ValueError):
        label(-2, 3)


def test_mul_examples():
    one = Poly.const(NLABELS, 1)
    p = a(-2) * a(-1, 1) - a(-1) * a(-2, 1)
    assert one * p == p
    assert len(p * one) == 2
    assert a(-2) * a(-2) == Poly.var(NLABELS, 0, 2)


def test_eval_examples():
    assert eval_at_one(Poly.zero(NLABELS)) == 0
    assert eval_at_one(a(-2).scale(Fraction(1, 2)) + a(-1).scale(Fraction(1, 3))) == Fraction(5, 6)
    # single monomial a_{-2} a_{-2,-1} with coefficient 1/(1! 1!)
    top = realize_gamma(diagram_to_shift(highest_diagram((2, 1))))
    assert len(top) == 1
    assert eval_at_one(top) == 1


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly.zero(NV)


@given(polys, polys)
def test_eval_is_homomorphism(p, q):
    assert eval_at_one(p * q) == eval_at_one(p) * eval_at_one(q)
    assert eval_at_one(p + q) == eval_at_one(p) + eval_at_one(q)


@given(polys)
def test_no_zero_terms_and_canonical_order(p):
    assert all(c != 0 for c in p.terms.values())
    keys = [(sum(e), e) for e, _ in p.items()]
    assert keys == sorted(keys, reverse=True)


@given(polys, polys, st.integers(0, NV - 1))
def test_leibniz(p, q, i):
    assert (p * q).deriv(i) == p.deriv(i) * q + p * q.deriv(i)


small = st.dictionaries(st.tuples(*[st.integers(0, 1)] * NV), rationals, max_size=3).map(lambda t: Poly(NV, t))


@given(small, small, st.lists(small, min_size=NV, max_size=NV))
def test_substitute_is_homomorphism(p, q, imgs):
    assert (p * q).substitute(imgs) == p.substitute(imgs) * q.substitute(imgs)
    assert (p + q).substitute(imgs) == p.substitute(imgs) + q.substitute(imgs)


@given(polys)
def test_json_round_trip(p):
    names = ["x", "y", "z", "w"]
    data = json.loads(json.dumps(p.to_json(names)))
    assert Poly.from_json(data, names) == p


@given(rationals)
def test_rational_strings(x):
    s = rational_to_str(x)
    assert rational_from_str(s) == x
    assert ("/" in s) == (x.denominator != 1)


def test_rejects_negative_exponent():
    with pytest.raises(ValueError):
        Poly(2, {(-1, 0): 1})


def test_mismatched_rings():
    with pytest.raises(ValueError):
        poly_mul(Poly.const(2, 1), Poly.const(3, 1))
