import random
from fractions import Fraction
from itertools import permutations, product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from sp4gtz.action import FFD_TERMS, generator_matrix
from sp4gtz.diagrams import enumerate_diagrams, highest_diagram, weyl_dimension
from sp4gtz.gamma import PLUCKER
from sp4gtz.oracle import (
    ENTRIES, NotInSpan, SpanSolver, act_E, act_F, basis_solver, basis_vector, det_of_columns,
    det_poly, entry, expand_in_basis, highest_vector, label_action, lowered_sum, operator_construction,
    oracle_columns, rank, realize, reduce_symplectic, representation_dimension, zhelobenko_vector,
)
from sp4gtz.poly import NLABELS, Poly, label

NE = len(ENTRIES)
COLS = (-2, -1, 1, 2)
WEIGHTS3 = [(a, b) for a in range(4) for b in range(a + 1)]
WEIGHTS4 = [(a, b) for a in range(5) for b in range(a + 1)]

monomials = st.tuples(*[st.integers(0, 1)] * NE).filter(lambda e: sum(e) <= 4)
entry_polys = st.dictionaries(monomials, st.integers(-3, 3), max_size=4).map(lambda t: Poly(NE, t))


def test_det_poly_examples():
    assert det_poly(label(-2)) == entry(-2, -2)
    assert det_poly(label(-2, -1)) == entry(-2, -2) * entry(-1, -1) - entry(-1, -2) * entry(-2, -1)


def test_plucker_s1_unreduced():
    d = det_poly
    s1 = d(label(-2)) * d(label(-1, 1)) - d(label(-1)) * d(label(-2, 1)) + d(label(1)) * d(label(-2, -1))
    assert s1 == 0


@pytest.mark.parametrize("i", range(3))
def test_plucker_relations(i):
    assert realize(PLUCKER[i]) == 0


def test_eliminated_label():
    assert reduce_symplectic(det_of_columns((-2, 2))) == -reduce_symplectic(det_of_columns((-1, 1)))


def test_realize_examples():
    assert realize(Poly.var(NLABELS, label(-2).index)) == det_poly(label(-2))
    for m, mp in [(1, 0), (2, 1), (3, 3)]:
        v0 = det_poly(label(-2)) ** (m - mp) * det_poly(label(-2, -1)) ** mp
        assert highest_vector((m, mp)) == reduce_symplectic(v0)
        # basis vectors keep the factorial normalization of the Gamma-series
        scale = Fraction(1, factorial(m - mp) * factorial(mp))
        assert zhelobenko_vector(highest_diagram((m, mp))) == reduce_symplectic(v0).scale(scale)


def test_act_E_examples():
    assert act_E(-1, -2, entry(-2, -2)) == entry(-1, -2)
    v0 = highest_vector((1, 1))
    assert act_E(1, -1, v0) == det_poly(label(-2, 1))


@pytest.mark.parametrize("i,j,k", [t for t in product(COLS, repeat=3) if t[1] != t[2]])
def test_act_E_on_minors(i, j, k):
    got = act_E(i, j, det_of_columns((j, k)))
    want = Poly.zero(NE) if i == k else det_of_columns((i, k))
    assert got == want


QUADS = list(product(COLS, repeat=4))
SPAN = [Poly.monomial(e) for e in random.Random(4).sample(
    [e for e in product(range(2), repeat=NE) if 1 <= sum(e) <= 4], 12)]


@pytest.mark.parametrize("i,j,k,l", QUADS)
def test_gl4_commutators(i, j, k, l):
    for p in SPAN:
        lhs = act_E(i, j, act_E(k, l, p)) - act_E(k, l, act_E(i, j, p))
        rhs = Poly.zero(NE)
        if j == k:
            rhs = rhs + act_E(i, l, p)
        if l == i:
            rhs = rhs - act_E(k, j, p)
        assert lhs == rhs


@given(entry_polys)
def test_F_2_m2_is_twice_E(p):
    assert act_F(2, -2, p, reduce=False) == act_E(2, -2, p).scale(2)


@pytest.mark.parametrize("w", [(1, 0), (2, 1), (3, 0), (3, 2)])
def test_highest_vector_weights(w):
    v0 = highest_vector(w)
    assert act_F(-2, -2, v0) == v0.scale(w[0])
    assert act_F(-2, 2, v0) == 0
    assert act_F(-2, 1, v0) == 0


def test_vector_examples():
    assert zhelobenko_vector((1, 0, 1, 0, 1, 0)) == entry(2, -2)
    assert zhelobenko_vector((1, 1, 1, 0, 1, 1)) == det_poly(label(-2, 1))


@pytest.mark.parametrize("w", WEIGHTS3)
def test_three_constructions_agree(w):
    for d in enumerate_diagrams(w):
        v = zhelobenko_vector(d)
        assert v == realize(lowered_sum(d)) == operator_construction(d)


@pytest.mark.parametrize("w", WEIGHTS3)
def test_expand_basis_vectors(w):
    basis = enumerate_diagrams(w)
    for k, d in enumerate(basis):
        assert expand_in_basis(basis_vector(d), w) == [Fraction(int(i == k)) for i in range(len(basis))]
    assert expand_in_basis(Poly.zero(NE), w) == [0] * len(basis)


def test_expand_rejects_wrong_weight():
    with pytest.raises(NotInSpan, match="not in representation space"):
        expand_in_basis(highest_vector((2, 0)), (2, 1))


@pytest.mark.parametrize("w", [(1, 0), (1, 1), (2, 1)])
def test_expand_gives_generator_column(w):
    closed = generator_matrix(w, (-2, 1))
    assert oracle_columns(w, (-2, 1)) == closed.entries


@pytest.mark.parametrize("w", WEIGHTS4)
def test_basis_independent(w):
    s = basis_solver(w)
    assert s.independent and s.rank == len(enumerate_diagrams(w))
    assert representation_dimension(w) == weyl_dimension(w)


@pytest.mark.parametrize("w", WEIGHTS3)
def test_raising_stays_in_span(w):
    for d in enumerate_diagrams(w):
        expand_in_basis(act_F(-2, 2, basis_vector(d)), w)


@pytest.mark.parametrize("gen", sorted(FFD_TERMS))
def test_label_action_matches_terms(gen):
    assert label_action(*gen) == {Y: (mult, X) for _, X, Y, mult in FFD_TERMS[gen]}


def test_span_solver():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    s = SpanSolver([x + y, x - y])
    assert s.rank == 2 and s.independent
    assert s.solve(x.scale(2)) == [1, 1]
    assert not s.add(x)
    assert not s.independent
    assert rank([x, x.scale(3), y]) == 2


@pytest.mark.parametrize("i,j", list(permutations(COLS, 2)))
def test_act_F_antisymmetry(i, j):
    p = highest_vector((2, 1))
    sign = (1 if i > 0 else -1) * (1 if j > 0 else -1)
    assert act_F(i, j, p) == act_F(-j, -i, p).scale(-sign)
