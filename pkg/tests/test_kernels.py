import os
import subprocess
import sys
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from sp4gtz import _pykernels, kernels
from sp4gtz.diagrams import ORIENT, V, combo

compiled = pytest.importorskip("sp4gtz._kernels")

shifts = st.tuples(*[st.integers(-2, 3)] * 9)
layers = st.tuples(*[st.integers(0, 3)] * 3)
terms = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3),
                        st.fractions(-9, 9, max_denominator=5).filter(bool), max_size=6)


@given(terms, terms)
def test_poly_mul_matches(a, b):
    assert compiled.poly_mul(a, b) == _pykernels.poly_mul(a, b)


@given(shifts)
def test_support_matches(p):
    got = compiled.support(p)
    assert got == _pykernels.support(p)
    for u, q in got:
        assert q == combo(p, u, V) and min(q) >= 0


@given(shifts)
def test_support_is_complete(p):
    # brute force over a box wider than any point can reach
    want = sorted(q for u in product(range(-8, 9), repeat=3)
                  if min(q := combo(p, u, V)) >= 0)
    assert sorted(q for _, q in _pykernels.support(p)) == want


@given(shifts, layers)
def test_layer_sum_matches(p, s):
    assert compiled.layer_sum(p, s, ORIENT) == _pykernels.layer_sum(p, s, ORIENT)


@given(shifts)
def test_gamma_terms_match(p):
    got = compiled.gamma_terms(p)
    assert got == _pykernels.gamma_terms(p)
    assert all(isinstance(c, Fraction) for c in got.values())


def test_backend_selected():
    assert kernels.BACKEND == "cython"


def test_pure_fallback():
    env = dict(os.environ, SP4GTZ_PURE="1")
    code = "import sp4gtz; print(sp4gtz.BACKEND)"
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert res.stdout.strip() == "python"
