"""Compiled kernel agrees with the pure-Python fallback."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multigb import _purekernel as pure
from multigb.ring import BlockRing, degrevlex, lex

try:
    from multigb import _speedups as fast
except ImportError:  # pragma: no cover
    fast = None

pytestmark = pytest.mark.skipif(fast is None, reason="compiled kernel not built")

P = 32003
RING = BlockRing((2, 2), characteristic=P)
MATRICES = [degrevlex(RING).rows, lex(RING).rows]

exps = st.tuples(*(st.integers(0, 3) for _ in range(4)))
coeffs = st.integers(1, P - 1)
terms = st.lists(st.tuples(exps, coeffs), max_size=6)


def canon(raw, matrix):
    """Normalize a raw term list the way Polynomial does."""
    return pure.sort_terms(raw, matrix, P)


@given(terms=terms, m=st.sampled_from(MATRICES))
def test_sort_terms(terms, m):
    assert pure.sort_terms(terms, m, P) == fast.sort_terms(terms, m, P)


@given(a=exps, b=exps, m=st.sampled_from(MATRICES))
def test_compare_and_key(a, b, m):
    assert pure.compare(m, a, b) == fast.compare(m, a, b)
    assert (pure.order_key(m, a) > pure.order_key(m, b)) == (
        fast.order_key(m, a) > fast.order_key(m, b))


@given(f=terms, g=terms, m=st.sampled_from(MATRICES))
def test_add_sub_mul(f, g, m):
    f, g = canon(f, m), canon(g, m)
    assert pure.poly_add(f, g, m, P) == fast.poly_add(f, g, m, P)
    assert pure.poly_sub(f, g, m, P) == fast.poly_sub(f, g, m, P)
    assert pure.poly_mul(f, g, m, P) == fast.poly_mul(f, g, m, P)


@given(f=terms, e=exps, c=coeffs, m=st.sampled_from(MATRICES))
def test_scale_neg_mul_term(f, e, c, m):
    f = canon(f, m)
    assert pure.poly_neg(f, P) == fast.poly_neg(f, P)
    assert pure.poly_scale(f, c, P) == fast.poly_scale(f, c, P)
    assert pure.poly_mul_term(f, e, c, P) == fast.poly_mul_term(f, e, c, P)


@given(f=terms, g=terms, m=st.sampled_from(MATRICES))
def test_spoly(f, g, m):
    f, g = canon(f, m), canon(g, m)
    if not f or not g:
        return
    assert pure.spoly(f, g, m, P) == fast.spoly(f, g, m, P)


@settings(max_examples=60)
@given(f=terms, basis=st.lists(terms, max_size=3), m=st.sampled_from(MATRICES))
def test_normal_form(f, basis, m):
    f = canon(f, m)
    basis = [canon(g, m) for g in basis]
    basis = [g for g in basis if g]
    assert pure.normal_form(f, basis, m, P) == fast.normal_form(f, basis, m, P)


def test_implementation_tags():
    assert pure.IMPLEMENTATION == "pure"
    assert fast.IMPLEMENTATION == "compiled"
