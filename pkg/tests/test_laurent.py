"""Laurent polynomial ring: fixed examples plus ring laws on random inputs."""

import pytest
from hypothesis import given, settings, strategies as st

from montesinos_slopes.laurent import (ONE, ZERO, DegreeOfZero, LaurentPoly, NonExactDivision,
                                       _kronecker, _schoolbook, add, exact_div, max_degree, mul)
from montesinos_slopes.quantum import qint


def P(terms):
    return LaurentPoly(terms)


# -- fixed examples ---------------------------------------------------------------


def test_add_examples():
    assert add(P({2: 1}), P({2: -1})) == ZERO
    assert add(P({2: 1, -2: -1}), P({-2: 1})) == P({2: 1})
    p = P({3: 5, -1: 2})
    assert add(ZERO, p) == p


def test_mul_examples():
    assert mul(P({2: 1, -2: -1}), P({2: 1, -2: 1})) == P({4: 1, -4: -1})
    p = P({3: 5, -1: 2})
    assert mul(p, ONE) == p
    assert mul(p, ZERO) == ZERO


def test_exact_div_examples():
    assert exact_div(P({4: 1, -4: -1}), P({2: 1, -2: -1})) == P({2: 1, -2: 1})
    p = P({3: 5, -1: 2})
    assert exact_div(p, ONE) == p
    with pytest.raises(NonExactDivision):
        exact_div(P({2: 1, 0: 1}), P({2: 1, 0: -1}))


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(ONE, ZERO)


def test_max_degree_examples():
    assert max_degree(P({5: 3, -7: -1})) == 5
    assert max_degree(LaurentPoly.constant(7)) == 0
    with pytest.raises(DegreeOfZero):
        max_degree(ZERO)


def test_canonical_form():
    assert P({1: 0, 2: 0}) == ZERO
    assert P({1: 2, 3: 0}).terms() == {1: 2}
    assert P({1: 2}) - P({1: 2}) == ZERO
    assert hash(P({1: 1, 0: 0})) == hash(P({1: 1}))


def test_text_format():
    p = P({3: 2, 0: -1, -4: 5})
    assert p.to_text() == "2*v^3 - 1*v^0 + 5*v^-4"
    assert LaurentPoly.from_text(p.to_text()) == p
    assert ZERO.to_text() == "0"
    assert LaurentPoly.from_text("0") == ZERO
    with pytest.raises(ValueError):
        LaurentPoly.from_text("2*x^3")


def test_helpers():
    p = P({2: 1, -1: 3})
    assert p.substitute_inverse() == P({-2: 1, 1: 3})
    assert p.shift(3) == P({5: 1, 2: 3})
    assert p.scale_exponents(2) == P({4: 1, -2: 3})
    assert p.coefficient_list() == [1, 0, 0, 3]
    assert p.leading_coefficient() == 1
    assert p.min_degree() == -1
    assert p.term_count() == 2
    assert p ** 0 == ONE
    assert p ** 2 == p * p


def test_evaluate_exact():
    p = P({2: 1, -2: 1})
    assert p.evaluate(1) == 2
    assert p.evaluate(2) == pytest.approx(4.25)
    assert str(p.evaluate(2)) == "17/4"


def test_quantum_integer_at_one():
    for k in range(12):
        assert qint(k).evaluate(1) == k


# -- properties -------------------------------------------------------------------

coeffs = st.integers(min_value=-50, max_value=50)


@st.composite
def polys(draw, max_terms=8):
    d = draw(st.dictionaries(st.integers(-12, 12), coeffs, max_size=max_terms))
    return LaurentPoly(d)


long_coeffs = st.lists(st.integers(-10**6, 10**6), min_size=24, max_size=60).filter(any)


nonzero = polys().filter(lambda p: not p.is_zero())


@settings(max_examples=1000)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p
    assert p - p == ZERO


@settings(max_examples=300)
@given(nonzero, nonzero)
def test_degree_additive(p, q):
    assert max_degree(p * q) == max_degree(p) + max_degree(q)
    assert (p * q).min_degree() == p.min_degree() + q.min_degree()


@settings(max_examples=300)
@given(polys(), nonzero)
def test_exact_div_round_trip(p, q):
    assert exact_div(p * q, q) == p


@given(polys())
def test_text_round_trip(p):
    assert LaurentPoly.from_text(p.to_text()) == p


@settings(max_examples=100)
@given(long_coeffs, long_coeffs)
def test_kronecker_matches_schoolbook(a, b):
    assert _kronecker(tuple(a), tuple(b)) == _schoolbook(tuple(a), tuple(b))
