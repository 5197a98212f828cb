"""Quantum integers, theta and 6j quotients, and their tabulated degrees."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from montesinos_slopes.laurent import ONE, ZERO, LaurentPoly
from montesinos_slopes.quantum import (Inadmissible, OddFraming, d_plus_delta, d_plus_f, d_plus_O,
                                       d_plus_theta, delta6j, delta_z_range, framing_f,
                                       framing_power, is_admissible, qbinomial, qfact, qint,
                                       qmultinomial, theta, unknot_O)


def P(terms):
    return LaurentPoly(terms)


def test_qint_examples():
    assert qint(1) == ONE
    assert qint(2) == P({2: 1, -2: 1})
    assert qint(0) == ZERO


def test_qfact_and_multinomial():
    assert qfact(3) == P({6: 1, 2: 2, -2: 2, -6: 1})
    assert qmultinomial((1, 1)) == qint(2)
    assert qmultinomial((4, 0)) == ONE
    assert qbinomial(5, 2) == qbinomial(5, 3)
    assert qbinomial(3, 4) == ZERO


def test_framing_examples():
    assert framing_f(2) == (-1, P({-4: -1}))
    assert framing_f(0) == (1, ONE)
    with pytest.raises(OddFraming):
        framing_f(3)
    # f(n)^k for odd n only when k is a multiple of 4
    assert framing_power(1, 4) == (1, -6)
    with pytest.raises(OddFraming):
        framing_power(1, 2)


def test_framing_power_matches_repeated_product():
    for a in (0, 2, 4, 6):
        sign, mono = framing_f(a)
        for k in range(0, 5):
            s, e = framing_power(a, k)
            assert mono ** k == P({e: s})


def test_unknot_examples():
    assert unknot_O(2) == P({4: 1, 0: 1, -4: 1})
    assert unknot_O(1) == -qint(2)


def test_theta_examples():
    assert theta(0, 0, 0) == ONE
    assert theta(2, 2, 2) == -(qint(4) * qint(3) * qint(2))
    assert theta(2, 0, 2) == qint(3)
    with pytest.raises(Inadmissible):
        theta(2, 0, 0)
    with pytest.raises(Inadmissible):
        theta(1, 1, 1)


def test_delta_examples():
    assert delta6j(0, 0, 0, 0, 0, 0) == ONE
    p = delta6j(2, 2, 2, 2, 2, 2)
    assert p.max_degree() == d_plus_delta(2, 2, 2, 2, 2, 2)
    # (2,0,0) fails the triangle inequality, so the z-range is empty and
    # there is no degree to compare
    assert len(delta_z_range(2, 2, 2, 0, 0, 0)) == 0
    assert delta6j(2, 2, 2, 0, 0, 0) == ZERO


def test_delta_empty_range_is_zero():
    assert delta_z_range(1, 0, 0, 0, 0, 0) is None
    assert delta6j(1, 0, 0, 0, 0, 0) == ZERO


def test_degree_examples():
    assert d_plus_f(2) == -4
    assert d_plus_theta(2, 2, 2) == 12
    assert theta(2, 2, 2).max_degree() == 12
    assert d_plus_O(0) == 0


def test_admissibility():
    assert is_admissible(2, 2, 0)
    assert not is_admissible(2, 0, 0)
    assert not is_admissible(1, 1, 1)


def test_qint_at_one():
    for k in range(15):
        assert qint(k).evaluate(1) == k


even = st.integers(0, 5).map(lambda x: 2 * x)


@given(even, even, even)
def test_theta_symmetric(a, b, c):
    if not is_admissible(a, b, c):
        return
    ref = theta(a, b, c)
    for perm in itertools.permutations((a, b, c)):
        assert theta(*perm) == ref


def _six_admissible(a, b, c, al, be, ga):
    return all(is_admissible(*t) for t in ((a, b, c), (a, be, ga), (al, b, ga), (al, be, c)))


def _random_admissible(count, seed=0, top=8):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        args = tuple(rng.randint(0, top) for _ in range(6))
        if _six_admissible(*args):
            out.append(args)
    return out


def test_degrees_are_attained():
    checked = 0
    for args in _random_admissible(250):
        a, b, c = args[:3]
        assert theta(a, b, c).max_degree() == d_plus_theta(a, b, c)
        p = delta6j(*args)
        if p.is_zero():
            continue
        assert p.max_degree() == d_plus_delta(*args), args
        checked += 1
    assert checked >= 200


def test_f_and_O_degrees_attained():
    for a in range(0, 20, 2):
        assert framing_f(a)[1].max_degree() == d_plus_f(a)
        assert unknot_O(a).max_degree() == d_plus_O(a)


# -- piecewise expansions used in the degree argument ------------------------------


def piecewise_head(a, b, c, n):
    x = max(a, b, c)
    others = sorted((a, b, c))[:2]
    return -Fraction(x * x, 2) - x + (a + b + c + 2) * n - others[0] * others[1]


def piecewise_chain(a, b, n):
    if a + b >= 2 * n:
        return (-Fraction(a * a, 2) - a - b * b - a * b + 2 * a * n + 4 * b * n + 2 * n
                - 2 * n * n)
    return -Fraction(b * b, 2) + b + 2 * n * b


@pytest.mark.parametrize("n", range(0, 9))
def test_piecewise_head_formula(n):
    cols = range(0, 2 * n + 1, 2)
    for a, b, c in itertools.product(cols, repeat=3):
        if is_admissible(a, b, c):
            assert d_plus_delta(a, b, c, n, n, n) == piecewise_head(a, b, c, n)


@pytest.mark.parametrize("n", range(0, 9))
def test_piecewise_chain_formula(n):
    cols = range(0, 2 * n + 1, 2)
    for a, b in itertools.product(cols, repeat=2):
        assert d_plus_delta(a, n, n, b, n, n) == piecewise_chain(a, b, n)
