"""Kauffman bracket state expansion as an independent check at color 2."""

from types import SimpleNamespace

import pytest

from montesinos_slopes.bracket import (CrossingLimitExceeded, NotAKnot, calibrate_mirror,
                                       determinant, jones_from_j2, kauffman_oracle,
                                       montesinos_diagram)
from montesinos_slopes.colored_jones import state_sum
from montesinos_slopes.params import ContinuedFraction, knot

SMALL = [
    ((-4, -1), (2, -1), (2, -1)),
    ((-2, -1), (2, -1), (2, -1)),
    ((-4, -1), (4, -1), (4, -1)),
    ((-2, -1), (2, -1), (4, -3)),
    ((-4, -2, -1), (2, -1), (2, -1)),
]


@pytest.mark.parametrize("tails", SMALL)
def test_oracle_matches_state_sum(tails):
    k = knot(*tails)
    assert kauffman_oracle(k) == state_sum(k, 1)


def test_oracle_degree_examples(k_neg, k_pos):
    assert kauffman_oracle(k_neg).max_degree() == 2
    assert kauffman_oracle(k_pos).max_degree() == -2


def test_equivalent_tails_agree():
    # [-4,-2,-1] and [-4,-1] both evaluate to -1/3, so the knots coincide
    a = knot((-4, -2, -1), (2, -1), (2, -1))
    b = knot((-4, -1), (2, -1), (2, -1))
    assert a.r.value() == b.r.value()
    assert kauffman_oracle(a) == kauffman_oracle(b) == state_sum(a, 1) == state_sum(b, 1)


def test_single_component(default_grid):
    for k in default_grid:
        if k.crossing_number <= 12:
            assert montesinos_diagram(k).components == 1


def test_mirror_calibration(k_neg):
    assert calibrate_mirror(k_neg, state_sum(k_neg, 1)) is False


@pytest.mark.parametrize("tails", SMALL)
def test_determinant(tails):
    k = knot(*tails)
    nums = []
    for tail in k.tails:
        v = tail.value()
        nums.append((v.numerator, v.denominator))
    (p1, q1), (p2, q2), (p3, q3) = nums
    expected = abs(p1 * q2 * q3 + q1 * p2 * q3 + q1 * q2 * p3)
    assert determinant(kauffman_oracle(k)) == expected


def test_jones_normalisation(k_neg):
    v = jones_from_j2(kauffman_oracle(k_neg))
    assert v.evaluate(1) == 1


def test_not_a_knot():
    tails = tuple(ContinuedFraction((2,)) for _ in range(3))
    fake = SimpleNamespace(tails=tails, crossing_number=6)
    with pytest.raises(NotAKnot):
        kauffman_oracle(fake)


def test_crossing_limit():
    k = knot((-6, -2, -3), (4, -2, -3), (4, -3))
    assert k.crossing_number > 16
    with pytest.raises(CrossingLimitExceeded):
        kauffman_oracle(k)
