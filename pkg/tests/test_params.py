"""Continued fractions, family validation and the writhe bookkeeping."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from montesinos_slopes.params import (CaseTag, ContinuedFraction, FamilyError, OddOddViolation,
                                      ParityViolation, SignViolation, TailTooShort,
                                      ZeroDenominator, eval_continued_fraction, parse_tail,
                                      validate_family, writhe_and_framing)


def test_eval_examples():
    assert eval_continued_fraction([-2, -1]) == Fraction(-1)
    assert eval_continued_fraction([2, -1]) == Fraction(1, 3)
    assert eval_continued_fraction([-4, -1]) == Fraction(-1, 3)
    assert eval_continued_fraction([-6, -2, -1]) == ContinuedFraction((-6, -2, -1)).value()


def test_eval_zero_denominator_depth():
    with pytest.raises(ZeroDenominator) as exc:
        eval_continued_fraction([3, 1, 1])
    assert exc.value.depth == 1
    with pytest.raises(ZeroDenominator):
        eval_continued_fraction([0])


def test_validate_negdisc_example(k_neg):
    assert (k_neg.A, k_neg.B, k_neg.C) == (0, 2, 0)
    assert k_neg.disc == -4
    assert k_neg.case_tag is CaseTag.NEG_DISC
    assert k_neg.period == 2


def test_validate_nonneg_example(k_pos):
    assert (k_pos.A, k_pos.B, k_pos.C) == (-1, 0, -1)
    assert k_pos.disc == 4
    assert k_pos.case_tag is CaseTag.NON_NEG_DISC
    assert k_pos.period == 1


@pytest.mark.parametrize("tails, err", [
    (([-3, -1], [2, -1], [2, -1]), ParityViolation),
    (([-4, -2], [2, -1], [2, -1]), ParityViolation),
    (([-4, 1], [2, -1], [2, -1]), SignViolation),
    (([4, -1], [2, -1], [2, -1]), SignViolation),
    (([-4, -1], [-2, -1], [2, -1]), SignViolation),
    (([-4], [2, -1], [2, -1]), TailTooShort),
])
def test_validate_rejections(tails, err):
    with pytest.raises(err) as exc:
        validate_family(*tails)
    assert exc.value.code == err.__name__


def test_odd_odd_violation_code():
    assert OddOddViolation.code == "OddOddViolation"
    assert issubclass(OddOddViolation, FamilyError)


def test_writhe_examples(k_neg, k_pos):
    # the alternating-sign writhe and summed framing, taken literally
    assert writhe_and_framing(k_neg) == (-3, -3, 12)
    assert writhe_and_framing(k_pos) == (-5, -1, 12)


def test_correction_without_odd_entries():
    k = validate_family([-2, -2, -3], [2, -2, -3], [2, -2, -3])
    assert k.sum_odd == -6
    w, f, corr = writhe_and_framing(k)
    assert corr == -2 * f - 2 * w == 24


def test_parse_tail():
    assert parse_tail("-4,-1").entries == (-4, -1)
    assert parse_tail("[2, -1]").entries == (2, -1)
    with pytest.raises(FamilyError):
        parse_tail("2,x")


tail_entries = st.lists(st.integers(-7, 7), min_size=1, max_size=5)


@given(tail_entries, tail_entries, tail_entries)
def test_validation_is_total(r, s, t):
    # every input is either accepted or rejected with a family error
    try:
        k = validate_family(r, s, t)
    except FamilyError as exc:
        assert exc.code
        return
    for tail in k.tails:
        v = tail.value()
        assert v.numerator % 2 and v.denominator % 2
    corr = writhe_and_framing(k)[2]
    assert corr == -4 * k.sum_odd


@given(st.integers(-8, -1).map(lambda x: 2 * x), st.integers(1, 6).map(lambda x: 2 * x),
       st.integers(1, 6).map(lambda x: 2 * x))
def test_disc_identity(r0, s0, t0):
    k = validate_family([r0, -1], [s0, -1], [t0, -1])
    assert k.disc == (s0 + t0) * (r0 + 2) + s0 * t0
    if k.A >= 0:
        assert k.disc < 0
    if k.case_tag is CaseTag.NEG_DISC:
        assert k.period == (s0 + t0) // 2
