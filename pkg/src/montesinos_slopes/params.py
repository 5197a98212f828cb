"""The knot family M([r0..rm], [s0..sp], [t0..tq]) and its bookkeeping.

A tail ``[x0, ..., xk]`` denotes the nested fraction
``1 / (x0 - 1 / (x1 - ... - 1 / xk))``.  Membership in the family is the
conjunction of two conditions on the three tails:

* parity: the last entry of each tail is odd, every other entry is even, and
  each tail evaluates to an odd/odd fraction;
* sign: ``s0 > 0``, ``t0 > 0``, every other entry is negative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

__all__ = [
    "FamilyError",
    "ZeroDenominator",
    "TailTooShort",
    "ParityViolation",
    "SignViolation",
    "OddOddViolation",
    "CaseTag",
    "ContinuedFraction",
    "MontesinosKnot",
    "eval_continued_fraction",
    "validate_family",
    "writhe_and_framing",
    "parse_tail",
    "knot",
]


class FamilyError(ValueError):
    """Base class for rejected instances; ``code`` is a stable identifier."""

    code = "FamilyError"


class ZeroDenominator(FamilyError):
    code = "ZeroDenominator"

    def __init__(self, entries, depth):
        self.depth = depth
        super().__init__(f"zero denominator in {list(entries)} at truncation depth {depth}")


class TailTooShort(FamilyError):
    code = "TailTooShort"


class ParityViolation(FamilyError):
    code = "ParityViolation"


class SignViolation(FamilyError):
    code = "SignViolation"


class OddOddViolation(FamilyError):
    code = "OddOddViolation"


class CaseTag(str, enum.Enum):
    NEG_DISC = "NegDisc"
    NON_NEG_DISC = "NonNegDisc"


@dataclass(frozen=True)
class ContinuedFraction:
    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    @property
    def length(self) -> int:
        """Index of the last entry (m for ``[r0..rm]``)."""
        return len(self.entries) - 1

    def value(self) -> Fraction:
        return eval_continued_fraction(self)

    def sum_positive(self) -> int:
        return sum(self.entries[1:])

    def sum_odd(self) -> int:
        """Sum of entries at positive odd indices."""
        return sum(self.entries[1::2])

    def sum_even(self) -> int:
        """Sum of entries at positive even indices."""
        return sum(self.entries[2::2])

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.entries) + "]"


def _as_cf(x) -> ContinuedFraction:
    if isinstance(x, ContinuedFraction):
        return x
    return ContinuedFraction(tuple(x))


def eval_continued_fraction(cf) -> Fraction:
    """Exact value of ``[x0..xk] = 1/(x0 - 1/(x1 - ... - 1/xk))``.

    ``Fraction`` keeps denominators positive, so negative values carry their
    sign in the numerator.
    """
    entries = _as_cf(cf).entries
    if not entries:
        raise TailTooShort("empty continued fraction")
    inner = Fraction(entries[-1])
    for depth in range(len(entries) - 2, -1, -1):
        if inner == 0:
            raise ZeroDenominator(entries, depth + 1)
        inner = entries[depth] - 1 / inner
    if inner == 0:
        raise ZeroDenominator(entries, 0)
    return 1 / inner


@dataclass(frozen=True)
class MontesinosKnot:
    r: ContinuedFraction
    s: ContinuedFraction
    t: ContinuedFraction
    fr: Fraction
    fs: Fraction
    ft: Fraction
    A: Fraction
    B: Fraction
    C: Fraction
    disc: Fraction
    case_tag: CaseTag
    period: int
    _key: tuple = field(repr=False, compare=False, default=())

    @property
    def tails(self) -> tuple[ContinuedFraction, ContinuedFraction, ContinuedFraction]:
        return (self.r, self.s, self.t)

    @property
    def r0(self) -> int:
        return self.r[0]

    @property
    def s0(self) -> int:
        return self.s[0]

    @property
    def t0(self) -> int:
        return self.t[0]

    @property
    def mpq(self) -> int:
        return self.r.length + self.s.length + self.t.length

    @property
    def sum_positive(self) -> int:
        return sum(x.sum_positive() for x in self.tails)

    @property
    def sum_odd(self) -> int:
        return sum(x.sum_odd() for x in self.tails)

    @property
    def sum_even(self) -> int:
        return sum(x.sum_even() for x in self.tails)

    @property
    def crossing_number(self) -> int:
        """Crossings of the standard twist-box diagram (not the minimal count)."""
        return sum(abs(x) for tail in self.tails for x in tail)

    def descriptor(self) -> str:
        return f"M({self.r},{self.s},{self.t})"

    def __str__(self):
        return self.descriptor()


def _check_tail(name: str, tail: ContinuedFraction, first_positive: bool) -> Fraction:
    if len(tail) < 2:
        raise TailTooShort(f"tail {name}={list(tail)} needs at least two entries")
    if any(x == 0 for x in tail):
        raise SignViolation(f"tail {name}={list(tail)} contains a zero entry")
    *body, last = tail.entries
    if last % 2 == 0 or any(x % 2 for x in body):
        raise ParityViolation(
            f"tail {name}={list(tail)}: last entry must be odd and all others even"
        )
    head_ok = tail[0] > 0 if first_positive else tail[0] < 0
    if not head_ok or any(x >= 0 for x in tail.entries[1:]):
        want = "positive" if first_positive else "negative"
        raise SignViolation(
            f"tail {name}={list(tail)}: first entry must be {want}, the rest negative"
        )
    value = eval_continued_fraction(tail)
    if value.numerator % 2 == 0 or value.denominator % 2 == 0:
        raise OddOddViolation(f"tail {name}={list(tail)} evaluates to {value}, not odd/odd")
    return value


def validate_family(r, s, t) -> MontesinosKnot:
    """Check both family conditions and populate the derived quantities."""
    r, s, t = _as_cf(r), _as_cf(s), _as_cf(t)
    fr = _check_tail("r", r, first_positive=False)
    fs = _check_tail("s", s, first_positive=True)
    ft = _check_tail("t", t, first_positive=True)
    r0, s0, t0 = r[0], s[0], t[0]
    A = Fraction(-(r0 + s0 + 2), 2)
    B = Fraction(-(r0 + 2))
    C = Fraction(-(r0 + t0 + 2), 2)
    disc = 4 * A * C - B * B
    assert disc == (s0 + t0) * (r0 + 2) + s0 * t0
    if disc < 0:
        tag, period = CaseTag.NEG_DISC, (s0 + t0) // 2
    else:
        tag, period = CaseTag.NON_NEG_DISC, 1
    return MontesinosKnot(r, s, t, fr, fs, ft, A, B, C, disc, tag, period,
                          _key=(r.entries, s.entries, t.entries))


def knot(r: Sequence[int], s: Sequence[int], t: Sequence[int]) -> MontesinosKnot:
    """Shorthand for :func:`validate_family`."""
    return validate_family(r, s, t)


def parse_tail(text: str) -> ContinuedFraction:
    """Parse the comma-separated tail notation, e.g. ``"-4,-1"``."""
    parts = [p.strip() for p in text.replace("[", "").replace("]", "").split(",")]
    try:
        return ContinuedFraction(tuple(int(p) for p in parts if p))
    except ValueError as exc:
        raise FamilyError(f"cannot parse tail {text!r}") from exc


def writhe_and_framing(k: MontesinosKnot) -> tuple[int, int, int]:
    """Return ``(writhe, framing, correction_exponent)``.

    ``framing`` is the total twisting F(K) introduced by the graph moves and
    ``correction_exponent`` the power of f(n) that restores the 0-framing.
    """
    framing = sum(sum(tail) for tail in k.tails)
    writhe = sum((-1) ** (i + 1) * x for tail in k.tails for i, x in enumerate(tail))
    correction = -2 * framing - 2 * writhe
    assert correction == -4 * k.sum_odd
    return writhe, framing, correction
