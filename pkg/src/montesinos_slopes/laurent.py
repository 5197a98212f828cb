"""Exact Laurent polynomials in one variable ``v`` with integer coefficients.

Storage is dense: a lowest exponent plus a tuple of coefficients whose first
and last entries are nonzero.  The zero polynomial is the empty tuple.  Large
products go through Kronecker substitution so that the heavy lifting happens
inside CPython's big-integer multiplication.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "NonExactDivision",
    "DegreeOfZero",
    "add",
    "mul",
    "exact_div",
    "max_degree",
]

_KRONECKER_MIN_LEN = 24


class NonExactDivision(ArithmeticError):
    """Raised when a division in the Laurent ring leaves a remainder."""


class DegreeOfZero(ValueError):
    """Raised when asking for the degree of the zero polynomial."""


def _strip(lo: int, coeffs: list[int]) -> tuple[int, tuple[int, ...]]:
    start = 0
    stop = len(coeffs)
    while start < stop and coeffs[start] == 0:
        start += 1
    while stop > start and coeffs[stop - 1] == 0:
        stop -= 1
    if start == stop:
        return 0, ()
    return lo + start, tuple(coeffs[start:stop])


def _pack(values: list[int], width: int) -> int:
    return int.from_bytes(b"".join(x.to_bytes(width, "little") for x in values), "little")


def _kronecker(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width

    def pack_signed(seq):
        pos = [x if x > 0 else 0 for x in seq]
        neg = [-x if x < 0 else 0 for x in seq]
        return _pack(pos, width) - _pack(neg, width)

    n_out = len(a) + len(b) - 1
    prod = pack_signed(a) * pack_signed(b)
    half = 1 << (bits - 1)
    offset = int.from_bytes(half.to_bytes(width, "little") * n_out, "little")
    raw = (prod + offset).to_bytes(width * n_out, "little")
    return [
        int.from_bytes(raw[i * width:(i + 1) * width], "little") - half
        for i in range(n_out)
    ]


def _schoolbook(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class LaurentPoly:
    """Immutable Laurent polynomial ``sum c_k v^k``."""

    __slots__ = ("_lo", "_c", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        if not terms:
            self._lo, self._c = 0, ()
        else:
            lo = min(terms)
            hi = max(terms)
            dense = [0] * (hi - lo + 1)
            for k, c in terms.items():
                dense[k - lo] += int(c)
            self._lo, self._c = _strip(lo, dense)
        self._hash = None

    @classmethod
    def _raw(cls, lo: int, coeffs) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._lo, obj._c = _strip(lo, list(coeffs))
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPoly":
        return cls._raw(exponent, [coeff])

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls._raw(0, [c])

    # -- accessors -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def terms(self) -> dict[int, int]:
        """Mapping exponent -> nonzero coefficient."""
        return {self._lo + i: c for i, c in enumerate(self._c) if c}

    def coefficient(self, k: int) -> int:
        i = k - self._lo
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def min_degree(self) -> int:
        if not self._c:
            raise DegreeOfZero("degree of the zero polynomial")
        return self._lo

    def max_degree(self) -> int:
        if not self._c:
            raise DegreeOfZero("degree of the zero polynomial")
        return self._lo + len(self._c) - 1

    def leading_coefficient(self) -> int:
        if not self._c:
            raise DegreeOfZero("leading coefficient of the zero polynomial")
        return self._c[-1]

    def term_count(self) -> int:
        return sum(1 for c in self._c if c)

    def coefficient_list(self) -> list[int]:
        """Dense coefficients from the top degree down (zeros included)."""
        return list(reversed(self._c))

    def evaluate(self, x):
        """Evaluate at ``x`` (an int, Fraction, or anything with ``**``).

        Integers are promoted to ``Fraction`` so negative powers stay exact.
        """
        if isinstance(x, int):
            x = Fraction(x)
        total = sum(c * x ** (self._lo + i) for i, c in enumerate(self._c) if c)
        if isinstance(total, Fraction) and total.denominator == 1:
            return total.numerator
        return total

    def substitute_inverse(self) -> "LaurentPoly":
        """``p(v) -> p(1/v)``."""
        if not self._c:
            return self
        return LaurentPoly._raw(-self.max_degree(), reversed(self._c))

    def scale_exponents(self, k: int) -> "LaurentPoly":
        """``p(v) -> p(v^k)`` for a positive integer ``k``."""
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return LaurentPoly({k * e: c for e, c in self.terms().items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v^k``."""
        if not self._c:
            return self
        obj = LaurentPoly.__new__(LaurentPoly)
        obj._lo, obj._c, obj._hash = self._lo + k, self._c, None
        return obj

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._c:
            return other
        if not other._c:
            return self
        lo = min(self._lo, other._lo)
        hi = max(self.max_degree(), other.max_degree())
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self._c, self._lo - lo):
            out[i] += c
        for i, c in enumerate(other._c, other._lo - lo):
            out[i] += c
        return LaurentPoly._raw(lo, out)

    __radd__ = __add__

    def __neg__(self):
        obj = LaurentPoly.__new__(LaurentPoly)
        obj._lo, obj._c, obj._hash = self._lo, tuple(-c for c in self._c), None
        return obj

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return ZERO
        a, b = self._c, other._c
        lo = self._lo + other._lo
        if len(a) == 1:
            x = a[0]
            return LaurentPoly._raw(lo, [x * y for y in b])
        if len(b) == 1:
            y = b[0]
            return LaurentPoly._raw(lo, [x * y for x in a])
        if min(len(a), len(b)) < _KRONECKER_MIN_LEN:
            return LaurentPoly._raw(lo, _schoolbook(a, b))
        return LaurentPoly._raw(lo, _kronecker(a, b))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return False
        return self._lo == other._lo and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._lo, self._c))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # -- text form -------------------------------------------------------

    def to_text(self) -> str:
        """Serialise as ``c*v^k`` terms in descending exponent order."""
        if not self._c:
            return "0"
        parts = []
        for k in range(self.max_degree(), self._lo - 1, -1):
            c = self.coefficient(k)
            if not c:
                continue
            if not parts:
                parts.append(f"{c}*v^{k}")
            elif c < 0:
                parts.append(f"- {-c}*v^{k}")
            else:
                parts.append(f"+ {c}*v^{k}")
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return ZERO
        terms: dict[int, int] = {}
        compact = text.replace(" ", "")
        pos = 0
        for m in _TERM_RE.finditer(compact):
            if m.start() != pos:
                raise ValueError(f"cannot parse Laurent polynomial: {text!r}")
            pos = m.end()
            k = int(m.group(2))
            terms[k] = terms.get(k, 0) + int(m.group(1))
        if pos != len(compact):
            raise ValueError(f"cannot parse Laurent polynomial: {text!r}")
        return cls(terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly({self.to_text()!r})"


_TERM_RE = re.compile(r"([+-]?\d+)\*v\^(-?\d+)")


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1, 1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def max_degree(p: LaurentPoly) -> int:
    return p.max_degree()


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``d`` with ``d * q == p``; raise :class:`NonExactDivision` otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if p.is_zero():
        return ZERO
    qc = q._c
    if len(qc) == 1:
        lead = qc[0]
        out = []
        for c in p._c:
            quo, rem = divmod(c, lead)
            if rem:
                raise NonExactDivision(f"{p} is not divisible by {q}")
            out.append(quo)
        return LaurentPoly._raw(p._lo - q._lo, out)
    n, d = len(p._c), len(qc)
    if n < d:
        raise NonExactDivision(f"{p} is not divisible by {q}")
    rem = list(p._c)
    lead = qc[-1]
    quot = [0] * (n - d + 1)
    for i in range(n - d, -1, -1):
        c = rem[i + d - 1]
        if c:
            f, r = divmod(c, lead)
            if r:
                raise NonExactDivision(f"{p} is not divisible by {q}")
            quot[i] = f
            for j in range(d):
                rem[i + j] -= f * qc[j]
    if any(rem):
        raise NonExactDivision(f"{p} is not divisible by {q}")
    return LaurentPoly._raw(p._lo - q._lo, quot)


def poly_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    """Sum many polynomials with a single dense accumulator."""
    acc: dict[int, int] = {}
    for p in items:
        lo = p._lo
        for i, c in enumerate(p._c):
            if c:
                k = lo + i
                acc[k] = acc.get(k, 0) + c
    return LaurentPoly(acc)
