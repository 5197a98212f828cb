"""Skein-theoretic building blocks and their maximal degrees.

Everything is a Laurent polynomial in ``v`` (``v = A^-1`` for the Kauffman
variable ``A``).  Colors are nonnegative integers; the family state sums only
ever use even colors, which keeps every exponent integral.

The closed-form degree functions (``d_plus_*``) are the tabulated maximal
degrees of the corresponding polynomials.  They return ``int`` when the value
is integral and ``Fraction`` otherwise.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache

from .laurent import ONE, ZERO, LaurentPoly, exact_div

__all__ = [
    "Inadmissible",
    "OddFraming",
    "qint",
    "qfact",
    "qbinomial",
    "qmultinomial",
    "framing_f",
    "framing_power",
    "unknot_O",
    "theta",
    "delta6j",
    "delta_z_range",
    "is_admissible",
    "d_plus_f",
    "d_plus_O",
    "d_plus_theta",
    "d_plus_delta",
    "g",
]

log = logging.getLogger(__name__)


class Inadmissible(ValueError):
    """Colors violating parity or the triangle inequality."""


class OddFraming(ValueError):
    """The framing factor has no ``+-1`` sign for odd colors."""


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


@lru_cache(maxsize=None)
def qint(k: int) -> LaurentPoly:
    """Quantum integer ``[k] = (v^2k - v^-2k)/(v^2 - v^-2)``."""
    if k < 0:
        raise ValueError("quantum integers are only used for k >= 0")
    return LaurentPoly({2 * k - 2 - 4 * i: 1 for i in range(k)})


@lru_cache(maxsize=None)
def qfact(k: int) -> LaurentPoly:
    if k < 0:
        raise ValueError("negative factorial")
    if k == 0:
        return ONE
    return qfact(k - 1) * qint(k)


@lru_cache(maxsize=None)
def _qmultinomial(parts: tuple[int, ...]) -> LaurentPoly:
    den = ONE
    for a in parts:
        den = den * qfact(a)
    return exact_div(qfact(sum(parts)), den)


def qmultinomial(parts) -> LaurentPoly:
    """Symmetric multinomial ``[a1+..+ar]! / ([a1]!...[ar]!)``."""
    parts = tuple(int(a) for a in parts)
    if any(a < 0 for a in parts):
        raise ValueError("multinomial parts must be nonnegative")
    # the value is symmetric, so a sorted key shares cache entries
    return _qmultinomial(tuple(sorted(parts)))


def qbinomial(n, k) -> LaurentPoly:
    """``[n; k]``, zero outside ``0 <= k <= n``."""
    if k != int(k) or n != int(n):
        return ZERO
    n, k = int(n), int(k)
    if n < 0 or k < 0 or k > n:
        return ZERO
    return qmultinomial((k, n - k))


def framing_f(a: int) -> tuple[int, LaurentPoly]:
    """``f(a) = (sqrt -1)^-a v^(-a(a+2)/2)`` as ``(sign, monomial)``."""
    if a % 2:
        raise OddFraming(f"f({a}) has a non-real sign for odd color")
    sign = -1 if (a // 2) % 2 else 1
    return sign, LaurentPoly.monomial(sign, -a * (a + 2) // 2)


def framing_power(a: int, k: int) -> tuple[int, int]:
    """``f(a)^k`` as ``(sign, exponent)``.

    Odd colors are allowed when ``k`` is a multiple of 4, which is how the
    0-framing correction ``f(n)^(-4(...))`` enters for odd ``n``.
    """
    if a % 2 == 0:
        sign = -1 if (a // 2) % 2 and k % 2 else 1
        return sign, -k * a * (a + 2) // 2
    if k % 4:
        raise OddFraming(f"f({a})^{k} has a non-real sign")
    return 1, -(k // 2) * a * (a + 2)


@lru_cache(maxsize=None)
def unknot_O(k: int) -> LaurentPoly:
    """Value of the ``k``-colored unknot, ``(-1)^k [k+1]``."""
    q = qint(k + 1)
    return -q if k % 2 else q


def is_admissible(a: int, b: int, c: int) -> bool:
    return (a + b + c) % 2 == 0 and abs(a - b) <= c <= a + b and min(a, b, c) >= 0


@lru_cache(maxsize=None)
def _theta(a: int, b: int, c: int) -> LaurentPoly:
    half = (a + b + c) // 2
    parts = (half - a, half - b, half - c)
    return unknot_O(half) * qmultinomial(parts)


def theta(a: int, b: int, c: int) -> LaurentPoly:
    """Theta graph evaluation ``O^((a+b+c)/2) [ (a+b+c)/2 ; ... ]``."""
    if not is_admissible(a, b, c):
        raise Inadmissible(f"theta({a},{b},{c}) is not admissible")
    return _theta(*sorted((a, b, c)))


def delta_z_range(a, b, c, al, be, ga) -> range | None:
    """Summation range of the 6j quotient, from the binomial supports alone.

    Returns ``None`` when some lower argument can never be an integer.
    """
    tops = ((-a + b + c), (a - b + c), (a + b - c))
    if any(x % 2 for x in tops) or (a + b + c) % 2:
        return None
    tops = tuple(x // 2 for x in tops)
    offs = (a + be + ga, al + b + ga, al + be + c)
    if any(x % 2 for x in offs):
        return None
    offs = tuple(x // 2 for x in offs)
    if min(tops) < 0:
        return range(0)
    # [z+1; (a+b+c)/2+1] needs z >= (a+b+c)/2; [top; z-off] needs off <= z <= off+top
    lo = max((a + b + c) // 2, *offs)
    hi = min(o + t for o, t in zip(offs, tops))
    return range(lo, hi + 1)


@lru_cache(maxsize=None)
def delta6j(a: int, b: int, c: int, al: int, be: int, ga: int) -> LaurentPoly:
    """The quotient ``Delta(a,b,c,alpha,beta,gamma)`` of a 6j-symbol by a theta."""
    zr = delta_z_range(a, b, c, al, be, ga)
    if not zr:
        log.debug("delta6j%s: empty z-range", (a, b, c, al, be, ga))
        return ZERO
    log.debug("delta6j%s: z in [%d, %d]", (a, b, c, al, be, ga), zr.start, zr.stop - 1)
    half = (a + b + c) // 2
    t1, t2, t3 = (-a + b + c) // 2, (a - b + c) // 2, (a + b - c) // 2
    o1, o2, o3 = (a + be + ga) // 2, (al + b + ga) // 2, (al + be + c) // 2
    total = ZERO
    for z in zr:
        term = (qbinomial(z + 1, half + 1) * qbinomial(t1, z - o1)
                * qbinomial(t2, z - o2) * qbinomial(t3, z - o3))
        total = total + (term if (z - half) % 2 == 0 else -term)
    return total


# -- maximal degrees ------------------------------------------------------


def g(n, k):
    """Degree of the quantum binomial ``[n; k]``: ``2k(n-k)``."""
    return 2 * k * (n - k)


def d_plus_f(a):
    return _num(Fraction(-a * (a + 2), 2))


def d_plus_O(a):
    return 2 * a


def d_plus_theta(a, b, c):
    return _num(a * (1 - a) + b * (1 - b) + c * (1 - c) + Fraction((a + b + c) ** 2, 2))


def d_plus_delta(a, b, c, al, be, ga):
    m = Fraction(a + b + c + al + be + ga - max(a + al, b + be, c + ga), 2)
    return _num(
        g(m + 1, Fraction(a + b + c, 2) + 1)
        + g(Fraction(-a + b + c, 2), m - Fraction(a + be + ga, 2))
        + g(Fraction(a - b + c, 2), m - Fraction(al + b + ga, 2))
        + g(Fraction(a + b - c, 2), m - Fraction(al + be + c, 2))
    )
