"""Exact colored Jones polynomial of the family via the trivalent-graph state sum.

``J_K(n+1)`` is a sum over the color domain ``D_n``: every tail entry gets an
even color in ``[0, 2n]`` and the three head colors ``(a0, b0, c0)`` must
satisfy the triangle inequality.  Each summand carries one factor
``theta(x, n, n)^-1`` per tail entry.  Those factors are not individually
polynomial, so every summand is scaled by the common denominator
``[2n+1]!`` per entry and the total is divided once at the end; the final
division must be exact.
"""

from __future__ import annotations

import itertools
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .laurent import ONE, ZERO, LaurentPoly, NonExactDivision, exact_div, poly_sum
from .params import MontesinosKnot, writhe_and_framing
from .quantum import (delta6j, framing_power, is_admissible, qfact, qint, theta,
                      unknot_O)

__all__ = [
    "ColorAssignment",
    "BudgetExceeded",
    "StateSumInvariantError",
    "enumerate_domain",
    "domain_size",
    "state_sum",
    "DEFAULT_MAX_ASSIGNMENTS",
]

log = logging.getLogger(__name__)

DEFAULT_MAX_ASSIGNMENTS = 20_000


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, needed: int, budget: int, done: int = 0):
        self.what, self.needed, self.budget, self.done = what, needed, budget, done
        super().__init__(f"{what}: needs {needed} units, budget is {budget} (completed {done})")


class StateSumInvariantError(AssertionError):
    """The summed numerator was not divisible by the common denominator."""


@dataclass(frozen=True)
class ColorAssignment:
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    n: int

    def __post_init__(self):
        for x in self.a + self.b + self.c:
            if x % 2 or not 0 <= x <= 2 * self.n:
                raise ValueError(f"color {x} is not an even integer in [0, {2 * self.n}]")
        if not is_admissible(self.a[0], self.b[0], self.c[0]):
            raise ValueError(f"head colors {(self.a[0], self.b[0], self.c[0])} violate the triangle inequality")

    @property
    def head(self) -> tuple[int, int, int]:
        return self.a[0], self.b[0], self.c[0]

    def flat(self) -> tuple[int, ...]:
        return self.a + self.b + self.c


def _head_triples(n: int) -> list[tuple[int, int, int]]:
    colors = range(0, 2 * n + 1, 2)
    return [t for t in itertools.product(colors, repeat=3) if is_admissible(*t)]


def domain_size(k: MontesinosKnot, n: int) -> int:
    return len(_head_triples(n)) * (n + 1) ** k.mpq


def enumerate_domain(k: MontesinosKnot, n: int) -> Iterator[ColorAssignment]:
    """All of ``D_n`` in lexicographic order of ``(a0..am, b0..bp, c0..cq)``."""
    if n < 0:
        raise ValueError("color parameter must be nonnegative")
    colors = range(0, 2 * n + 1, 2)
    la, lb, lc = len(k.r), len(k.s), len(k.t)
    for a in itertools.product(colors, repeat=la):
        for b in itertools.product(colors, repeat=lb):
            if abs(a[0] - b[0]) > 2 * n:
                continue
            for c in itertools.product(colors, repeat=lc):
                if is_admissible(a[0], b[0], c[0]):
                    yield ColorAssignment(a, b, c, n)


# -- per-color factors ------------------------------------------------------


@lru_cache(maxsize=None)
def _scaled_theta_inverse(x: int, n: int) -> LaurentPoly:
    """``[2n+1]! / theta(x, n, n)``, which is a genuine polynomial."""
    return exact_div(qfact(2 * n + 1), theta(x, n, n))


@lru_cache(maxsize=None)
def _entry_factor(x: int, n: int, twist: int) -> LaurentPoly:
    """``f(x)^twist * O^x * [2n+1]!/theta(x,n,n)`` for one tail entry."""
    sign, exp = framing_power(x, twist)
    p = (unknot_O(x) * _scaled_theta_inverse(x, n)).shift(exp)
    return -p if sign < 0 else p


@lru_cache(maxsize=None)
def _chain_delta(x: int, y: int, n: int) -> LaurentPoly:
    return delta6j(x, n, n, y, n, n)


@lru_cache(maxsize=None)
def _head_factor(a: int, b: int, c: int, n: int) -> LaurentPoly:
    d = delta6j(a, b, c, n, n, n)
    return theta(a, b, c) * d * d


def _summand(k: MontesinosKnot, asg: ColorAssignment) -> LaurentPoly:
    n = asg.n
    term = _head_factor(*asg.head, n)
    for tail, cols in zip(k.tails, (asg.a, asg.b, asg.c)):
        for i in range(len(cols) - 1):
            term = term * _chain_delta(cols[i], cols[i + 1], n)
        for x, col in zip(tail, cols):
            term = term * _entry_factor(col, n, x)
    return term


def _block_sum(args) -> LaurentPoly:
    k, assignments = args
    return poly_sum(_summand(k, asg) for asg in assignments)


# -- transfer evaluation along each tail -----------------------------------


def _tail_vector(tail: Sequence[int], n: int) -> dict[int, LaurentPoly]:
    colors = range(0, 2 * n + 1, 2)
    vec = {x: _entry_factor(x, n, tail[-1]) for x in colors}
    for twist in reversed(tail[:-1]):
        vec = {
            x: _entry_factor(x, n, twist)
            * poly_sum(_chain_delta(x, y, n) * vec[y] for y in colors)
            for x in colors
        }
    return vec


def _factored_numerator(k: MontesinosKnot, n: int) -> LaurentPoly:
    vr, vs, vt = (_tail_vector(tail.entries, n) for tail in k.tails)
    return poly_sum(
        _head_factor(a, b, c, n) * vr[a] * vs[b] * vt[c] for a, b, c in _head_triples(n)
    )


# -- public entry point ----------------------------------------------------


def _finish(k: MontesinosKnot, n: int, numerator: LaurentPoly) -> LaurentPoly:
    denominator_factors = [qint(j) for j in range(2, 2 * n + 2)]
    entries = len(k.r) + len(k.s) + len(k.t)
    result = numerator
    try:
        for _ in range(entries):
            for q in denominator_factors:
                result = exact_div(result, q)
    except NonExactDivision as exc:
        raise StateSumInvariantError(f"state sum for {k} at n={n} is not a Laurent polynomial") from exc
    _, _, correction = writhe_and_framing(k)
    sign, exp = framing_power(n, correction)
    if n % 2:
        sign = -sign
    result = result.shift(exp)
    return -result if sign < 0 else result


def state_sum(k: MontesinosKnot, n: int, *, method: str = "factored",
              partitions: int = 1, workers: int | None = None,
              max_assignments: int | None = DEFAULT_MAX_ASSIGNMENTS) -> LaurentPoly:
    """Return ``J_K(n+1)`` as an exact Laurent polynomial.

    ``method="direct"`` sums over every assignment of ``D_n`` in lexicographic
    order, optionally split into ``partitions`` contiguous blocks (evaluated by
    ``workers`` processes).  ``method="factored"`` contracts each tail as a
    transfer product first; both give the same polynomial.
    """
    if n < 0:
        raise ValueError("color parameter must be nonnegative")
    if n == 0:
        return ONE
    size = domain_size(k, n)
    if method == "direct":
        if max_assignments is not None and size > max_assignments:
            raise BudgetExceeded("state_sum(direct)", size, max_assignments)
        assignments = list(enumerate_domain(k, n))
        partitions = max(1, min(partitions, len(assignments)))
        step = -(-len(assignments) // partitions)
        blocks = [(k, assignments[i:i + step]) for i in range(0, len(assignments), step)]
        if workers is None:
            workers = int(os.environ.get("MONTESINOS_WORKERS", "1"))
        if workers > 1 and len(blocks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                partial = list(pool.map(_block_sum, blocks))
        else:
            partial = [_block_sum(b) for b in blocks]
        numerator = poly_sum(partial)
    elif method == "factored":
        # cost grows like (n+1)^2 per tail entry instead of |D_n|
        cost = len(_head_triples(n)) + (n + 1) ** 2 * k.mpq
        if max_assignments is not None and cost > max_assignments:
            raise BudgetExceeded("state_sum(factored)", cost, max_assignments)
        numerator = _factored_numerator(k, n)
    else:
        raise ValueError(f"unknown method {method!r}")
    if numerator.is_zero():
        return ZERO
    return _finish(k, n, numerator)


def summand_is_polynomial(k: MontesinosKnot, asg: ColorAssignment) -> bool:
    """Whether a single summand, with its own theta factors, is polynomial."""
    term = _summand(k, asg)
    scale = qfact(2 * asg.n + 1) ** len(asg.flat())
    try:
        exact_div(term, scale)
    except NonExactDivision:
        return False
    return True
