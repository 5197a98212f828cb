"""The maximal degree of ``J_K(n)``, computed three independent ways.

1. :func:`brute_force_max_phi` maximises the term-degree function Phi over the
   whole color domain ``D_n`` (exhaustively, or by an exact max-plus dynamic
   program along each tail that visits the same domain).
2. :func:`reduced_max_R` scans the explicit two-variable quadratic ``R(b0, c0)``
   over the even lattice points of the triangle ``b0, c0 >= 0, b0 + c0 <= 2n``.
3. :func:`closed_form_degree` returns the quasi-quadratic in ``N = n + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .colored_jones import BudgetExceeded, ColorAssignment, domain_size, enumerate_domain
from .params import CaseTag, MontesinosKnot, writhe_and_framing
from .quantum import d_plus_delta, d_plus_f, d_plus_O, d_plus_theta, is_admissible

__all__ = [
    "QuasiQuadratic",
    "phi",
    "brute_force_max_phi",
    "reduced_R",
    "reduced_Q",
    "reduced_max_R",
    "closed_form_degree",
    "nearest_odd",
    "cancellation_exponent",
    "cancellation_parity_check",
    "check_b_nonpositive",
    "DEFAULT_BRUTE_FORCE_BUDGET",
]

DEFAULT_BRUTE_FORCE_BUDGET = 200_000


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class QuasiQuadratic:
    """``a N^2 + 2 b N + c[N mod period]``."""

    period: int
    a: Fraction
    b: Fraction
    c: tuple[Fraction, ...]

    def __post_init__(self):
        if self.period < 1 or len(self.c) != self.period:
            raise ValueError("need one constant per residue class")

    def evaluate(self, N: int):
        return _num(self.a * N * N + 2 * self.b * N + self.c[N % self.period])

    def constant(self, l: int) -> Fraction:
        return self.c[l % self.period]

    def as_dict(self) -> dict:
        return {
            "period": self.period,
            "a": _frac_str(self.a),
            "b": _frac_str(self.b),
            "c": [_frac_str(x) for x in self.c],
        }


def _frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


# -- Phi ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _entry_degree(x: int, n: int, twist: int):
    return twist * d_plus_f(x) + d_plus_O(x) - d_plus_theta(x, n, n)


@lru_cache(maxsize=None)
def _chain_degree(x: int, y: int, n: int):
    return d_plus_delta(x, n, n, y, n, n)


@lru_cache(maxsize=None)
def _head_degree(a: int, b: int, c: int, n: int):
    return d_plus_theta(a, b, c) + 2 * d_plus_delta(a, b, c, n, n, n)


def _framing_degree(k: MontesinosKnot, n: int):
    return writhe_and_framing(k)[2] * d_plus_f(n)


def _tail_degree(tail: Sequence[int], cols: Sequence[int], n: int):
    total = 0
    for i, (x, col) in enumerate(zip(tail, cols)):
        total += _entry_degree(col, n, x)
        if i + 1 < len(cols):
            total += _chain_degree(col, cols[i + 1], n)
    return total


def phi(k: MontesinosKnot, asg: ColorAssignment, n: int | None = None):
    """Degree bound of the summand of ``J_K(n+1)`` at ``asg``."""
    n = asg.n if n is None else n
    if asg.n != n:
        raise ValueError("assignment belongs to a different color parameter")
    if not is_admissible(*asg.head):
        raise ValueError(f"inadmissible head colors {asg.head}")
    total = _framing_degree(k, n) + _head_degree(*asg.head, n)
    for tail, cols in zip(k.tails, (asg.a, asg.b, asg.c)):
        total += _tail_degree(tail.entries, cols, n)
    return _num(total)


# -- route 1: exhaustive maximum over D_n ---------------------------------------


def _tail_tables(tail: Sequence[int], n: int):
    """Backward max-plus tables: best[i][x] and the optimal successors."""
    colors = range(0, 2 * n + 1, 2)
    m = len(tail) - 1
    best = [None] * (m + 1)
    succ = [None] * (m + 1)
    best[m] = {x: _entry_degree(x, n, tail[m]) for x in colors}
    for i in range(m - 1, -1, -1):
        best[i], succ[i] = {}, {}
        for x in colors:
            vals = {y: _chain_degree(x, y, n) + best[i + 1][y] for y in colors}
            top = max(vals.values())
            best[i][x] = _entry_degree(x, n, tail[i]) + top
            succ[i][x] = [y for y in colors if vals[y] == top]
    return best, succ


def _optimal_tails(succ, x0: int):
    out = [(x0,)]
    for level in succ[:-1]:
        out = [path + (y,) for path in out for y in level[path[-1]]]
    return out


def brute_force_max_phi(k: MontesinosKnot, n: int, *, method: str = "dp",
                        budget: int | None = DEFAULT_BRUTE_FORCE_BUDGET):
    """Exact maximum of Phi over ``D_n`` and the list of all maximisers.

    ``method="enumerate"`` walks every assignment.  ``method="dp"`` runs an
    exact max-plus recursion along each tail (Phi is a sum of single-color
    and nearest-neighbour terms along a tail), then scans all head triples.
    Neither uses any structural claim about where the maximum sits.
    """
    if method == "enumerate":
        size = domain_size(k, n)
        if budget is not None and size > budget:
            raise BudgetExceeded("brute_force_max_phi(enumerate)", size, budget)
        best, argmax = None, []
        for asg in enumerate_domain(k, n):
            val = phi(k, asg, n)
            if best is None or val > best:
                best, argmax = val, [asg]
            elif val == best:
                argmax.append(asg)
        return best, argmax
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")

    base = _framing_degree(k, n)
    tables = [_tail_tables(tail.entries, n) for tail in k.tails]
    colors = range(0, 2 * n + 1, 2)
    best, heads = None, []
    for a0, b0, c0 in itertools.product(colors, repeat=3):
        if not is_admissible(a0, b0, c0):
            continue
        val = (base + _head_degree(a0, b0, c0, n) + tables[0][0][0][a0]
               + tables[1][0][0][b0] + tables[2][0][0][c0])
        if best is None or val > best:
            best, heads = val, [(a0, b0, c0)]
        elif val == best:
            heads.append((a0, b0, c0))
    argmax = []
    for a0, b0, c0 in heads:
        for a, b, c in itertools.product(_optimal_tails(tables[0][1], a0),
                                         _optimal_tails(tables[1][1], b0),
                                         _optimal_tails(tables[2][1], c0)):
            argmax.append(ColorAssignment(a, b, c, n))
    argmax.sort(key=ColorAssignment.flat)
    return _num(best), argmax


# -- route 2: the reduced quadratic on the triangle ------------------------------


def _reduced_constant(k: MontesinosKnot, n: int) -> int:
    return ((6 - 2 * k.mpq) * n * n + 4 * n - 2 * n * (n + 1) * k.sum_positive
            + 2 * n * (n + 2) * k.sum_odd)


def _twice_R(k: MontesinosKnot, b0: int, c0: int, n: int) -> int:
    r0, s0, t0 = k.r0, k.s0, k.t0
    return (-(r0 + s0 + 2) * b0 * b0 - 2 * (r0 + 2) * b0 * c0 - (r0 + t0 + 2) * c0 * c0
            - 2 * (r0 + s0) * b0 - 2 * (r0 + t0) * c0 + 2 * _reduced_constant(k, n))


def reduced_R(k: MontesinosKnot, b0: int, c0: int, n: int):
    """Phi restricted to ``a0 = b0 + c0`` and every other tail color ``2n``."""
    return _num(Fraction(_twice_R(k, b0, c0, n), 2))


def reduced_Q(k: MontesinosKnot, b0: int, n: int):
    """``R`` on the edge ``b0 + c0 = 2n`` of the triangle."""
    r0, s0, t0 = k.r0, k.s0, k.t0
    val = (Fraction(-(s0 + t0), 2) * b0 * b0 + (2 * t0 * n - s0 + t0) * b0
           - 2 * (r0 + t0 + 2) * n * n - 2 * (r0 + t0) * n + _reduced_constant(k, n))
    return _num(val)


def reduced_max_R(k: MontesinosKnot, n: int, *, line_only: bool = False):
    """Max of ``R`` over even lattice points of the triangle, with all maximisers.

    With ``line_only`` the scan is the one-variable ``Q`` on ``b0 + c0 = 2n``.
    """
    if n < 0:
        raise ValueError("color parameter must be nonnegative")
    if line_only:
        pts = [(b0, 2 * n - b0) for b0 in range(0, 2 * n + 1, 2)]
        vals = [reduced_Q(k, b0, n) for b0, _ in pts]
    else:
        pts = [(b0, c0) for b0 in range(0, 2 * n + 1, 2) for c0 in range(0, 2 * n - b0 + 1, 2)]
        vals = [_twice_R(k, b0, c0, n) for b0, c0 in pts]
        top = max(vals)
        return _num(Fraction(top, 2)), [p for p, v in zip(pts, vals) if v == top]
    top = max(vals)
    return top, [p for p, v in zip(pts, vals) if v == top]


# -- route 3: closed form -------------------------------------------------------------


def nearest_odd(x: Fraction) -> int:
    """Odd integer nearest to ``x``; an even-integer ``x`` rounds up."""
    x = Fraction(x)
    below = 2 * ((x - 1) // 2) + 1
    if x - below < below + 2 - x:
        return int(below)
    return int(below + 2)


def closed_form_degree(k: MontesinosKnot, *, tie_break: str = "up") -> QuasiQuadratic:
    """The quasi-quadratic ``d_+ J_K(N)`` in the color ``N``.

    ``tie_break="down"`` picks the smaller odd number when the nearest odd
    integer is ambiguous; the constants do not depend on the choice.
    """
    r0, s0, t0 = k.r0, k.s0, k.t0
    mpq = k.mpq
    if k.case_tag is CaseTag.NEG_DISC:
        st = s0 + t0
        period = st // 2
        a = Fraction(2 * t0 * t0, st) - 2 * (r0 + t0 + 2) + 6 - 2 * mpq - 2 * k.sum_even
        b = Fraction(r0 + 2 * mpq + k.sum_positive)
        cs = []
        for l in range(period):
            x = Fraction(2 * t0 * l, st)
            v = nearest_odd(x)
            if tie_break == "down" and x.denominator == 1 and x.numerator % 2 == 0:
                v -= 2
            alpha = -x + v - 1
            cs.append(-Fraction(st, 2) * alpha * alpha - st * alpha
                      - 2 * mpq - 2 - 2 * k.sum_odd)
        return QuasiQuadratic(period, a, b, tuple(cs))
    a = Fraction(6 - 2 * mpq - 2 * k.sum_even)
    b = Fraction(2 * mpq - 4 + k.sum_positive)
    c = Fraction(2 - 2 * mpq - 2 * k.sum_odd)
    return QuasiQuadratic(1, a, b, (c,))


# -- sign analysis of tied maxima ---------------------------------------------------


def cancellation_exponent(k: MontesinosKnot, a0: int, b0: int, c0: int) -> int:
    """Exponent of ``-1`` in the leading coefficient that depends on the head colors."""
    twice = (k.r0 - 1) * a0 + (k.s0 - 1) * b0 + (k.t0 - 1) * c0
    assert twice % 2 == 0
    return twice // 2


def cancellation_parity_check(k: MontesinosKnot, n: int, argmax=None) -> bool:
    """True iff all maximal-degree summands carry the same sign.

    Every maximiser has its tail colors at ``2n``, so only the head colors
    contribute to the sign; two maximisers can only cancel when their
    exponents have different parity.  Adjacent maximisers on the edge
    ``b0 + c0 = 2n`` must differ by exactly ``t0 - s0``.
    """
    if argmax is None:
        _, argmax = brute_force_max_phi(k, n)
    heads = sorted({asg.head for asg in argmax})
    if len(heads) < 2:
        return True
    for asg in argmax:
        if any(x != 2 * n for x in asg.a[1:] + asg.b[1:] + asg.c[1:]):
            return False
    exps = {h: cancellation_exponent(k, *h) for h in heads}
    line = {h[1]: exps[h] for h in heads if h[0] == h[1] + h[2] == 2 * n}
    for b0 in line:
        if b0 + 2 in line and line[b0] - line[b0 + 2] != k.t0 - k.s0:
            return False
    return len({e % 2 for e in exps.values()}) == 1


def check_b_nonpositive(qq: QuasiQuadratic) -> bool:
    return qq.b <= 0
