"""2-colored Jones polynomial from a planar diagram by full Kauffman state expansion.

The diagram is assembled from twist boxes.  A tangle has four boundary
points NW, NE, SW, SE; horizontal twisting adds crossings to the right
(tangle sum), vertical twisting stacks them underneath.  A crossing has
ports 0..3 in counterclockwise order, with 0-2 the under strand.  Tail
``[x0..xk]`` is realised as vertical twists for even positions and
horizontal twists for odd ones, applied from ``xk`` outwards, and the knot is
the numerator closure of the sum of the three tangles.

The result is independent of :mod:`colored_jones`: it only shares the
Laurent polynomial type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .laurent import LaurentPoly, ZERO, exact_div, poly_sum
from .params import MontesinosKnot
from .quantum import qint

__all__ = [
    "NotAKnot",
    "CrossingLimitExceeded",
    "Diagram",
    "montesinos_diagram",
    "kauffman_bracket",
    "kauffman_oracle",
    "jones_from_j2",
    "determinant",
    "calibrate_mirror",
    "DEFAULT_CROSSING_LIMIT",
]

DEFAULT_CROSSING_LIMIT = 16


class NotAKnot(ValueError):
    """The assembled diagram does not have exactly one component."""


class CrossingLimitExceeded(ValueError):
    pass


# -- tangle assembly -------------------------------------------------------------


@dataclass
class _Builder:
    crossings: int = 0
    points: int = 0
    wires: list = field(default_factory=list)

    def point(self):
        self.points += 1
        return ("p", self.points - 1)

    def crossing(self, positive: bool) -> dict:
        """A crossing in a box; over strand SW-NE when ``positive``."""
        c = self.crossings
        self.crossings += 1
        if positive:
            ports = {"NW": 0, "SW": 1, "SE": 2, "NE": 3}
        else:
            ports = {"SW": 0, "SE": 1, "NE": 2, "NW": 3}
        return {corner: ("x", c, p) for corner, p in ports.items()}

    def wire(self, a, b):
        self.wires.append((a, b))


def _zero_tangle(b: _Builder) -> dict:
    nw, ne, sw, se = (b.point() for _ in range(4))
    b.wire(nw, ne)
    b.wire(sw, se)
    return {"NW": nw, "NE": ne, "SW": sw, "SE": se}


def _infinity_tangle(b: _Builder) -> dict:
    nw, ne, sw, se = (b.point() for _ in range(4))
    b.wire(nw, sw)
    b.wire(ne, se)
    return {"NW": nw, "NE": ne, "SW": sw, "SE": se}


def _add(b: _Builder, left: dict, right: dict) -> dict:
    b.wire(left["NE"], right["NW"])
    b.wire(left["SE"], right["SW"])
    return {"NW": left["NW"], "SW": left["SW"], "NE": right["NE"], "SE": right["SE"]}


def _stack(b: _Builder, top: dict, bottom: dict) -> dict:
    b.wire(top["SW"], bottom["NW"])
    b.wire(top["SE"], bottom["NE"])
    return {"NW": top["NW"], "NE": top["NE"], "SW": bottom["SW"], "SE": bottom["SE"]}


def _twist(b: _Builder, t: dict, n: int, vertical: bool) -> dict:
    for _ in range(abs(n)):
        x = b.crossing(n > 0)
        t = _stack(b, t, x) if vertical else _add(b, t, x)
    return t


def _rational_tangle(b: _Builder, tail: Sequence[int]) -> dict:
    k = len(tail) - 1
    t = _infinity_tangle(b) if k % 2 == 0 else _zero_tangle(b)
    for i in range(k, -1, -1):
        w = tail[i] if i % 2 == 0 else -tail[i]
        t = _twist(b, t, w, vertical=(i % 2 == 0))
    return t


# -- the closed diagram -------------------------------------------------------


@dataclass(frozen=True)
class Diagram:
    """Crossing ports joined by arcs: ``partner[4c + p]`` is the port across the arc."""

    n_crossings: int
    partner: tuple[int, ...]
    free_loops: int
    components: int
    writhe: int


def _close(b: _Builder, mirror: bool) -> Diagram:
    # collapse chains through boundary points into port-to-port arcs
    adj: dict = {}
    for a, c in b.wires:
        adj.setdefault(a, []).append(c)
        adj.setdefault(c, []).append(a)
    n = b.crossings
    partner = [-1] * (4 * n)
    seen_points = set()

    def idx(node):
        return 4 * node[1] + node[2]

    for node in list(adj):
        if node[0] != "x" or partner[idx(node)] >= 0:
            continue
        (nxt,) = adj[node]
        prev = node
        while nxt[0] == "p":
            seen_points.add(nxt)
            a, c = adj[nxt]
            prev, nxt = nxt, (c if a == prev else a)
        partner[idx(node)] = idx(nxt)
        partner[idx(nxt)] = idx(node)
    if any(p < 0 for p in partner):
        raise NotAKnot("dangling crossing port")
    free = 0
    for node in adj:
        if node[0] == "p" and node not in seen_points:
            free += 1
            stack = [node]
            while stack:
                cur = stack.pop()
                if cur in seen_points:
                    continue
                seen_points.add(cur)
                stack.extend(adj[cur])

    # orient each component by walking it, and read off crossing signs
    direction = [None] * (4 * n)  # +1 when the strand leaves through this port
    components = free
    for start in range(4 * n):
        if direction[start] is not None:
            continue
        components += 1
        port = start
        while direction[port] is None:
            direction[port] = -1
            out = port ^ 2  # straight through the crossing
            direction[out] = 1
            port = partner[out]
    writhe = 0
    for c in range(n):
        under_in = 4 * c if direction[4 * c] == -1 else 4 * c + 2
        over_out = 4 * c + 1 if direction[4 * c + 1] == 1 else 4 * c + 3
        sign = 1 if over_out - 4 * c == (under_in - 4 * c + 1) % 4 else -1
        writhe += -sign if mirror else sign
    return Diagram(n, tuple(partner), free, components, writhe)


def montesinos_diagram(k: MontesinosKnot, *, mirror: bool = False) -> Diagram:
    """Diagram of the numerator closure of the three-tangle sum.

    ``mirror`` swaps every crossing (the bracket then uses ``A -> A^-1``).
    """
    b = _Builder()
    total = None
    for tail in k.tails:
        t = _rational_tangle(b, tail.entries)
        total = t if total is None else _add(b, total, t)
    b.wire(total["NW"], total["NE"])
    b.wire(total["SW"], total["SE"])
    return _close(b, mirror)


def kauffman_bracket(d: Diagram, *, mirror: bool = False) -> LaurentPoly:
    """``<D>`` in ``A``, with every loop (including an isolated one) worth ``-A^2 - A^-2``.

    Returned as a Laurent polynomial whose variable is ``A``.
    """
    n = d.n_crossings
    partner = d.partner
    loops_count: dict[tuple[int, int], int] = {}
    for state in range(1 << n):
        # A-smoothing joins ports (0,1) and (2,3); B joins (0,3) and (1,2)
        smooth = [0] * (4 * n)
        a_count = 0
        for c in range(n):
            base = 4 * c
            if (state >> c) & 1:
                smooth[base], smooth[base + 1] = base + 3, base + 2
                smooth[base + 2], smooth[base + 3] = base + 1, base
            else:
                a_count += 1
                smooth[base], smooth[base + 1] = base + 1, base
                smooth[base + 2], smooth[base + 3] = base + 3, base + 2
        seen = bytearray(4 * n)
        loops = d.free_loops
        for s in range(4 * n):
            if seen[s]:
                continue
            loops += 1
            p = s
            while not seen[p]:
                seen[p] = 1
                q = smooth[p]
                seen[q] = 1
                p = partner[q]
        key = (a_count - (n - a_count), loops)
        loops_count[key] = loops_count.get(key, 0) + 1
    delta = LaurentPoly({2: -1, -2: -1})
    total = []
    for (exp, loops), mult in sorted(loops_count.items()):
        term = (delta ** loops).shift(exp)
        total.append(term * mult)
    out = poly_sum(total)
    return out.substitute_inverse() if mirror else out


def kauffman_oracle(k: MontesinosKnot, *, mirror: bool = False,
                    crossing_limit: int | None = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    """Unnormalised ``J_K(2)`` in ``v = A^-1`` from the state expansion."""
    if crossing_limit is not None and k.crossing_number > crossing_limit:
        raise CrossingLimitExceeded(
            f"{k} has {k.crossing_number} crossings, limit is {crossing_limit}")
    d = montesinos_diagram(k, mirror=mirror)
    if d.components != 1:
        raise NotAKnot(f"{k} assembles to {d.components} components")
    br = kauffman_bracket(d, mirror=mirror)
    # (-A^3)^-w <D>, times -1 so that the unknot gives [2]
    sign = -1 if d.writhe % 2 else 1
    j = br.shift(-3 * d.writhe)
    j = -j if sign < 0 else j
    return (-j).substitute_inverse()


def jones_from_j2(j2: LaurentPoly) -> LaurentPoly:
    """Normalised Jones polynomial ``J(2)/[2]``."""
    return exact_div(j2, qint(2))


def determinant(j2: LaurentPoly) -> int:
    """``|V(-1)|``, read from a 2-colored Jones polynomial with exponents divisible by 4."""
    v = jones_from_j2(j2)
    total = 0
    for e, c in v.terms().items():
        if e % 4:
            raise ValueError("exponents are not multiples of 4")
        total += c if (e // 4) % 2 == 0 else -c
    return abs(total)


def calibrate_mirror(k: MontesinosKnot, reference: LaurentPoly) -> bool | None:
    """Which mirror choice reproduces ``reference``; ``None`` if neither does."""
    for mirror in (False, True):
        if kauffman_oracle(k, mirror=mirror, crossing_limit=None) == reference:
            return mirror
    return None
