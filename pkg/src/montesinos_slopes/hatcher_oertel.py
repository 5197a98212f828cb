"""Edgepath systems in the Hatcher-Oertel diagram for the knot family.

Vertices ``<p/q>`` sit at ``u = (q-1)/q, v = p/q``.  Paths run from right to
left (towards smaller denominators).  An edge is *increasing* when ``v`` goes
up as it is traversed leftwards; its sign is +1, and -1 for decreasing.  The
signs below are always read off the coordinates, never assumed.

Three systems are built per knot:

* ``delta``: a Seifert surface, the reference for boundary slopes;
* ``gamma``: a type I system ending at ``u0`` (negative discriminant only);
* ``beta``: a type II system ending at ``<0>``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .params import CaseTag, MontesinosKnot

__all__ = [
    "VertexKind",
    "Vertex",
    "EdgeKind",
    "Edge",
    "Edgepath",
    "EdgepathSystem",
    "SurfaceInvariants",
    "DegenerateEdge",
    "WrongCase",
    "Unsupported",
    "InadmissibleSystem",
    "arc",
    "farey_adjacent",
    "uv_point_on_edge",
    "partial_fraction",
    "compute_u0",
    "locate_k_and_fraction",
    "build_seifert_system",
    "build_type1_system",
    "build_type2_system",
    "check_admissibility",
    "incompressibility_check",
    "twist",
    "euler_ratio",
    "closed_form_surface",
    "staircase_edges",
    "surface_summary",
    "describe",
]


class DegenerateEdge(ValueError):
    pass


class WrongCase(ValueError):
    """Type I systems only exist for a negative discriminant."""


class Unsupported(ValueError):
    pass


class InadmissibleSystem(AssertionError):
    def __init__(self, name: str, violations: list[str]):
        self.violations = violations
        super().__init__(f"{name} violates {', '.join(violations)}")


# -- diagram --------------------------------------------------------------


class VertexKind(str, enum.Enum):
    ARC = "Arc"
    CIRCLE = "Circle"
    INFINITY = "Infinity"


@dataclass(frozen=True)
class Vertex:
    kind: VertexKind
    slope: Fraction | None = None

    @property
    def p(self) -> int:
        return self.slope.numerator

    @property
    def q(self) -> int:
        return self.slope.denominator

    def uv(self) -> tuple[Fraction, Fraction]:
        if self.kind is VertexKind.INFINITY:
            return Fraction(-1), Fraction(0)
        if self.kind is VertexKind.CIRCLE:
            return Fraction(1), self.slope
        return Fraction(self.q - 1, self.q), self.slope

    def __str__(self):
        if self.kind is VertexKind.INFINITY:
            return "<inf>"
        text = str(self.slope)
        return f"<{text}>" + ("o" if self.kind is VertexKind.CIRCLE else "")


def arc(x) -> Vertex:
    return Vertex(VertexKind.ARC, Fraction(x))


ZERO_VERTEX = arc(0)


def farey_adjacent(x: Fraction, y: Fraction) -> bool:
    x, y = Fraction(x), Fraction(y)
    return abs(x.numerator * y.denominator - x.denominator * y.numerator) == 1


class EdgeKind(str, enum.Enum):
    NON_HORIZONTAL = "NonHorizontal"
    HORIZONTAL = "Horizontal"
    VERTICAL = "Vertical"
    INFINITY = "Infinity"
    CONSTANT = "Constant"
    PARTIAL = "Partial"


@dataclass(frozen=True)
class Edge:
    """Traversed from ``near`` (right) towards ``far`` (left).

    ``fraction`` is the portion of the edge actually covered; anything below
    1 makes it a partial edge stopping in the interior.
    """

    near: Vertex
    far: Vertex
    fraction: Fraction = Fraction(1)
    kind: EdgeKind = field(default=None)
    sign: int = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "fraction", Fraction(self.fraction))
        if self.near.kind is not VertexKind.ARC or self.far.kind is not VertexKind.ARC:
            if self.kind in (EdgeKind.INFINITY, EdgeKind.HORIZONTAL, EdgeKind.CONSTANT):
                object.__setattr__(self, "sign", 0 if self.sign is None else self.sign)
                return
            raise DegenerateEdge("only arc vertices are traversed here")
        if not farey_adjacent(self.near.slope, self.far.slope):
            raise DegenerateEdge(f"{self.near} and {self.far} are not joined by an edge")
        if not 0 < self.fraction <= 1:
            raise DegenerateEdge(f"edge fraction {self.fraction} outside (0, 1]")
        if self.near.q == 1 and self.far.q == 1:
            kind = EdgeKind.VERTICAL
        elif self.fraction < 1:
            kind = EdgeKind.PARTIAL
        else:
            kind = EdgeKind.NON_HORIZONTAL
        if self.kind is not None and self.kind is not kind:
            raise DegenerateEdge(f"edge declared {self.kind.value} but is {kind.value}")
        dv = self.far.slope - self.near.slope
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "sign", 1 if dv > 0 else -1)

    @property
    def length(self) -> Fraction:
        return Fraction(0) if self.kind is EdgeKind.CONSTANT else self.fraction

    def end_uv(self) -> tuple[Fraction, Fraction]:
        return uv_point_on_edge(self.far, self.near, self.fraction)

    def r_value(self) -> int:
        if self.kind is EdgeKind.VERTICAL:
            return 0
        return abs(self.near.q - self.far.q)

    def __str__(self):
        arrow = "<+" if self.sign > 0 else "<-"
        if self.fraction == 1:
            return f"{self.far} {arrow} {self.near}"
        return f"({self.fraction}){self.far} {arrow} {self.near}"


def uv_point_on_edge(far: Vertex, near: Vertex, t) -> tuple[Fraction, Fraction]:
    """Point a fraction ``t`` of the way from ``near`` to ``far``.

    The point is the projective combination ``t<r/s> + (1-t)<p/q>``, so
    ``1/(1-u)`` interpolates linearly between the denominators.
    """
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise DegenerateEdge(f"fraction {t} outside [0, 1]")
    if far.kind is not VertexKind.ARC or near.kind is not VertexKind.ARC:
        raise DegenerateEdge("interpolation needs two arc vertices")
    if far == near:
        raise DegenerateEdge("an edge needs two distinct endpoints")
    den = t * far.q + (1 - t) * near.q
    return 1 - 1 / den, (t * far.p + (1 - t) * near.p) / den


def partial_fraction(near: Vertex, far: Vertex, u) -> Fraction:
    """Fraction of the edge ``near -> far`` covered when stopping at ``u``."""
    if near.q == far.q:
        raise DegenerateEdge("u is constant along this edge")
    return (near.q - 1 / (1 - Fraction(u))) / (near.q - far.q)


def _cf_point(entries: Sequence[int]) -> Vertex:
    """``<[x0..xk]>``; zero entries are allowed and handled projectively."""
    num, den = 1, 0  # the innermost tail is infinity
    for x in reversed(entries):
        num, den = x * num - den, num
    if num == 0:
        return Vertex(VertexKind.INFINITY)
    return arc(Fraction(den, num))


def _F(tail: Sequence[int], level: int, x: int) -> Vertex:
    return _cf_point(list(tail[:level]) + [x])


# -- systems -----------------------------------------------------------------


@dataclass(frozen=True)
class Edgepath:
    tangle: Fraction
    edges: tuple[Edge, ...]

    @property
    def start(self) -> Vertex:
        return arc(self.tangle)

    def is_constant(self) -> bool:
        return not self.edges

    def vertices(self) -> list[Vertex]:
        if not self.edges:
            return [self.start]
        return [self.edges[0].near] + [e.far for e in self.edges]

    def end_uv(self) -> tuple[Fraction, Fraction]:
        if not self.edges:
            return self.start.uv()
        return self.edges[-1].end_uv()

    def length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    def final_edge(self) -> Edge | None:
        return self.edges[-1] if self.edges else None


class SystemType(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"


@dataclass(frozen=True)
class EdgepathSystem:
    name: str
    paths: tuple[Edgepath, Edgepath, Edgepath]

    def __post_init__(self):
        if len(self.paths) != 3:
            raise ValueError("a system has exactly three edgepaths")

    @property
    def ending_u(self) -> Fraction:
        return self.paths[0].end_uv()[0]

    @property
    def type_tag(self) -> SystemType:
        u = self.ending_u
        return SystemType.I if u > 0 else SystemType.II if u == 0 else SystemType.III

    @property
    def r_cycle(self) -> tuple[int, int, int]:
        out = []
        for p in self.paths:
            e = p.final_edge()
            out.append(0 if e is None else e.r_value())
        return tuple(out)

    def has_vertical(self) -> bool:
        return any(e.kind is EdgeKind.VERTICAL for p in self.paths for e in p.edges)


def _cancel_backtracks(verts: list[Vertex]) -> list[Vertex]:
    # a tail ending in -1 names the same vertex as a shorter tail, and the
    # row pattern then walks out and straight back; the two edges have
    # opposite signs, so dropping them leaves the twist unchanged
    out: list[Vertex] = []
    for v in verts:
        if len(out) >= 2 and out[-2] == v:
            out.pop()
        elif not out or out[-1] != v:
            out.append(v)
    return out


def _path_from_vertices(tangle: Fraction, verts: list[Vertex], last_fraction=Fraction(1)) -> Edgepath:
    verts = _cancel_backtracks(verts)
    edges = []
    for i, (a, b) in enumerate(zip(verts, verts[1:])):
        frac = last_fraction if i == len(verts) - 2 else Fraction(1)
        edges.append(Edge(a, b, frac))
    return Edgepath(Fraction(tangle), tuple(edges))


def _seifert_vertices(tail: Sequence[int]) -> list[Vertex]:
    k = len(tail) - 1
    verts = []
    level = k
    if k % 2 == 0:
        verts.append(_cf_point(tail))
        level = k - 1
    for L in range(level, 0, -2):
        verts.extend(_F(tail, L, x) for x in range(tail[L], 0))
    verts.append(ZERO_VERTEX)
    return verts


def _staircase_vertices(tail: Sequence[int]) -> list[Vertex]:
    """Every row of the type II path up to ``[x0, -1]``."""
    k = len(tail) - 1
    verts = [_F(tail, k, x) for x in range(tail[k], 0)]
    for L in range(k - 1, 0, -1):
        verts.extend(_F(tail, L, x) for x in range(tail[L] + 2, 0))
    return verts


def _checked(sys: EdgepathSystem) -> EdgepathSystem:
    bad = check_admissibility(sys)
    if bad:
        raise InadmissibleSystem(sys.name, bad)
    return sys


def build_seifert_system(k: MontesinosKnot) -> EdgepathSystem:
    paths = tuple(
        _path_from_vertices(tail.value(), _seifert_vertices(tail.entries)) for tail in k.tails
    )
    return _checked(EdgepathSystem("delta", paths))


def build_type2_system(k: MontesinosKnot) -> EdgepathSystem:
    paths = tuple(
        _path_from_vertices(tail.value(), _staircase_vertices(tail.entries) + [ZERO_VERTEX])
        for tail in k.tails
    )
    return _checked(EdgepathSystem("beta", paths))


def compute_u0(k: MontesinosKnot) -> Fraction:
    """Common ``u`` of the type I ending points."""
    if k.case_tag is not CaseTag.NEG_DISC:
        raise WrongCase(f"{k} has nonnegative discriminant; no type I system")
    s0, t0, r0 = k.s0, k.t0, k.r0
    u0 = Fraction(s0 * t0, s0 * t0 + s0 + t0)
    for y in (r0 + 1, s0 + 1, t0 + 1):
        assert u0 < arc(Fraction(1, y)).uv()[0], f"u0 is not left of <1/{y}>"
    return u0


def locate_k_and_fraction(k: MontesinosKnot) -> tuple[int, Fraction]:
    """Edge ``<1/(r0+j+1)> --- <1/(r0+j)>`` holding the ``r`` ending point, and the fraction."""
    u0 = compute_u0(k)
    target = 1 / (1 - u0)
    for j in range(0, -k.r0 - 1):
        q = -(k.r0 + j)
        if q - 1 < target <= q:
            t = q - target
            assert t == -(k.r0 + j) - 1 - Fraction(k.s0 * k.t0, k.s0 + k.t0)
            return j, t
    raise AssertionError(f"no edge of the <1/y> chain contains u0 for {k}")


def build_type1_system(k: MontesinosKnot) -> EdgepathSystem:
    u0 = compute_u0(k)
    j, t = locate_k_and_fraction(k)
    r0 = k.r0
    rv = _staircase_vertices(k.r.entries)
    rv.extend(arc(Fraction(1, r0 + i)) for i in range(2, j + 1))
    if t:
        rv.append(arc(Fraction(1, r0 + j + 1)))
        rpath = _path_from_vertices(k.fr, rv, t)
    else:
        rpath = _path_from_vertices(k.fr, rv)
    paths = [rpath]
    for tail in (k.s, k.t):
        verts = _staircase_vertices(tail.entries)
        frac = partial_fraction(verts[-1], ZERO_VERTEX, u0)
        paths.append(_path_from_vertices(tail.value(), verts + [ZERO_VERTEX], frac))
    return _checked(EdgepathSystem("gamma", tuple(paths)))


# -- checks and invariants ---------------------------------------------------------


def check_admissibility(sys: EdgepathSystem) -> list[str]:
    """Names of the violated conditions among E1-E4 (empty when admissible)."""
    bad = []
    for p in sys.paths:
        if p.edges and p.edges[0].near != p.start:
            bad.append("E1")
            break
    for p in sys.paths:
        verts = p.vertices()
        ok = True
        for a, b in zip(p.edges, p.edges[1:]):
            if a.fraction != 1 or b.near != a.far:
                ok = False
        for x, y, z in zip(verts, verts[1:], verts[2:]):
            if x == z or (x.kind is VertexKind.ARC and z.kind is VertexKind.ARC
                          and farey_adjacent(x.slope, z.slope)):
                ok = False
        if any(e.length == 0 and e.kind is not EdgeKind.CONSTANT for e in p.edges):
            ok = False
        if not ok:
            bad.append("E2")
            break
    ends = [p.end_uv() for p in sys.paths]
    if len({u for u, _ in ends}) != 1 or sum(v for _, v in ends) != 0:
        bad.append("E3")
    for p in sys.paths:
        if any(e.kind is not EdgeKind.VERTICAL and e.end_uv()[0] >= e.near.uv()[0]
               for e in p.edges):
            bad.append("E4")
            break
    return bad


def incompressibility_check(sys: EdgepathSystem) -> bool:
    cycle = sorted(sys.r_cycle)
    if sys.has_vertical():
        return cycle not in ([0, 1, 2], [0, 0, 2])
    if cycle.count(1) < 2 and not (1 in cycle and 2 in cycle):
        return True
    if 1 in cycle and 2 in cycle:
        signs = {p.final_edge().sign for p in sys.paths if p.final_edge() is not None}
        return len(signs) == 1
    return False


def twist(sys: EdgepathSystem, zero_end_weight=1) -> Fraction:
    """Total twist; complete edges arriving at ``<0>`` are scaled by ``zero_end_weight``."""
    total = Fraction(0)
    for p in sys.paths:
        if p.is_constant():
            continue
        for e in p.edges:
            w = Fraction(zero_end_weight) if (e.far == ZERO_VERTEX and e.fraction == 1) else 1
            total += -2 * e.sign * e.length * w
    return total


def euler_ratio(sys: EdgepathSystem) -> Fraction:
    """``chi(S) / #S`` for a type I or type II system."""
    tag = sys.type_tag
    n = len(sys.paths)
    if tag is SystemType.I:
        u0 = sys.ending_u
        const = [p for p in sys.paths if p.is_constant()]
        lengths = sum((p.length() for p in sys.paths if not p.is_constant()), Fraction(0))
        inv = sum((Fraction(1, p.start.q) for p in const), Fraction(0))
        neg = lengths + len(const) - n + (n - 2 - inv) / (1 - u0)
        return -neg
    if tag is SystemType.II:
        positive, contact = Fraction(0), Fraction(0)
        for p in sys.paths:
            hit = None
            for e in p.edges:
                if e.near.uv()[0] == 0:
                    hit = e.near
                    break
                positive += e.length
            if hit is None:
                hit = p.edges[-1].far if p.edges else p.start
            contact += hit.uv()[1]
        return -(positive + abs(contact) - 2)
    raise Unsupported("type III systems are not handled")


@dataclass(frozen=True)
class SurfaceInvariants:
    twist: Fraction
    boundary_slope: Fraction
    chi_ratio: Fraction
    twist_seifert: Fraction


def closed_form_surface(k: MontesinosKnot) -> SurfaceInvariants:
    mpq, sp = k.mpq, k.sum_positive
    tau0 = Fraction(2 - 2 * mpq - 2 * k.sum_odd)
    r0, s0, t0 = k.r0, k.s0, k.t0
    if k.case_tag is CaseTag.NEG_DISC:
        tau = Fraction(2 * t0 * t0, s0 + t0) - 2 * (r0 + t0 + 2) + 8 - 4 * mpq - 2 * sp
        bs = Fraction(2 * t0 * t0, s0 + t0) - 2 * (r0 + t0 + 2) + 6 - 2 * mpq - 2 * k.sum_even
        chi = Fraction(r0 + 2 * mpq + sp)
    else:
        tau = Fraction(8 - 4 * mpq - 2 * sp)
        bs = Fraction(6 - 2 * mpq - 2 * k.sum_even)
        chi = Fraction(2 * mpq - 4 + sp)
    assert bs == tau - tau0
    return SurfaceInvariants(tau, bs, chi, tau0)


def matching_system(k: MontesinosKnot) -> EdgepathSystem:
    if k.case_tag is CaseTag.NEG_DISC:
        return build_type1_system(k)
    return build_type2_system(k)


def edgepath_surface(k: MontesinosKnot) -> SurfaceInvariants:
    """Invariants computed from the constructed edgepath systems."""
    delta = build_seifert_system(k)
    sys = matching_system(k)
    tau0, tau = twist(delta), twist(sys)
    return SurfaceInvariants(tau, tau - tau0, euler_ratio(sys), tau0)


def staircase_edges(tail: Sequence[int]) -> tuple[Edge, Edge]:
    """Edges from ``<[x0..xk]>`` to ``<[x0..x(k-1)]>`` and to ``<[x0..xk + 1]>``."""
    here = _cf_point(tail)
    up = _cf_point(tail[:-1])
    down = _cf_point(list(tail[:-1]) + [tail[-1] + 1])
    return Edge(here, up), Edge(here, down)


def _text(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def surface_summary(k: MontesinosKnot) -> dict:
    delta = build_seifert_system(k)
    sys = matching_system(k)
    if k.case_tag is CaseTag.NEG_DISC:
        u0 = compute_u0(k)
        j, t = locate_k_and_fraction(k)
        u0s, js, ts = _text(u0), j, _text(t)
    else:
        u0s, js, ts = _text(0), None, None
    tau0, tau = twist(delta), twist(sys)
    return {
        "case": k.case_tag.value,
        "system": sys.name,
        "type": sys.type_tag.value,
        "u0": u0s,
        "k": js,
        "t": ts,
        "r_cycle": list(sys.r_cycle),
        "twist_S0": _text(tau0),
        "twist_S": _text(tau),
        "bs": _text(tau - tau0),
        "chi_ratio": _text(euler_ratio(sys)),
        "admissibility": check_admissibility(sys) + check_admissibility(delta),
        "incompressible": incompressibility_check(sys) and incompressibility_check(delta),
    }


def describe(sys: EdgepathSystem) -> str:
    """One line per path, leftmost vertex first; ``<+``/``<-`` mark signs."""
    lines = [f"{sys.name} (type {sys.type_tag.value}, r-cycle {sys.r_cycle})"]
    for p in sys.paths:
        if p.is_constant():
            lines.append(f"  {p.start}")
            continue
        parts = []
        for e in reversed(p.edges):
            head = f"({e.fraction})" if e.fraction != 1 else ""
            parts.append(f"{head}{e.far} {'<+' if e.sign > 0 else '<-'}")
        lines.append("  " + " ".join(parts) + f" {p.start}")
    return "\n".join(lines)
