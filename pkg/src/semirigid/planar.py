"""Three-direction systems on finite sets of integer points.

A point set carries three equivalence relations: equal coordinate sum,
equal x, and equal y.  A triangle is a triple of points pairwise linked by
the three different directions; repeatedly completing triangles inside a
carrier set is a closure operator, and a set generated by at most two
points is called monogenic.  A finite monogenic set without a center of
symmetry induces a semirigid system; that is the certificate implemented
here, sound but not complete.

All arithmetic in this module is exact: integers for points, Fractions for
homothety fitting.  Floating point is deliberately absent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Iterable, Mapping

from .core import Partition, System

__all__ = [
    "Point",
    "PlanarSet",
    "Homothety",
    "GroupEnvelope",
    "Certificate",
    "CertificateResult",
    "EmbedResult",
    "induced_system",
    "is_triangle",
    "delta_step",
    "closure",
    "is_monogenic",
    "group_envelope",
    "symmetry_center",
    "semirigidity_certificate",
    "fit_homothety",
    "normalize",
    "embed_search",
    "parse_points",
    "format_points",
    "points_from_json_dict",
    "points_to_json_dict",
]

Point = tuple[int, int]


class PlanarSet:
    """A finite set of integer points, kept sorted and deduplicated."""

    __slots__ = ("points", "_set")

    def __init__(self, points: Iterable):
        pts = sorted({(int(p[0]), int(p[1])) for p in points})
        self.points = tuple(pts)
        self._set = frozenset(pts)

    def __contains__(self, p) -> bool:
        return p in self._set

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def issuperset(self, other: Iterable[Point]) -> bool:
        return self._set.issuperset(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanarSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PlanarSet({list(self.points)})"


@dataclass(frozen=True)
class Homothety:
    """The map u -> scale*u + shift on the plane, in exact rationals."""

    scale: Fraction
    shift: tuple[Fraction, Fraction]

    def apply(self, p: Point) -> tuple[Fraction, Fraction]:
        return (
            self.scale * p[0] + self.shift[0],
            self.scale * p[1] + self.shift[1],
        )


@dataclass(frozen=True)
class GroupEnvelope:
    """Coset base + (step Z x step Z) containing everything a point set can
    generate by triangle completion.  step 0 means the single point base."""

    base: Point
    step: int

    def contains(self, p: Point) -> bool:
        dx = p[0] - self.base[0]
        dy = p[1] - self.base[1]
        if self.step == 0:
            return dx == 0 and dy == 0
        return dx % self.step == 0 and dy % self.step == 0


class Certificate(Enum):
    CERTIFIED_SEMIRIGID = "CertifiedSemirigid"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CertificateResult:
    """Certificate verdict with the evidence that produced it."""

    verdict: Certificate
    generator: tuple[Point, ...] | None
    doubled_center: Point | None


def induced_system(c: PlanarSet) -> System:
    """Arity-3 system on the points in sorted order: relation 0 groups equal
    coordinate sums, relation 1 equal x, relation 2 equal y."""
    if not c.points:
        raise ValueError("empty point set has no induced system")
    pts = c.points
    return System(
        len(pts),
        (
            Partition(x + y for x, y in pts),
            Partition(x for x, _ in pts),
            Partition(y for _, y in pts),
        ),
    )


def is_triangle(u0: Point, u1: Point, u2: Point) -> bool:
    """u0,u1 share y; u1,u2 share coordinate sum; u2,u0 share x.  Repeated
    points are allowed (degenerate triangles)."""
    return (
        u0[1] == u1[1]
        and u1[0] + u1[1] == u2[0] + u2[1]
        and u2[0] == u0[0]
    )


def _third_vertices(a: Point, b: Point) -> tuple[Point, ...]:
    """Points completing a triangle that has a and b among its vertices.

    Two distinct points share at most one of the three directions, and each
    shared direction determines at most two completions.
    """
    if a == b:
        return (a,)
    out = []
    if a[1] == b[1]:  # same y
        out.append((a[0], b[0] + b[1] - a[0]))
        out.append((b[0], a[0] + a[1] - b[0]))
    elif a[0] == b[0]:  # same x
        out.append((b[0] + b[1] - a[1], a[1]))
        out.append((a[0] + a[1] - b[1], b[1]))
    elif a[0] + a[1] == b[0] + b[1]:  # same sum
        out.append((b[0], a[1]))
        out.append((a[0], b[1]))
    return tuple(out)


def _check_subset(c: PlanarSet, x: Iterable) -> frozenset[Point]:
    pts = frozenset((int(p[0]), int(p[1])) for p in x)
    if not c.issuperset(pts):
        raise ValueError("subset is not contained in the carrier set")
    return pts


def delta_step(c: PlanarSet, x: Iterable[Point]) -> PlanarSet:
    """One round of triangle completion inside c, including x itself."""
    pts = _check_subset(c, x)
    grown = set(pts)
    ordered = sorted(pts)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            for cand in _third_vertices(a, b):
                if cand in c:
                    grown.add(cand)
    return PlanarSet(grown)


def closure(c: PlanarSet, x: Iterable[Point]) -> PlanarSet:
    """Least subset of c containing x and closed under triangle completion."""
    pts = _check_subset(c, x)
    members = set(pts)
    work = sorted(members)
    while work:
        p = work.pop()
        for q in list(members):
            for cand in _third_vertices(p, q):
                if cand in c and cand not in members:
                    members.add(cand)
                    work.append(cand)
    return PlanarSet(members)


def group_envelope(x: Iterable[Point]) -> GroupEnvelope:
    """Envelope coset of a non-empty point set: the base is the smallest
    point, the step the gcd of all coordinate differences (0 for a single
    point)."""
    pts = sorted({(int(p[0]), int(p[1])) for p in x})
    if not pts:
        raise ValueError("envelope of the empty set is undefined")
    base = pts[0]
    d = 0
    for px, py in pts:
        d = gcd(d, abs(px - base[0]))
        d = gcd(d, abs(py - base[1]))
    return GroupEnvelope(base, d)


def is_monogenic(c: PlanarSet) -> tuple[Point, ...] | None:
    """A generating subset of at most two points, or None.

    Candidate pairs are pre-filtered through the envelope: a pair whose
    envelope coset misses some point of c cannot generate c.
    """
    pts = c.points
    if len(pts) <= 2:
        return pts
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            pair = (pts[i], pts[j])
            env = group_envelope(pair)
            if not all(env.contains(p) for p in pts):
                continue
            if len(closure(c, pair)) == len(pts):
                return pair
    return None


def symmetry_center(c: PlanarSet) -> Point | None:
    """Doubled center s with u -> s-u mapping c onto itself, or None.

    The actual center s/2 may be half-integral; representing it doubled
    keeps the arithmetic in the integers.  Any center must send the first
    point somewhere in c, so s ranges over first point + each point.
    """
    pts = c.points
    if not pts:
        raise ValueError("empty point set has no center")
    u0 = pts[0]
    for v in pts:
        s = (u0[0] + v[0], u0[1] + v[1])
        if all((s[0] - p[0], s[1] - p[1]) in c for p in pts):
            return s
    return None


def semirigidity_certificate(c: PlanarSet) -> CertificateResult:
    """Certified semirigid iff c is monogenic and has no center of symmetry.

    Sound but incomplete: an inconclusive verdict says nothing, and some
    non-monogenic sets do induce semirigid systems.
    """
    if not c.points:
        raise ValueError("empty point set cannot be certified")
    generator = is_monogenic(c)
    center = symmetry_center(c)
    certified = generator is not None and center is None
    verdict = Certificate.CERTIFIED_SEMIRIGID if certified else Certificate.INCONCLUSIVE
    return CertificateResult(verdict, generator, center)


def fit_homothety(c: PlanarSet, f: Mapping[Point, Point]) -> Homothety | None:
    """Exact (scale, shift) with f(u) = scale*u + shift on all of c, if any.

    A constant map fits with scale 0 and shift equal to the constant value.
    """
    pts = c.points
    if not pts:
        return Homothety(Fraction(1), (Fraction(0), Fraction(0)))
    imgs = [f[p] for p in pts]
    first = imgs[0]
    if all(v == first for v in imgs):
        return Homothety(Fraction(0), (Fraction(first[0]), Fraction(first[1])))
    u, fu = pts[0], imgs[0]
    v = fv = None
    for q, fq in zip(pts[1:], imgs[1:]):
        if fq != fu:
            v, fv = q, fq
            break
    assert v is not None
    dx, dy = v[0] - u[0], v[1] - u[1]
    ex, ey = fv[0] - fu[0], fv[1] - fu[1]
    if dx != 0:
        scale = Fraction(ex, dx)
        if scale * dy != ey:
            return None
    else:
        if ex != 0:
            return None
        scale = Fraction(ey, dy)
    shift = (fu[0] - scale * u[0], fu[1] - scale * u[1])
    for p, fp in zip(pts, imgs):
        if scale * p[0] + shift[0] != fp[0] or scale * p[1] + shift[1] != fp[1]:
            return None
    return Homothety(scale, shift)


def normalize(c: PlanarSet) -> PlanarSet:
    """Translate the smallest point to the origin and divide out the
    envelope gcd.  The induced system is unchanged: translations and
    uniform coordinate scaling preserve all three kernels."""
    pts = c.points
    if not pts:
        return c
    bx, by = pts[0]
    moved = [(x - bx, y - by) for x, y in pts]
    d = 0
    for x, y in moved:
        d = gcd(d, abs(x))
        d = gcd(d, abs(y))
    if d > 1:
        moved = [(x // d, y // d) for x, y in moved]
    return PlanarSet(moved)


@dataclass(frozen=True)
class EmbedResult:
    """Point per element, plus which relation plays which direction.

    ``relation_order`` is (sum, x, y): relation_order[0] is the index of the
    relation realized by equal coordinate sums, and so on.
    """

    points: tuple[Point, ...]
    relation_order: tuple[int, int, int]


def embed_search(
    m: System, grid: int | None = None, fixed_order: bool = False
) -> EmbedResult | None:
    """Injective placement of the elements on [0,g)^2 whose three direction
    kernels reproduce the system's relations exactly.

    By default all six relation-to-direction assignments are tried, because
    a system may embed only after permuting directions; ``fixed_order``
    pins relation 0 to sums, 1 to x, 2 to y.  Absence within the grid bound
    is a normal result (None), not an error.  Worst case is exponential;
    no better bound is known for this decision problem.
    """
    if m.arity != 3:
        raise ValueError("embedding needs exactly three relations")
    g = m.n if grid is None else int(grid)
    if g < 1:
        raise ValueError("grid bound must be positive")
    # distinct directions have orthogonal kernels, so any two relations must
    # intersect in the equality relation or no placement can be exact
    for i in range(3):
        for j in range(i + 1, 3):
            pairs = set(zip(m.relations[i].labels, m.relations[j].labels))
            if len(pairs) != m.n:
                return None
    orders = [(0, 1, 2)] if fixed_order else list(permutations(range(3)))
    for order in orders:
        points = _embed_with_order(m, order, g)
        if points is not None:
            return EmbedResult(tuple(points), order)
    return None


def _embed_with_order(m: System, order: tuple[int, int, int], g: int):
    r_sum, r_x, r_y = order
    ls = m.relations[r_sum].labels
    lx = m.relations[r_x].labels
    ly = m.relations[r_y].labels
    ncx = m.relations[r_x].num_classes
    ncy = m.relations[r_y].num_classes
    ncs = m.relations[r_sum].num_classes
    if ncx > g or ncy > g:
        return None

    # adjacency: which (other-class, sum-class) pairs each class participates in
    xadj: list[list[tuple[int, int]]] = [[] for _ in range(ncx)]
    yadj: list[list[tuple[int, int]]] = [[] for _ in range(ncy)]
    for e in range(m.n):
        xadj[lx[e]].append((ly[e], ls[e]))
        yadj[ly[e]].append((lx[e], ls[e]))

    xv = [-1] * ncx
    yv = [-1] * ncy
    sv: list[int | None] = [None] * ncs
    sused: set[int] = set()
    xused: set[int] = set()
    yused: set[int] = set()

    # interleave x- and y-classes so sum constraints bind as early as possible
    variables: list[tuple[str, int]] = []
    for c in range(max(ncx, ncy)):
        if c < ncx:
            variables.append(("x", c))
        if c < ncy:
            variables.append(("y", c))

    def place(vi: int) -> bool:
        if vi == len(variables):
            return True
        kind, c = variables[vi]
        if kind == "x":
            values, used, adj, other = xv, xused, xadj[c], yv
        else:
            values, used, adj, other = yv, yused, yadj[c], xv
        for val in range(g):
            if val in used:
                continue
            touched: list[int] = []
            ok = True
            for d, cs in adj:
                if other[d] < 0:
                    continue
                s = val + other[d]
                if sv[cs] is None:
                    if s in sused:
                        ok = False
                        break
                    sv[cs] = s
                    sused.add(s)
                    touched.append(cs)
                elif sv[cs] != s:
                    ok = False
                    break
            if ok:
                values[c] = val
                used.add(val)
                if place(vi + 1):
                    return True
                used.discard(val)
                values[c] = -1
            for cs in touched:
                sused.discard(sv[cs])  # type: ignore[arg-type]
                sv[cs] = None
        return False

    if not place(0):
        return None
    points = [(xv[lx[e]], yv[ly[e]]) for e in range(m.n)]
    # exactness check: the three kernels of the placement equal the relations
    assert len(set(points)) == m.n
    for e in range(m.n):
        for f in range(e + 1, m.n):
            pe, pf = points[e], points[f]
            assert (ls[e] == ls[f]) == (pe[0] + pe[1] == pf[0] + pf[1])
            assert (lx[e] == lx[f]) == (pe[0] == pf[0])
            assert (ly[e] == ly[f]) == (pe[1] == pf[1])
    return points


def parse_points(text: str) -> PlanarSet:
    """Point-set text format: one ``x y`` pair per line, ``#`` comments."""
    pts = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {ln}: expected 'x y', got {raw!r}")
        try:
            pts.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ValueError(f"line {ln}: coordinates must be integers: {raw!r}") from None
    return PlanarSet(pts)


def format_points(c: PlanarSet) -> str:
    return "".join(f"{x} {y}\n" for x, y in c.points)


def points_from_json_dict(data: dict) -> PlanarSet:
    if not isinstance(data, dict) or "points" not in data:
        raise ValueError('point-set JSON needs a "points" key')
    pts = data["points"]
    if not isinstance(pts, list) or any(
        not isinstance(p, list) or len(p) != 2 for p in pts
    ):
        raise ValueError('"points" must be a list of [x, y] pairs')
    return PlanarSet((p[0], p[1]) for p in pts)


def points_to_json_dict(c: PlanarSet) -> dict:
    return {"points": [[x, y] for x, y in c.points]}
