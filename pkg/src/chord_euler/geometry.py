"""Exact planar predicates and simple-polygon structure.

All predicates decide on ``QSqrt3.sign()``; there is no floating point and no
epsilon anywhere.  Polygons are stored counter-clockwise with vertices in
general position (no three collinear), matching the standing assumption of
the underlying combinatorics.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exact_scalar import QSqrt3

Coord = QSqrt3 | int | Fraction


class GeometryError(ValueError):
    pass


class PolygonError(GeometryError):
    pass


class TooFewVertices(PolygonError):
    pass


class DuplicateVertex(PolygonError):
    def __init__(self, i: int, j: int):
        super().__init__(f"duplicate vertices at indices {i} and {j}")
        self.indices = (i, j)


class CollinearTriple(PolygonError):
    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"collinear vertices at indices ({i}, {j}, {k})")
        self.indices = (i, j, k)


class SelfIntersection(PolygonError):
    def __init__(self, e1: tuple[int, int], e2: tuple[int, int]):
        super().__init__(f"self-intersection ({e1[0]}-{e1[1]}, {e2[0]}-{e2[1]})")
        self.edges = (e1, e2)


class PointOnBoundary(GeometryError):
    pass


class Point:
    """A point of the plane with coordinates in Q(sqrt 3)."""

    __slots__ = ("x", "y")

    def __init__(self, x: Coord, y: Coord):
        self.x = x if isinstance(x, QSqrt3) else QSqrt3(x)
        self.y = y if isinstance(y, QSqrt3) else QSqrt3(y)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Point) and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


class Segment:
    """A nondegenerate closed segment."""

    __slots__ = ("a", "b")

    def __init__(self, a: Point, b: Point):
        if a == b:
            raise GeometryError("degenerate segment")
        self.a = a
        self.b = b

    def key(self) -> frozenset[Point]:
        return frozenset((self.a, self.b))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Segment) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Segment({self.a}, {self.b})"


def cross(o: Point, p: Point, q: Point) -> QSqrt3:
    """Cross product (p - o) x (q - o)."""
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 for a counter-clockwise turn p->q->r, -1 clockwise, 0 collinear."""
    return cross(p, q, r).sign()


def angle_exceeds_pi(a: Point, x: Point, y: Point) -> bool:
    """Whether the CCW angle at ``a`` from ray a->x to ray a->y exceeds pi.

    Collinear triples are outside the model (general position) and raise.
    """
    o = orientation(a, x, y)
    if o == 0:
        raise CollinearTriple(0, 1, 2)
    return o == -1


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    # p collinear with a-b assumed checked by caller via orientation == 0.
    dx, dy = b.x - a.x, b.y - a.y
    t1 = (p.x - a.x) * dx + (p.y - a.y) * dy
    t2 = (p.x - b.x) * dx + (p.y - b.y) * dy
    return t1.sign() >= 0 and t2.sign() <= 0


def point_on_segment(p: Point, s: Segment) -> bool:
    return orientation(s.a, s.b, p) == 0 and _on_segment(p, s.a, s.b)


def segments_properly_cross(s1: Segment, s2: Segment) -> bool:
    """Whether the open segments intersect transversally in one point.

    Segments sharing an endpoint never properly cross.  Collinear contact is
    excluded by general position and reported as no crossing.
    """
    o1 = orientation(s1.a, s1.b, s2.a)
    o2 = orientation(s1.a, s1.b, s2.b)
    if o1 * o2 >= 0:
        return False
    o3 = orientation(s2.a, s2.b, s1.a)
    o4 = orientation(s2.a, s2.b, s1.b)
    return o3 * o4 < 0


def no_three_collinear(points: Sequence[Point]) -> bool:
    return all(orientation(a, b, c) != 0 for a, b, c in combinations(points, 3))


class Polygon:
    """A simple polygon, CCW-normalized, vertices in general position."""

    def __init__(self, vertices: Sequence[Point], _validated: bool = False):
        vs = tuple(vertices)
        if not _validated:
            vs = _validate(vs)
        self.vertices = vs
        self.n = len(vs)

    @classmethod
    def _trusted(cls, vertices: Sequence[Point]) -> Polygon:
        # For sub-polygons whose invariants are inherited from a parent.
        return cls(vertices, _validated=True)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def edges(self) -> Iterable[tuple[int, int]]:
        return ((i, (i + 1) % self.n) for i in range(self.n))

    def rotated(self, shift: int) -> Polygon:
        """Same polygon with vertex ``shift`` relabeled as vertex 0."""
        shift %= self.n
        return Polygon._trusted(self.vertices[shift:] + self.vertices[:shift])

    @cached_property
    def area2(self) -> QSqrt3:
        """Twice the signed area (positive: the polygon is CCW)."""
        total = QSqrt3(0)
        o = self.vertices[0]
        for i in range(1, self.n - 1):
            total = total + cross(o, self.vertices[i], self.vertices[i + 1])
        return total

    @cached_property
    def reflex_vertices(self) -> frozenset[int]:
        vs = self.vertices
        n = self.n
        return frozenset(
            i for i in range(n)
            if orientation(vs[i - 1], vs[i], vs[(i + 1) % n]) == -1
        )

    @property
    def is_convex(self) -> bool:
        return not self.reflex_vertices

    @cached_property
    def hull_indices(self) -> tuple[int, ...]:
        """Indices of the convex-hull vertices, CCW, starting at the smallest."""
        hull_pts = convex_hull_points(self.vertices)
        index_of = {p: i for i, p in enumerate(self.vertices)}
        idx = [index_of[p] for p in hull_pts]
        m = idx.index(min(idx))
        return tuple(idx[m:] + idx[:m])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Polygon[{self.n}]({', '.join(map(repr, self.vertices))})"


def _validate(vs: tuple[Point, ...]) -> tuple[Point, ...]:
    n = len(vs)
    if n < 3:
        raise TooFewVertices(f"{n} vertices")
    seen: dict[Point, int] = {}
    for i, p in enumerate(vs):
        if p in seen:
            raise DuplicateVertex(seen[p], i)
        seen[p] = i
    for i, j, k in combinations(range(n), 3):
        if orientation(vs[i], vs[j], vs[k]) == 0:
            raise CollinearTriple(i, j, k)
    for i in range(n):
        si = Segment(vs[i], vs[(i + 1) % n])
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            sj = Segment(vs[j], vs[(j + 1) % n])
            if segments_properly_cross(si, sj):
                raise SelfIntersection((i, (i + 1) % n), (j, (j + 1) % n))
    # CCW normalization; area is nonzero since no three vertices are collinear.
    total = QSqrt3(0)
    o = vs[0]
    for i in range(1, n - 1):
        total = total + cross(o, vs[i], vs[i + 1])
    if total.sign() < 0:
        vs = vs[::-1]
    return vs


def validate_polygon(vertices: Sequence[Point]) -> Polygon:
    """Build a CCW simple polygon or raise the specific violated invariant."""
    return Polygon(vertices)


def point_in_polygon(pt: Point, poly: Polygon) -> bool:
    """Exact even-odd test; True iff strictly inside.

    Points on the boundary raise :class:`PointOnBoundary`.  The ray starts
    along +x and is rotated to slope 1/k (k = 1, 2, ...) until it avoids all
    vertices exactly.
    """
    vs = poly.vertices
    for i in range(poly.n):
        a, b = vs[i], vs[(i + 1) % poly.n]
        if orientation(a, b, pt) == 0 and _on_segment(pt, a, b):
            raise PointOnBoundary(f"point {pt!r} lies on edge {i}")
    k = 0
    while True:
        dx, dy = (QSqrt3(1), QSqrt3(0)) if k == 0 else (QSqrt3(k), QSqrt3(1))
        clean = True
        for v in vs:
            if ((v.x - pt.x) * dy - (v.y - pt.y) * dx).sign() == 0:
                clean = False
                break
        if clean:
            break
        k += 1
    crossings = 0
    for i in range(poly.n):
        u, w = vs[i], vs[(i + 1) % poly.n]
        su = ((u.x - pt.x) * dy - (u.y - pt.y) * dx).sign()
        sw = ((w.x - pt.x) * dy - (w.y - pt.y) * dx).sign()
        if su * sw >= 0:
            continue
        # The edge straddles the ray line; keep the crossing iff it is ahead.
        ex, ey = w.x - u.x, w.y - u.y
        num = (u.x - pt.x) * ey - (u.y - pt.y) * ex
        den = dx * ey - dy * ex
        if num.sign() * den.sign() > 0:
            crossings += 1
    return crossings % 2 == 1


def convex_hull_points(points: Sequence[Point]) -> list[Point]:
    """CCW hull vertex list (Andrew's monotone chain, exact comparisons)."""
    if len(points) < 3:
        raise GeometryError("hull needs at least 3 points")
    pts = sorted(set(points), key=_numeric_key)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and orientation(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orientation(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise GeometryError("all points collinear")
    return hull


class _numeric_key:
    __slots__ = ("p",)

    def __init__(self, p: Point):
        self.p = p

    def __lt__(self, other: "_numeric_key") -> bool:
        dx = (self.p.x - other.p.x).sign()
        if dx != 0:
            return dx < 0
        return (self.p.y - other.p.y).sign() < 0


def convex_hull(points: Sequence[Point]) -> Polygon:
    """Hull as a CCW polygon (general position: no three input points collinear)."""
    return Polygon._trusted(convex_hull_points(points))
