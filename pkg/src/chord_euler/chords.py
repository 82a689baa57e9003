"""Chord universe of a polygon and exact chord classification.

A chord joins two non-consecutive vertices.  Each chord of a valid polygon is
exactly one of: a diagonal (interior), an epigonal (exterior), or boundary
crossing.  Chord sets are bit vectors over the polygon's fixed, lexicographic
chord universe, so set algebra is integer arithmetic and deterministic.
"""

from __future__ import annotations

from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .exact_scalar import QSqrt3
from .geometry import Point, Polygon, Segment, point_in_polygon, segments_properly_cross


class Chord(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.i}-{self.j}"

    @classmethod
    def of(cls, a: int, b: int) -> Chord:
        if a == b:
            raise ValueError("chord endpoints must differ")
        return cls(min(a, b), max(a, b))

    @classmethod
    def parse(cls, text: str) -> Chord:
        a, b = text.split("-")
        return cls.of(int(a), int(b))


class ChordKind(Enum):
    DIAGONAL = "diagonal"
    EPIGONAL = "epigonal"
    BOUNDARY_CROSSING = "boundary-crossing"


def _midpoint(a: Point, b: Point) -> Point:
    half = QSqrt3(1) / 2
    return Point((a.x + b.x) * half, (a.y + b.y) * half)


class ChordUniverse:
    """All chords of one polygon, in lexicographic (i, j) order.

    Owns the per-chord classification and the pairwise crossing masks; every
    :class:`ChordSet` over the polygon shares this object, which keeps bit
    positions and memo keys stable.
    """

    def __init__(self, polygon: Polygon):
        self.polygon = polygon
        n = polygon.n
        self.chords: tuple[Chord, ...] = tuple(
            Chord(i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if j - i != 1 and not (i == 0 and j == n - 1)
        )
        self.index: dict[Chord, int] = {c: k for k, c in enumerate(self.chords)}
        self.size = len(self.chords)

    def segment(self, c: Chord) -> Segment:
        vs = self.polygon.vertices
        return Segment(vs[c.i], vs[c.j])

    @cached_property
    def kinds(self) -> tuple[ChordKind, ...]:
        return tuple(self._classify(c) for c in self.chords)

    def _classify(self, c: Chord) -> ChordKind:
        poly = self.polygon
        seg = self.segment(c)
        for a, b in poly.edges():
            if a in (c.i, c.j) or b in (c.i, c.j):
                continue
            if segments_properly_cross(seg, Segment(poly.vertices[a], poly.vertices[b])):
                return ChordKind.BOUNDARY_CROSSING
        if point_in_polygon(_midpoint(seg.a, seg.b), poly):
            return ChordKind.DIAGONAL
        return ChordKind.EPIGONAL

    @cached_property
    def crossing_masks(self) -> tuple[int, ...]:
        """crossing_masks[k] has bit m set iff chords k and m properly cross."""
        segs = [self.segment(c) for c in self.chords]
        masks = [0] * self.size
        for a in range(self.size):
            for b in range(a + 1, self.size):
                if segments_properly_cross(segs[a], segs[b]):
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
        return tuple(masks)

    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def kind_mask(self, kind: ChordKind) -> int:
        mask = 0
        for k, kk in enumerate(self.kinds):
            if kk is kind:
                mask |= 1 << k
        return mask

    def set_of(self, chords: Iterable[Chord]) -> ChordSet:
        mask = 0
        for c in chords:
            mask |= 1 << self.index[Chord.of(c.i, c.j)]
        return ChordSet(self, mask)

    def set_of_mask(self, mask: int) -> ChordSet:
        return ChordSet(self, mask)


class ChordSet:
    """Immutable subset of a chord universe, backed by a bit mask."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: ChordUniverse, mask: int):
        self.universe = universe
        self.mask = mask

    def _check(self, other: ChordSet) -> None:
        if self.universe is not other.universe:
            raise ValueError("chord sets over different universes")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[Chord]:
        m = self.mask
        chords = self.universe.chords
        while m:
            k = (m & -m).bit_length() - 1
            m &= m - 1
            yield chords[k]

    def __contains__(self, c: Chord) -> bool:
        k = self.universe.index.get(Chord.of(c.i, c.j))
        return k is not None and bool(self.mask >> k & 1)

    def __or__(self, other: ChordSet) -> ChordSet:
        self._check(other)
        return ChordSet(self.universe, self.mask | other.mask)

    def __and__(self, other: ChordSet) -> ChordSet:
        self._check(other)
        return ChordSet(self.universe, self.mask & other.mask)

    def __sub__(self, other: ChordSet) -> ChordSet:
        self._check(other)
        return ChordSet(self.universe, self.mask & ~other.mask)

    def __le__(self, other: ChordSet) -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ChordSet)
            and self.universe is other.universe
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.universe), self.mask))

    def chords(self) -> list[Chord]:
        return list(self)

    def __repr__(self) -> str:
        return "{" + ", ".join(str(c) for c in self) + "}"


def universe_of(polygon: Polygon) -> ChordUniverse:
    """The polygon's chord universe (cached on the polygon)."""
    uni = getattr(polygon, "_chord_universe", None)
    if uni is None:
        uni = ChordUniverse(polygon)
        polygon._chord_universe = uni
    return uni


def classify_chord(polygon: Polygon, c: Chord) -> ChordKind:
    uni = universe_of(polygon)
    return uni.kinds[uni.index[Chord.of(c.i, c.j)]]


def diagonals(polygon: Polygon) -> ChordSet:
    uni = universe_of(polygon)
    return ChordSet(uni, uni.kind_mask(ChordKind.DIAGONAL))


def epigonals(polygon: Polygon) -> ChordSet:
    uni = universe_of(polygon)
    return ChordSet(uni, uni.kind_mask(ChordKind.EPIGONAL))


def a_diagonals(polygon: Polygon, a: int) -> ChordSet:
    """Diagonals leaving k*a vertices (k >= 1) on each side.

    Requires |polygon| = a*(n+1) + 2 for some n >= 0.
    """
    if a < 1:
        raise ValueError("a must be a positive integer")
    n_total = polygon.n
    if (n_total - 2) % a != 0:
        raise ValueError(f"|P| = {n_total} is not of the form a*(n+1)+2 for a={a}")
    n = (n_total - 2) // a - 1
    uni = universe_of(polygon)
    mask = 0
    for k, c in enumerate(uni.chords):
        if uni.kinds[k] is not ChordKind.DIAGONAL:
            continue
        between = c.j - c.i - 1
        if between % a == 0 and 1 <= between // a <= n:
            mask |= 1 << k
    return ChordSet(uni, mask)


def forbidden_star(polygon: Polygon, i: int) -> ChordSet:
    """All chords incident to vertex ``i`` (any kind)."""
    n = polygon.n
    if n < 5:
        raise ValueError("forbidden star needs n >= 5")
    if not 0 <= i < n:
        raise IndexError(i)
    uni = universe_of(polygon)
    mask = 0
    for k, c in enumerate(uni.chords):
        if i in (c.i, c.j):
            mask |= 1 << k
    return ChordSet(uni, mask)


def ear_chord(polygon: Polygon, i: int) -> ChordSet:
    """The singleton chord set {(i-1, i+1)}."""
    n = polygon.n
    if n < 4:
        raise ValueError("ear chord needs n >= 4")
    if not 0 <= i < n:
        raise IndexError(i)
    uni = universe_of(polygon)
    c = Chord.of((i - 1) % n, (i + 1) % n)
    return ChordSet(uni, 1 << uni.index[c])
