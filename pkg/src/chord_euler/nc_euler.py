"""Non-crossing families of segments: f-vectors, Euler characteristic, hearts.

A family of segments is non-crossing when segment interiors are pairwise
disjoint (shared endpoints allowed).  ``f_i`` counts the i-element
non-crossing subsets; the Euler characteristic is the alternating sum, i.e.
the independence polynomial of the crossing graph at -1.

Two independent evaluation routes are kept deliberately separate:

* ``euler_brute``  - alternating sum of a full DFS enumeration;
* ``euler_recursive`` - the deletion identity chi(A) = chi(A - v) - chi(A_v)
  with connected-component factorization and memoization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .chords import ChordSet
from .geometry import Point, Polygon, Segment, convex_hull_points, no_three_collinear, segments_properly_cross
from . import chords as _chords


def crossing_masks(segments: Sequence[Segment]) -> list[int]:
    """Bit mask per segment marking the segments it properly crosses."""
    m = len(segments)
    masks = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if segments_properly_cross(segments[a], segments[b]):
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return masks


@dataclass(frozen=True)
class FVector:
    """Counts (f_0, f_1, ...) of non-crossing subfamilies by size."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if not self.counts or self.counts[0] != 1:
            raise ValueError("f_0 must be 1")
        if len(self.counts) > 1 and self.counts[-1] == 0:
            raise ValueError("trailing zeros must be trimmed")

    def __getitem__(self, i: int) -> int:
        return self.counts[i] if i < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def euler(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.counts))

    def alternating_tail(self) -> int:
        """f_1 - f_2 + f_3 - ... (the sums appearing in the polygon criteria)."""
        return sum((-1) ** (i - 1) * c for i, c in enumerate(self.counts) if i >= 1)


class _Family:
    """Internal view: adjacency masks plus the live mask of a family."""

    __slots__ = ("adj", "live")

    def __init__(self, adj: Sequence[int], live: int):
        self.adj = adj
        self.live = live


def _as_family(family: ChordSet | Sequence[Segment]) -> _Family:
    if isinstance(family, ChordSet):
        return _Family(family.universe.crossing_masks, family.mask)
    segs = list(family)
    return _Family(crossing_masks(segs), (1 << len(segs)) - 1)


def _nc_counts(adj: Sequence[int], live: int) -> list[int]:
    order = []
    m = live
    while m:
        k = (m & -m).bit_length() - 1
        m &= m - 1
        order.append(k)
    counts = [0] * (len(order) + 1)
    sub_adj = [adj[k] & live for k in order]

    def rec(pos: int, size: int, banned: int) -> None:
        counts[size] += 1
        for t in range(pos, len(order)):
            k = order[t]
            if not banned >> k & 1:
                rec(t + 1, size + 1, banned | sub_adj[t])

    rec(0, 0, 0)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def f_vector(family: ChordSet | Sequence[Segment]) -> FVector:
    """Exact non-crossing family counts via output-sensitive DFS."""
    fam = _as_family(family)
    return FVector(tuple(_nc_counts(fam.adj, fam.live)))


def iter_nc_masks(adj: Sequence[int], live: int):
    """Yield the bit mask of every non-crossing subfamily of ``live``."""
    order = []
    m = live
    while m:
        k = (m & -m).bit_length() - 1
        m &= m - 1
        order.append(k)

    def rec(pos: int, chosen: int, banned: int):
        yield chosen
        for t in range(pos, len(order)):
            k = order[t]
            if not banned >> k & 1:
                yield from rec(t + 1, chosen | (1 << k), banned | (adj[k] & live))

    yield from rec(0, 0, 0)


def euler_brute(family: ChordSet | Sequence[Segment]) -> int:
    """Alternating sum of the enumerated f-vector (the slow oracle)."""
    return f_vector(family).euler


def _chi(adj: Sequence[int], live: int, memo: dict[int, int]) -> int:
    if live == 0:
        return 1
    total = 1
    rem = live
    while rem:
        v = (rem & -rem).bit_length() - 1
        comp = 1 << v
        frontier = adj[v] & live & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            f = frontier
            while f:
                u = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= adj[u] & live
            frontier = nxt & ~comp
        rem &= ~comp
        if comp & (comp - 1) == 0:
            return 0  # isolated segment: chi({v}) = 0 kills the product
        val = memo.get(comp)
        if val is None:
            best_v = -1
            best_d = -1
            c = comp
            while c:
                u = (c & -c).bit_length() - 1
                c &= c - 1
                d = (adj[u] & comp).bit_count()
                if d > best_d:
                    best_d, best_v = d, u
            without = comp & ~(1 << best_v)
            val = _chi(adj, without, memo) - _chi(adj, without & ~adj[best_v], memo)
            memo[comp] = val
        if val == 0:
            return 0
        total *= val
    return total


def euler_recursive(family: ChordSet | Sequence[Segment]) -> int:
    """Deletion-identity evaluation with per-call memoization."""
    fam = _as_family(family)
    return _chi(fam.adj, fam.live, {})


class EulerEngine:
    """Caller-owned evaluator sharing one memo across many subfamilies.

    Intended for querying many subsets of a single chord universe (for
    example all the forbidden-position families of one polygon); results are
    identical to :func:`euler_recursive`.
    """

    def __init__(self, adj: Sequence[int]):
        self.adj = adj
        self._memo: dict[int, int] = {}

    @classmethod
    def for_polygon(cls, polygon: Polygon) -> EulerEngine:
        return cls(_chords.universe_of(polygon).crossing_masks)

    def chi(self, mask: int) -> int:
        return _chi(self.adj, mask, self._memo)


def maximal_nc_masks(adj: Sequence[int], live: int) -> list[int]:
    """All maximal non-crossing subfamilies of ``live`` (Bron-Kerbosch)."""
    compat = {}

    def compat_of(v: int) -> int:
        c = compat.get(v)
        if c is None:
            c = compat[v] = live & ~adj[v] & ~(1 << v)
        return c

    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        u = (px & -px).bit_length() - 1
        best = p & ~compat_of(u)
        pu = px
        while pu:
            w = (pu & -pu).bit_length() - 1
            pu &= pu - 1
            cand = p & ~compat_of(w)
            if cand.bit_count() < best.bit_count():
                best, u = cand, w
        cand = best
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            bk(r | (1 << v), p & compat_of(v), x & compat_of(v))
            p &= ~(1 << v)
            x |= 1 << v
    bk(0, live, 0)
    return out


def is_heart(family: ChordSet | Sequence[Segment], heart: ChordSet | Sequence[Segment]) -> bool:
    """Whether every maximal non-crossing subfamily meets ``heart``.

    This is equivalent to the extension form of the definition (every
    non-crossing family extends to one meeting the heart) because extensions
    can always be taken maximal.
    """
    if isinstance(family, ChordSet) and isinstance(heart, ChordSet):
        if heart.universe is not family.universe or heart.mask & ~family.mask:
            raise ValueError("heart must be a subset of the family")
        adj = family.universe.crossing_masks
        live = family.mask
        hmask = heart.mask
    else:
        segs = list(family)  # type: ignore[arg-type]
        keys = {s.key(): k for k, s in enumerate(segs)}
        hmask = 0
        for s in heart:  # type: ignore[union-attr]
            k = keys.get(s.key())
            if k is None:
                raise ValueError("heart must be a subset of the family")
            hmask |= 1 << k
        adj = crossing_masks(segs)
        live = (1 << len(segs)) - 1
    h = hmask
    while h:
        k = (h & -h).bit_length() - 1
        h &= h - 1
        if adj[k] & hmask:
            raise ValueError("heart members must be pairwise non-crossing")
    return all(m & hmask for m in maximal_nc_masks(adj, live))


def find_heart(polygon: Polygon, side: str) -> ChordSet | None:
    """A heart candidate from the structure theory, or None for convex input.

    side 'd': all diagonals at the lowest-index reflex vertex (every
    triangulation must cut that angle).  side 'e': the lowest hull edge that
    is not a polygon edge (it crosses no other epigonal).
    """
    if side not in ("d", "e"):
        raise ValueError("side must be 'd' or 'e'")
    uni = _chords.universe_of(polygon)
    if polygon.is_convex:
        return None
    if side == "d":
        v = min(polygon.reflex_vertices)
        mask = 0
        for k, c in enumerate(uni.chords):
            if v in (c.i, c.j) and uni.kinds[k] is _chords.ChordKind.DIAGONAL:
                mask |= 1 << k
        if mask == 0:
            raise AssertionError("reflex vertex without incident diagonal")
        return ChordSet(uni, mask)
    hull = polygon.hull_indices
    n = polygon.n
    for t in range(len(hull)):
        a, b = hull[t], hull[(t + 1) % len(hull)]
        if (b - a) % n != 1 and (a - b) % n != 1:
            return uni.set_of([_chords.Chord.of(a, b)])
    raise AssertionError("non-convex polygon without hull-edge epigonal")


def chi_point_family(points: Sequence[Point], segments: Sequence[Segment]) -> int:
    """Euler characteristic of an arbitrary segment family over a point set."""
    pts = set(points)
    for s in segments:
        if s.a not in pts or s.b not in pts:
            raise ValueError(f"segment endpoint outside the point set: {s!r}")
    if not no_three_collinear(list(points)):
        raise ValueError("point set not in general position")
    return euler_recursive(list(segments))


def hull_edge_in(points: Sequence[Point], segments: Sequence[Segment]) -> bool:
    """Whether the family contains an edge of the point set's convex hull."""
    hull = convex_hull_points(list(points))
    edges = {
        frozenset((hull[i], hull[(i + 1) % len(hull)])) for i in range(len(hull))
    }
    return any(s.key() in edges for s in segments)
