"""Polygon subdivision by non-crossing diagonals and the restricted-chi formulas.

The central object is the family NC_c[J] of subsets of a non-crossing
diagonal set J that cut the polygon into convex pieces.  Membership is
decided by exact angular "window" constraints: a subset fails exactly when
some merged fan of faces at some vertex spans more than pi, so NC_c[J] is the
family of hitting sets of the minimal bad windows.  The direct
subdivide-and-test route is kept as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from typing import Iterator, Sequence

from .chords import Chord, ChordKind, ChordSet, ChordUniverse, universe_of
from .geometry import Point, Polygon, cross
from .nc_euler import EulerEngine


LATTICE_CAP = 20
IE_CAP = 16


class PartitionError(ValueError):
    pass


class InstanceTooLarge(PartitionError):
    pass


def _engine(uni: ChordUniverse) -> EulerEngine:
    eng = getattr(uni, "_euler_engine", None)
    if eng is None:
        eng = EulerEngine(uni.crossing_masks)
        uni._euler_engine = eng
    return eng


@dataclass(frozen=True)
class PartitionResult:
    """Faces of the subdivision of ``parent`` by the non-crossing cut."""

    parent: Polygon
    cut: ChordSet
    parts: tuple[tuple[int, ...], ...]

    def part_polygon(self, k: int) -> Polygon:
        vs = self.parent.vertices
        return Polygon._trusted([vs[i] for i in self.parts[k]])


def _check_noncrossing_diagonals(poly: Polygon, cut: ChordSet) -> None:
    uni = universe_of(poly)
    if cut.universe is not uni:
        raise PartitionError("cut belongs to a different polygon")
    m = cut.mask
    while m:
        k = (m & -m).bit_length() - 1
        m &= m - 1
        if uni.kinds[k] is not ChordKind.DIAGONAL:
            raise PartitionError(f"chord {uni.chords[k]} is not a diagonal")
        if uni.crossing_masks[k] & cut.mask:
            raise PartitionError(f"cut contains a crossing pair at {uni.chords[k]}")


def subdivide(poly: Polygon, cut: ChordSet) -> PartitionResult:
    """Split the polygon along pairwise non-crossing diagonals.

    Parts are cyclic parent-index tuples in CCW order, each rotated to start
    at its smallest index, listed lexicographically.
    """
    _check_noncrossing_diagonals(poly, cut)
    parts: list[list[int]] = [list(range(poly.n))]
    for c in cut:
        for p, part in enumerate(parts):
            if c.i in part and c.j in part:
                a, b = part.index(c.i), part.index(c.j)
                if a > b:
                    a, b = b, a
                if b - a < 2 or b - a > len(part) - 2:
                    continue  # endpoints adjacent here: chord lives in the other part
                parts[p] = part[a:b + 1]
                parts.append(part[b:] + part[:a + 1])
                break
        else:
            raise AssertionError(f"no host part for chord {c}")
    normal = []
    for part in parts:
        m = part.index(min(part))
        normal.append(tuple(part[m:] + part[:m]))
    normal.sort()
    return PartitionResult(poly, cut, tuple(normal))


def _part_is_convex(vs: Sequence[Point], part: Sequence[int]) -> bool:
    k = len(part)
    for t in range(k):
        a, b, c = vs[part[t - 1]], vs[part[t]], vs[part[(t + 1) % k]]
        if cross(a, b, c).sign() <= 0:
            return False
    return True


def is_convex_partition(poly: Polygon, cut: ChordSet) -> bool:
    """Direct route: subdivide and test each face for convexity."""
    res = subdivide(poly, cut)
    return all(_part_is_convex(poly.vertices, p) for p in res.parts)


def _ccw_sort(base: tuple, dirs: list) -> list[int]:
    # Sorts direction indices by CCW angle from ``base`` in (0, 2*pi).
    def half(d) -> int:
        s = (base[0] * d[1] - base[1] * d[0]).sign()
        if s > 0:
            return 0
        if s < 0:
            return 2
        # Same or opposite direction as base; opposite = angle pi.
        return 3 if (base[0] * d[0] + base[1] * d[1]).sign() < 0 else 0

    def cmp(i: int, j: int) -> int:
        hi, hj = half(dirs[i]), half(dirs[j])
        if hi != hj:
            return -1 if hi < hj else 1
        di, dj = dirs[i], dirs[j]
        s = (di[0] * dj[1] - di[1] * dj[0]).sign()
        return -s

    return sorted(range(len(dirs)), key=cmp_to_key(cmp))


def convexity_constraints(poly: Polygon, j_set: ChordSet) -> tuple[list[int], bool]:
    """Minimal hitting constraints characterizing NC_c[j_set].

    Returns (constraint masks, feasible).  A subset I of ``j_set`` cuts the
    polygon into convex faces iff I intersects every constraint mask.  When
    ``feasible`` is False some face angle exceeds pi no matter what, so even
    the full set fails and NC_c is empty.
    """
    _check_noncrossing_diagonals(poly, j_set)
    uni = j_set.universe
    vs = poly.vertices
    n = poly.n
    at: dict[int, list[tuple[int, int]]] = {}
    for c in j_set:
        k = uni.index[c]
        at.setdefault(c.i, []).append((k, c.j))
        at.setdefault(c.j, []).append((k, c.i))
    constraints: list[int] = []
    feasible = True
    for v in range(n):
        o = vs[v]
        base = (vs[(v + 1) % n].x - o.x, vs[(v + 1) % n].y - o.y)
        inc = at.get(v, [])
        dirs = [(vs[w].x - o.x, vs[w].y - o.y) for _, w in inc]
        order = _ccw_sort(base, dirs)
        ray_dirs = [base] + [dirs[t] for t in order] + [
            (vs[(v - 1) % n].x - o.x, vs[(v - 1) % n].y - o.y)
        ]
        ray_bits = [0] + [1 << inc[t][0] for t in order] + [0]
        r = len(ray_dirs)
        for s in range(r - 1):
            ds = ray_dirs[s]
            mask = 0
            for t in range(s + 1, r):
                dt = ray_dirs[t]
                if (ds[0] * dt[1] - ds[1] * dt[0]).sign() < 0:
                    if mask == 0:
                        feasible = False
                    constraints.append(mask)
                    break
                mask |= ray_bits[t]
    # Keep only inclusion-minimal constraint masks.
    constraints = sorted(set(constraints), key=lambda m: m.bit_count())
    minimal: list[int] = []
    for m in constraints:
        if not any(q & ~m == 0 for q in minimal):
            minimal.append(m)
    return minimal, feasible


def _iter_submasks(m: int) -> Iterator[int]:
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


@dataclass(frozen=True)
class ConvexLattice:
    """All subsets of J classified by whether they cut into convex faces."""

    polygon: Polygon
    j_set: ChordSet
    members_c: tuple[int, ...]
    members_nc: tuple[int, ...]
    minimal_c: tuple[int, ...]
    maximal_nc: tuple[int, ...]

    def sets_c(self) -> list[ChordSet]:
        return [ChordSet(self.j_set.universe, m) for m in self.members_c]

    def sets_nc(self) -> list[ChordSet]:
        return [ChordSet(self.j_set.universe, m) for m in self.members_nc]


def convex_lattice(poly: Polygon, j_set: ChordSet) -> ConvexLattice:
    if len(j_set) > LATTICE_CAP:
        raise InstanceTooLarge(f"|J| = {len(j_set)} exceeds the 2^|J| cap {LATTICE_CAP}")
    constraints, feasible = convexity_constraints(poly, j_set)
    members_c: list[int] = []
    members_nc: list[int] = []
    for sub in _iter_submasks(j_set.mask):
        if feasible and all(sub & c for c in constraints):
            members_c.append(sub)
        else:
            members_nc.append(sub)
    # members_c is an up-set and members_nc a down-set, so minimality and
    # maximality reduce to single-bit tests.
    cset = set(members_c)
    minimal_c = []
    for m in members_c:
        mm = m
        minimal = True
        while mm:
            bit = mm & -mm
            mm &= mm - 1
            if m & ~bit in cset:
                minimal = False
                break
        if minimal:
            minimal_c.append(m)
    maximal_nc = []
    for m in members_nc:
        rest = j_set.mask & ~m
        maximal = True
        while rest:
            bit = rest & -rest
            rest &= rest - 1
            if m | bit not in cset:
                maximal = False
                break
        if maximal:
            maximal_nc.append(m)
    return ConvexLattice(
        poly, j_set,
        tuple(sorted(members_c)), tuple(sorted(members_nc)),
        tuple(sorted(minimal_c)), tuple(sorted(maximal_nc)),
    )


def chi_removed_direct(poly: Polygon, removed: ChordSet, side: str) -> int:
    """chi(M_side minus removed) computed on the actual segment family."""
    uni = universe_of(poly)
    if removed.universe is not uni:
        raise PartitionError("chord set belongs to a different polygon")
    if side == "d":
        fam = uni.kind_mask(ChordKind.DIAGONAL)
    elif side == "e":
        fam = uni.kind_mask(ChordKind.EPIGONAL)
    else:
        raise ValueError("side must be 'd' or 'e'")
    return _engine(uni).chi(fam & ~removed.mask)


def chi_removed_theorem2(poly: Polygon, j_set: ChordSet) -> int:
    """(-1)^(|P|+1) * sum over NC_c[J] of (-1)^|I|."""
    if len(j_set) > LATTICE_CAP:
        raise InstanceTooLarge(f"|J| = {len(j_set)} exceeds the 2^|J| cap {LATTICE_CAP}")
    constraints, feasible = convexity_constraints(poly, j_set)
    total = 0
    if feasible:
        for sub in _iter_submasks(j_set.mask):
            if all(sub & c for c in constraints):
                total += -1 if sub.bit_count() & 1 else 1
    return (-1) ** (poly.n + 1) * total


def chi_removed_lemma_d2(poly: Polygon, j_set: ChordSet) -> int:
    """(-1)^|P| * sum over NC_nc[J] of (-1)^|I|; requires J nonempty."""
    if j_set.mask == 0:
        raise PartitionError("the J = {} case is outside this identity's hypothesis")
    if len(j_set) > LATTICE_CAP:
        raise InstanceTooLarge(f"|J| = {len(j_set)} exceeds the 2^|J| cap {LATTICE_CAP}")
    constraints, feasible = convexity_constraints(poly, j_set)
    total = 0
    for sub in _iter_submasks(j_set.mask):
        if not (feasible and all(sub & c for c in constraints)):
            total += -1 if sub.bit_count() & 1 else 1
    return (-1) ** poly.n * total


def diagonal_chi(poly: Polygon) -> int:
    """chi of the full diagonal family of a polygon."""
    uni = universe_of(poly)
    return _engine(uni).chi(uni.kind_mask(ChordKind.DIAGONAL))


def chi_removed_lemma1(poly: Polygon, j_set: ChordSet) -> int:
    """Sum over I subset of J of the product of sub-polygon diagonal chis."""
    _check_noncrossing_diagonals(poly, j_set)
    if len(j_set) > LATTICE_CAP:
        raise InstanceTooLarge(f"|J| = {len(j_set)} exceeds the 2^|J| cap {LATTICE_CAP}")
    uni = universe_of(poly)
    part_chi: dict[tuple[int, ...], int] = {}
    total = 0
    for sub in _iter_submasks(j_set.mask):
        res = subdivide(poly, ChordSet(uni, sub))
        prod = 1
        for part in res.parts:
            val = part_chi.get(part)
            if val is None:
                vs = poly.vertices
                val = diagonal_chi(Polygon._trusted([vs[i] for i in part]))
                part_chi[part] = val
            prod *= val
            if prod == 0:
                break
        total += prod
    return total


def _host_part(parts: Sequence[tuple[int, ...]], c: Chord) -> int:
    for k, part in enumerate(parts):
        if c.i in part and c.j in part:
            a, b = part.index(c.i), part.index(c.j)
            d = abs(a - b)
            if 2 <= d <= len(part) - 2:
                return k
    raise AssertionError(f"no host part for chord {c}")


def chi_removed_factorized(poly: Polygon, j_set: ChordSet, j_prime: ChordSet) -> int:
    """Product formula over the sub-polygons cut by a forced subset j_prime.

    Requires j_set to cut the polygon into convex faces and j_prime to be
    contained in every member of NC_c[j_set].
    """
    _check_noncrossing_diagonals(poly, j_set)
    if not is_convex_partition(poly, j_set):
        raise PartitionError("J does not provide a convex partition")
    constraints, feasible = convexity_constraints(poly, j_set)
    forced = 0
    for c in constraints:
        if c.bit_count() == 1:
            forced |= c
    if not feasible or j_prime.mask & ~forced:
        raise PartitionError("j_prime is not contained in every convex-partition subset")
    res = subdivide(poly, j_prime)
    vs = poly.vertices
    rest = [c for c in ChordSet(j_set.universe, j_set.mask & ~j_prime.mask)]
    per_part: dict[int, list[Chord]] = {}
    for c in rest:
        per_part.setdefault(_host_part(res.parts, c), []).append(c)
    prod = 1
    for k, part in enumerate(res.parts):
        sub_poly = Polygon._trusted([vs[i] for i in part])
        sub_uni = universe_of(sub_poly)
        removed = 0
        for c in per_part.get(k, []):
            local = Chord.of(part.index(c.i), part.index(c.j))
            removed |= 1 << sub_uni.index[local]
        fam = sub_uni.kind_mask(ChordKind.DIAGONAL) & ~removed
        prod *= _engine(sub_uni).chi(fam)
        if prod == 0:
            break
    return prod


@dataclass(frozen=True)
class Pocket:
    """A bounded face between the polygon and its convex hull."""

    hull_chord: Chord
    path: tuple[int, ...]  # parent indices from hull_chord.i side, polygon order

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.path)


def pockets(poly: Polygon) -> list[Pocket]:
    hull = poly.hull_indices
    n = poly.n
    out = []
    for t in range(len(hull)):
        a, b = hull[t], hull[(t + 1) % len(hull)]
        if (b - a) % n == 1:
            continue
        path = tuple((a + s) % n for s in range((b - a) % n + 1))
        out.append(Pocket(Chord.of(a, b), path))
    return out


def pocket_polygon(poly: Polygon, pocket: Pocket) -> Polygon:
    # Reversed: the pocket region lies on the far side of the polygon path.
    vs = poly.vertices
    return Polygon._trusted([vs[i] for i in reversed(pocket.path)])


def chi_epigonal_pockets(poly: Polygon, removed: ChordSet) -> int:
    """Product over pockets of chi of the pocket's epigonal family minus J.

    The pocket family consists of every epigonal spanned by the pocket's
    vertices, including the bounding hull-edge chord; epigonals never cross
    across pockets, so the product equals chi(M_e minus removed).
    """
    uni = universe_of(poly)
    if removed.universe is not uni:
        raise PartitionError("chord set belongs to a different polygon")
    eng = _engine(uni)
    prod = 1
    for pocket in pockets(poly):
        vset = pocket.vertex_set()
        mask = 0
        for k, c in enumerate(uni.chords):
            if uni.kinds[k] is ChordKind.EPIGONAL and c.i in vset and c.j in vset:
                mask |= 1 << k
        prod *= eng.chi(mask & ~removed.mask)
        if prod == 0:
            break
    return prod


def xi(poly: Polygon, j_set: ChordSet, subset: ChordSet) -> int:
    """Indicator of {empty, J} among subsets of a convex-partition J."""
    if poly.is_convex:
        raise PartitionError("xi is defined for non-convex polygons")
    if not is_convex_partition(poly, j_set):
        raise PartitionError("J does not provide a convex partition")
    if subset.mask & ~j_set.mask:
        raise PartitionError("I must be a subset of J")
    return 1 if subset.mask in (0, j_set.mask) else 0


def chi_inclusion_exclusion(poly: Polygon, j_set: ChordSet, mode: str) -> int:
    """Inclusion-exclusion over the minimal convex / maximal non-convex sets."""
    if mode not in ("minimal", "maximal"):
        raise ValueError("mode must be 'minimal' or 'maximal'")
    if poly.is_convex:
        raise PartitionError("defined for non-convex polygons")
    if not is_convex_partition(poly, j_set):
        raise PartitionError("J does not provide a convex partition")
    if len(j_set) > IE_CAP:
        raise InstanceTooLarge(f"|J| = {len(j_set)} exceeds the cap {IE_CAP}")
    lat = convex_lattice(poly, j_set)
    jm = j_set.mask
    if mode == "minimal":
        sets = lat.minimal_c
        total = 0
        for k in range(1, len(sets) + 1):
            for combo in combinations(sets, k):
                u = 0
                for m in combo:
                    u |= m
                if u == jm:  # xi(union) over NC_c[J] is the J-indicator
                    total += -1 if k & 1 else 1
        return (-1) ** (poly.n + len(j_set)) * total
    sets = lat.maximal_nc
    total = 0
    for k in range(1, len(sets) + 1):
        for combo in combinations(sets, k):
            u = jm
            for m in combo:
                u &= m
            if u == 0:  # xi(intersection) over NC_nc[J] is the emptyset-indicator
                total += 1 if k & 1 else -1
    return (-1) ** poly.n * total


def find_diagonal(poly: Polygon) -> Chord:
    """A diagonal found constructively from the lowest-index convex vertex."""
    n = poly.n
    if n < 4:
        raise PartitionError("a triangle has no diagonals")
    uni = universe_of(poly)
    v = min(set(range(n)) - poly.reflex_vertices)
    prev, nxt = (v - 1) % n, (v + 1) % n
    ear = Chord.of(prev, nxt)
    if uni.kinds[uni.index[ear]] is ChordKind.DIAGONAL:
        return ear
    vs = poly.vertices
    a, b, c = vs[prev], vs[v], vs[nxt]
    tri_or = cross(a, b, c).sign()
    best: int | None = None
    best_dist = None
    for d in range(n):
        if d in (prev, v, nxt):
            continue
        p = vs[d]
        if (
            cross(a, b, p).sign() == tri_or
            and cross(b, c, p).sign() == tri_or
            and cross(c, a, p).sign() == tri_or
        ):
            dist = cross(a, c, p)
            if dist.sign() < 0:
                dist = -dist
            if best is None or (dist - best_dist).sign() > 0:
                best, best_dist = d, dist
    if best is None:
        raise AssertionError("ear blocked but triangle empty")
    out = Chord.of(v, best)
    if uni.kinds[uni.index[out]] is not ChordKind.DIAGONAL:
        raise AssertionError(f"constructed chord {out} is not a diagonal")
    return out


def extend_to_triangulation(poly: Polygon, j_set: ChordSet) -> ChordSet:
    """A triangulation (n-3 pairwise non-crossing diagonals) containing J."""
    _check_noncrossing_diagonals(poly, j_set)
    uni = universe_of(poly)
    vs = poly.vertices
    mask = j_set.mask
    stack = [p for p in subdivide(poly, j_set).parts if len(p) > 3]
    while stack:
        part = stack.pop()
        sub = Polygon._trusted([vs[i] for i in part])
        local = find_diagonal(sub)
        parent = Chord.of(part[local.i], part[local.j])
        mask |= 1 << uni.index[parent]
        left = part[local.i:local.j + 1]
        right = part[local.j:] + part[:local.i + 1]
        for piece in (left, right):
            if len(piece) > 3:
                stack.append(tuple(piece))
    out = ChordSet(uni, mask)
    if len(out) != poly.n - 3:
        raise AssertionError("triangulation size mismatch")
    return out
