import pytest
from hypothesis import given
from hypothesis import strategies as st

from chord_euler.geometry import (
    CollinearTriple,
    DuplicateVertex,
    Point,
    PointOnBoundary,
    Segment,
    SelfIntersection,
    TooFewVertices,
    angle_exceeds_pi,
    convex_hull,
    orientation,
    point_in_polygon,
    segments_properly_cross,
    validate_polygon,
)
from conftest import pt

coords = st.integers(min_value=-20, max_value=20)
points = st.builds(pt, coords, coords)


def test_orientation_basic():
    assert orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == 1
    assert orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == 0
    assert orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == -1


@given(points, points, points)
def test_orientation_antisymmetry(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r)
    assert orientation(p, q, r) == -orientation(p, r, q)
    assert orientation(p, q, r) == orientation(q, r, p)


def test_angle_exceeds_pi():
    a = pt(0, 0)
    assert not angle_exceeds_pi(a, pt(1, 0), pt(0, 1))  # quarter turn
    assert angle_exceeds_pi(a, pt(0, 1), pt(1, 0))  # three-quarter turn
    with pytest.raises(CollinearTriple):
        angle_exceeds_pi(a, pt(1, 0), pt(2, 0))


def test_square_interior_angles(square):
    # Interior angle at each vertex of a convex CCW polygon stays below pi.
    for i in range(4):
        a = square.vertices[i]
        nxt = square.vertices[(i + 1) % 4]
        prv = square.vertices[(i - 1) % 4]
        assert not angle_exceeds_pi(a, nxt, prv)


def test_proper_crossing():
    # Oracle: the diagonals of the unit square intersect at (1,1), interior
    # to both; solving the 2x2 linear system gives parameters 1/2 and 1/2.
    s1 = Segment(pt(0, 0), pt(2, 2))
    s2 = Segment(pt(0, 2), pt(2, 0))
    assert segments_properly_cross(s1, s2)
    assert segments_properly_cross(s2, s1)
    # Shared endpoint: no proper crossing.
    assert not segments_properly_cross(
        Segment(pt(0, 0), pt(1, 1)), Segment(pt(1, 1), pt(2, 0))
    )
    # Disjoint parallels.
    assert not segments_properly_cross(
        Segment(pt(0, 0), pt(1, 0)), Segment(pt(0, 1), pt(1, 1))
    )


@given(points, points, points, points)
def test_crossing_symmetry(a, b, c, d):
    if a == b or c == d:
        return
    s1, s2 = Segment(a, b), Segment(c, d)
    r = segments_properly_cross(s1, s2)
    assert r == segments_properly_cross(s2, s1)
    assert r == segments_properly_cross(Segment(b, a), s2)


def test_point_in_polygon(square, dart):
    assert point_in_polygon(pt(1, 1), square)
    assert not point_in_polygon(pt(3, 3), square)
    # Even-odd count along the +x ray from (2,2) is zero: frozen oracle value.
    assert not point_in_polygon(pt(2, 2), dart)
    with pytest.raises(PointOnBoundary):
        point_in_polygon(pt(1, 0), square)
    with pytest.raises(PointOnBoundary):
        point_in_polygon(pt(0, 0), square)


def test_validate_normalizes_cw_input():
    p = validate_polygon([pt(0, 0), pt(0, 2), pt(2, 2), pt(2, 0)])
    assert p.area2.sign() > 0
    rev = validate_polygon(list(reversed(p.vertices)))
    assert rev.vertices == p.vertices  # orientation normalization idempotent


def test_validate_rejections():
    with pytest.raises(SelfIntersection):
        validate_polygon([pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)])
    with pytest.raises(CollinearTriple) as exc:
        validate_polygon([pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1)])
    assert exc.value.indices == (0, 1, 2)
    with pytest.raises(DuplicateVertex):
        validate_polygon([pt(0, 0), pt(1, 0), pt(0, 0), pt(1, 1)])
    with pytest.raises(TooFewVertices):
        validate_polygon([pt(0, 0), pt(1, 0)])


def test_reflex_vertices(square, dart):
    assert square.is_convex and square.reflex_vertices == frozenset()
    assert dart.reflex_vertices == frozenset({2})
    assert not dart.is_convex


def test_convex_hull(square, dart):
    hull = convex_hull(list(square.vertices) + [pt(1, 1)])
    assert set(hull.vertices) == set(square.vertices)
    hull2 = convex_hull(list(dart.vertices))
    assert set(hull2.vertices) == {pt(0, 0), pt(4, 0), pt(0, 4)}
    # Hull of convex input is the same cyclic point set.
    assert set(convex_hull(list(square.vertices)).vertices) == set(square.vertices)


def test_angle_convention_against_float_oracle():
    # The CCW-angle predicate must agree with a floating-point atan2 oracle
    # away from the exactly-pi boundary.
    import math
    import random

    rng = random.Random(5)
    checked = 0
    while checked < 500:
        ax, ay = rng.randrange(-50, 50), rng.randrange(-50, 50)
        xx, xy = rng.randrange(-50, 50), rng.randrange(-50, 50)
        yx, yy = rng.randrange(-50, 50), rng.randrange(-50, 50)
        a, x, y = pt(ax, ay), pt(xx, xy), pt(yx, yy)
        if orientation(a, x, y) == 0:
            continue
        ang = (math.atan2(yy - ay, yx - ax) - math.atan2(xy - ay, xx - ax)) % (2 * math.pi)
        assert abs(ang - math.pi) > 1e-9
        assert angle_exceeds_pi(a, x, y) == (ang > math.pi)
        checked += 1


def test_hull_contains_all_inputs(dart):
    hull = convex_hull(list(dart.vertices))
    for p in dart.vertices:
        if p in set(hull.vertices):
            continue
        assert point_in_polygon(p, hull)
