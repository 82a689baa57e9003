import pytest

from chord_euler.chords import (
    Chord,
    ChordKind,
    a_diagonals,
    classify_chord,
    diagonals,
    ear_chord,
    epigonals,
    forbidden_star,
    universe_of,
)
from chord_euler.generators import convex_ngon, random_simple_polygon
from conftest import pt
from chord_euler.geometry import validate_polygon


def test_classify_dart(dart):
    assert classify_chord(dart, Chord.of(0, 2)) is ChordKind.DIAGONAL
    assert classify_chord(dart, Chord.of(1, 3)) is ChordKind.EPIGONAL


def test_classify_convex(square):
    assert classify_chord(square, Chord.of(0, 2)) is ChordKind.DIAGONAL
    assert classify_chord(square, Chord.of(1, 3)) is ChordKind.DIAGONAL


def test_boundary_crossing_kind_exists():
    # A spiral-ish hexagon where chord 0-2 pierces the boundary.
    poly = validate_polygon(
        [pt(0, 0), pt(10, 0), pt(10, 10), pt(4, 10), pt(4, 3), pt(2, 6)]
    )
    kinds = universe_of(poly).kinds
    assert ChordKind.BOUNDARY_CROSSING in kinds


def test_diagonals_epigonals_counts(dart):
    pent = convex_ngon(5)
    assert len(diagonals(pent)) == 5 and len(epigonals(pent)) == 0
    assert diagonals(dart).chords() == [Chord(0, 2)]
    assert epigonals(dart).chords() == [Chord(1, 3)]
    tri = convex_ngon(3)
    assert len(diagonals(tri)) == 0 and len(epigonals(tri)) == 0


def test_chord_count_partition_invariant():
    for seed in range(20):
        n = 4 + seed % 6
        poly = random_simple_polygon(n, seed)
        uni = universe_of(poly)
        assert uni.size == n * (n - 3) // 2
        assert len(diagonals(poly)) >= 1  # d_1 >= 1 for n >= 4
        if poly.is_convex:
            assert len(epigonals(poly)) == 0
            assert len(diagonals(poly)) == uni.size
        else:
            assert len(epigonals(poly)) > 0


def test_a_diagonals_hexagon_octagon():
    hexagon = convex_ngon(6)
    assert set(a_diagonals(hexagon, 2)) == {Chord(0, 3), Chord(1, 4), Chord(2, 5)}
    octagon = convex_ngon(8)
    got = set(a_diagonals(octagon, 2))
    assert len(got) == 8
    assert all((c.j - c.i) in (3, 5) for c in got)
    # a = 1 recovers all diagonals.
    assert a_diagonals(hexagon, 1) == diagonals(hexagon)
    with pytest.raises(ValueError):
        a_diagonals(convex_ngon(7), 2)


def test_a_diagonals_subset_of_diagonals():
    for size, a in ((6, 2), (8, 2), (8, 3), (10, 2)):
        poly = convex_ngon(size)
        assert a_diagonals(poly, a) <= diagonals(poly)


def test_forbidden_star_and_ear():
    pent = convex_ngon(5)
    assert set(forbidden_star(pent, 0)) == {Chord(0, 2), Chord(0, 3)}
    hexagon = convex_ngon(6)
    assert ear_chord(hexagon, 0).chords() == [Chord(1, 5)]
    hept = convex_ngon(7)
    assert set(forbidden_star(hept, 3)) == {
        Chord(0, 3), Chord(1, 3), Chord(3, 5), Chord(3, 6)
    }
    with pytest.raises(IndexError):
        forbidden_star(pent, 9)


def test_chord_set_algebra():
    pent = convex_ngon(5)
    uni = universe_of(pent)
    a = uni.set_of([Chord.of(0, 2)])
    b = uni.set_of([Chord.of(0, 2), Chord.of(1, 3)])
    assert a <= b and len(b - a) == 1 and (a | b) == b and (a & b) == a
    assert Chord(1, 3) in b and Chord(1, 3) not in a
    other = universe_of(convex_ngon(6))
    with pytest.raises(ValueError):
        a | other.set_of([Chord.of(0, 2)])


def test_chord_text_round_trip():
    c = Chord.of(7, 2)
    assert c == Chord(2, 7)
    assert Chord.parse(str(c)) == c
