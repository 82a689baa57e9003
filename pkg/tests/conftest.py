from __future__ import annotations

from itertools import combinations

import pytest

from chord_euler.geometry import Point, Polygon, Segment, segments_properly_cross, validate_polygon


def pt(x, y) -> Point:
    return Point(x, y)


@pytest.fixture
def square() -> Polygon:
    return validate_polygon([pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)])


@pytest.fixture
def dart() -> Polygon:
    return validate_polygon([pt(0, 0), pt(4, 0), pt(1, 1), pt(0, 4)])


def brute_nc_counts(segments: list[Segment]) -> list[int]:
    """Independent oracle: try all 2^m subsets, test pairwise non-crossing."""
    m = len(segments)
    counts = [0] * (m + 1)
    for r in range(m + 1):
        for combo in combinations(range(m), r):
            if all(
                not segments_properly_cross(segments[a], segments[b])
                for a, b in combinations(combo, 2)
            ):
                counts[r] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def brute_euler(segments: list[Segment]) -> int:
    return sum((-1) ** i * c for i, c in enumerate(brute_nc_counts(segments)))
