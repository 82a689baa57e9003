"""Chords, f-vectors and the convexity criterion.

A chord of a simple polygon joins two non-consecutive vertices; it is a
diagonal when it runs through the interior and an epigonal when it runs
through the exterior.  Counting pairwise non-crossing subsets of either
family by size gives an f-vector whose alternating sum detects convexity.
"""

from chord_euler import (
    Point,
    convex_ngon,
    diagonals,
    epigonals,
    euler_recursive,
    f_vector,
    validate_polygon,
    verify_theorem1,
)

print("== A convex hexagon ==")
hexagon = convex_ngon(6)
fd = f_vector(diagonals(hexagon))
print("diagonal f-vector:", fd.counts)
print("alternating sum d1 - d2 + d3 =", fd.alternating_tail(), "(equals 1 + (-1)^6)")
print("chi(M_d) =", fd.euler, "= (-1)^(n+1) for convex n-gons")
print("the 14 maximal entries are the hexagon triangulations (a Catalan number)")

print()
print("== A dart: one reflex vertex ==")
dart = validate_polygon([Point(0, 0), Point(4, 0), Point(1, 1), Point(0, 4)])
print("reflex vertices:", sorted(dart.reflex_vertices))
print("M_d =", diagonals(dart), " M_e =", epigonals(dart))
print("chi(M_d) =", euler_recursive(diagonals(dart)), " chi(M_e) =", euler_recursive(epigonals(dart)))
print("both vanish exactly when the polygon is non-convex:")
print(verify_theorem1(dart))

print()
print("== The criterion over a sweep ==")
for n in range(3, 9):
    rep = verify_theorem1(convex_ngon(n))
    print(f"convex {n}-gon: alternating sum {rep.d_sum} == 1 + (-1)^{n} -> {rep.ok}")
