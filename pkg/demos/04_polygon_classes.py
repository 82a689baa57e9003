"""The six polygon classes behind the forbidden-position biconditionals.

Whether chi survives deleting all chords at a vertex (or just the ear chord
skipping it) is equivalent to membership in one of six geometric classes.
The detectors below are pure angle/reflex-pattern predicates, so comparing
them against the chi computations tests the equivalences on real inputs.
"""

from chord_euler import class_exemplar, class_report, random_simple_polygon, verify_theorem3

print("== exemplars ==")
for kind in range(1, 7):
    poly = class_exemplar(kind, 0, 7 if kind != 2 else 7)
    rep = verify_theorem3(poly, 0)
    print(
        f"class {kind}: n={poly.n} reflex={sorted(poly.reflex_vertices)}"
        f" chi(star_d, star_e, ear_d, ear_e) = ({rep.chi_d_star}, {rep.chi_e_star},"
        f" {rep.chi_d_ear}, {rep.chi_e_ear}) biconditionals ok: {rep.ok}"
    )

print()
print("== a random polygon, classified at every vertex ==")
poly = random_simple_polygon(8, seed=3)
print("reflex vertices:", sorted(poly.reflex_vertices))
for i in range(poly.n):
    rep = class_report(poly, i)
    thm = verify_theorem3(poly, i)
    tags = ",".join(sorted(rep.memberships)) or "-"
    print(f"vertex {i}: classes [{tags}] theorem-3 clauses hold: {thm.ok}")
