"""Generalized Catalan numbers from a-diagonal families.

In a convex polygon with a(n+1)+2 vertices, an a-diagonal leaves a positive
multiple of a vertices on each side.  Counting pairwise non-crossing sets of
them yields d_k(n, a) with a closed form, a convolution recurrence, and an
alternating-sum identity; the geometric enumeration is the ground truth.
"""

from chord_euler import (
    a_diagonals,
    alternating_sum_check,
    brute_a_diagonal_fvector,
    convex_ngon,
    d_closed,
    d_recurrence_check,
)

print("d_k(n, a) table for a = 2:")
for n in range(1, 5):
    print(f"  n={n}:", [d_closed(n, k, 2) for k in range(n + 1)])

print()
print("geometric cross-check on a convex octagon (a = 2, n = 2):")
octagon = convex_ngon(8)
print("  2-diagonals:", a_diagonals(octagon, 2))
fv = brute_a_diagonal_fvector(octagon, 2)
print("  enumerated f-vector:", fv.counts)
print("  closed form        :", [d_closed(2, k, 2) for k in range(3)])
print("  chi =", fv.euler, "= (-1)^2 * d_2(2, 1) =", d_closed(2, 2, 1))

print()
print("identities over a parameter box:")
rec = all(d_recurrence_check(n, k, a) for n in range(1, 7) for k in range(1, n + 1) for a in range(1, 4))
alt = all(alternating_sum_check(n, a) for n in range(1, 9) for a in range(1, 4))
print("  convolution recurrence:", rec)
print("  alternating sums      :", alt)
print("classical case: d_n(n, 1) =", [d_closed(n, n, 1) for n in range(1, 7)], "(Catalan numbers)")
