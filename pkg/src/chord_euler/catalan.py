"""Generalized Catalan numbers d_k(n, a) for non-crossing a-diagonal sets.

d_k(n, a) counts the k-element pairwise non-crossing sets of a-diagonals of a
convex polygon with a*(n+1)+2 vertices.  The closed form is

    d_k(n, a) = C(a*(n+1)+k+1, k) * C(n, k) / (k + 1)

and the division is always exact; an explicit guard raises if it ever is not
(that would indicate misuse, not rounding).  The only independent ground
truth here is the geometric brute force over an actual convex polygon.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .chords import a_diagonals
from .geometry import Polygon
from .nc_euler import FVector, f_vector


def d_closed(n: int, k: int, a: int) -> int:
    """Exact d_k(n, a); a = 0 is allowed (needed by the alternating sum)."""
    if n < 0 or k < 0 or a < 0:
        raise ValueError("n, k, a must be non-negative")
    num = comb(a * (n + 1) + k + 1, k) * comb(n, k)
    q, r = divmod(num, k + 1)
    if r:
        raise ArithmeticError(f"inexact division in d_closed({n}, {k}, {a})")
    return q


class DTable:
    """Memoized view of d_k(n, a)."""

    def __init__(self):
        self._cache: dict[tuple[int, int, int], int] = {}

    def __call__(self, n: int, k: int, a: int) -> int:
        key = (n, k, a)
        val = self._cache.get(key)
        if val is None:
            val = self._cache[key] = d_closed(n, k, a)
        return val


def d_recurrence_check(n: int, k: int, a: int) -> bool:
    """Whether the convolution recurrence reproduces the closed form.

    d_k(n,a) = (a(n+1)+2)/(2k) * sum_{i1+i2=n-1} sum_{j1+j2=k-1}
               d_{j1}(i1,a) d_{j2}(i2,a)
    """
    if n < 1 or k < 1 or a < 1:
        raise ValueError("recurrence needs n, k, a >= 1")
    acc = 0
    for i1 in range(n):
        i2 = n - 1 - i1
        for j1 in range(k):
            j2 = k - 1 - j1
            acc += d_closed(i1, j1, a) * d_closed(i2, j2, a)
    rhs = Fraction(a * (n + 1) + 2, 2 * k) * acc
    return rhs == d_closed(n, k, a)


def alternating_sum_check(n: int, a: int) -> bool:
    """sum_{k=1..n} (-1)^(k-1) d_k(n,a) == 1 + (-1)^(n+1) d_n(n, a-1)."""
    if n < 1 or a < 1:
        raise ValueError("needs n, a >= 1")
    lhs = sum((-1) ** (k - 1) * d_closed(n, k, a) for k in range(1, n + 1))
    rhs = 1 + (-1) ** (n + 1) * d_closed(n, n, a - 1)
    return lhs == rhs


def identity14_check(n: int, i: int, a: int) -> bool:
    """Pure-binomial transcription of the recurrence identity.

    Kept textually independent of :func:`d_recurrence_check` so that a
    transcription slip in either one shows up as a disagreement.
    """
    if n < 1 or i < 1 or a < 1:
        raise ValueError("needs n, i, a >= 1")
    lhs = Fraction(comb(a * (n + 1) + (i + 1), i) * comb(n, i), i + 1)
    acc = Fraction(0)
    for n1 in range(n):
        n2 = n - 1 - n1
        for i1 in range(i):
            i2 = i - 1 - i1
            acc += Fraction(
                comb(a * (n1 + 1) + (i1 + 1), i1)
                * comb(a * (n2 + 1) + (i2 + 1), i2)
                * comb(n1, i1)
                * comb(n2, i2),
                (i1 + 1) * (i2 + 1),
            )
    rhs = Fraction(a * (n + 1) + 2, 2 * i) * acc
    return lhs == rhs


def brute_a_diagonal_fvector(poly: Polygon, a: int) -> FVector:
    """Geometric oracle: enumerate non-crossing a-diagonal sets of a convex polygon."""
    if not poly.is_convex:
        raise ValueError("the a-diagonal counting theorem is about convex polygons")
    if (poly.n - 2) % a != 0 or (poly.n - 2) // a < 1:
        raise ValueError(f"|P| = {poly.n} is not a*(n+1)+2 with n >= 0 for a = {a}")
    return f_vector(a_diagonals(poly, a))
