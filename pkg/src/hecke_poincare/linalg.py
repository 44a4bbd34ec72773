"""Exact determinants by fraction-free (Bareiss) elimination."""

from fractions import Fraction
from math import lcm


def integer_rows(matrix):
    """Scale each row of a rational matrix to integers.

    Returns ``(rows, scale)`` where ``det(matrix) = det(rows) / scale``.
    """
    rows, scale = [], 1
    for row in matrix:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append([int(Fraction(x) * den) for x in row])
        scale *= den
    return rows, scale


def bareiss_det(rows):
    """Determinant of a square integer matrix; the 0x0 determinant is 1.

    Every division in the elimination is exact, so intermediate values stay
    integers bounded by minors of the input.
    """
    a = [list(r) for r in rows]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def det(matrix):
    """Exact determinant of a square matrix of ints or Fractions."""
    rows, scale = integer_rows(matrix)
    value = bareiss_det(rows)
    return Fraction(value, scale) if scale != 1 else Fraction(value)
