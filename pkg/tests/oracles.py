"""Independent reference computations used by the test suite.

Nothing here imports the library's arithmetic; each routine is the most
direct brute-force version of the quantity it checks.
"""

import random
from fractions import Fraction
from itertools import permutations, product
from math import prod


def count_partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        return 1
    return sum(count_partitions(n - k, k) for k in range(1, min(n, largest) + 1))


def transpose_cells(parts):
    cells = {(i, j) for i, p in enumerate(parts) for j in range(p)}
    cols = {}
    for i, j in cells:
        cols[j] = cols.get(j, 0) + 1
    return tuple(sorted(cols.values(), reverse=True))


def convolve(a, b, n):
    a = list(a) + [0] * (n + 1)
    b = list(b) + [0] * (n + 1)
    return [sum(Fraction(a[i]) * b[k - i] for i in range(k + 1)) for k in range(n + 1)]


def long_division_inverse(c, n):
    """Coefficients of 1/c(t) by schoolbook long division of 1."""
    c = [Fraction(x) for x in c] + [Fraction(0)] * (n + 1)
    remainder = [Fraction(1)] + [Fraction(0)] * n
    quotient = []
    for k in range(n + 1):
        q = remainder[k] / c[0]
        quotient.append(q)
        for i in range(k, n + 1):
            remainder[i] -= q * c[i - k]
    return quotient


def poly_from_linear_factors(factors, n, sign=1):
    """prod(1 + sign*x t) over ``factors``, truncated at degree n."""
    out = [Fraction(1)] + [Fraction(0)] * n
    for x in factors:
        for k in range(n, 0, -1):
            out[k] += sign * x * out[k - 1]
    return out


def geometric_product(factors, n):
    """prod(1 - x t)^-1 by multiplying explicit geometric series."""
    out = [Fraction(1)] + [Fraction(0)] * n
    for x in factors:
        out = convolve(out, [Fraction(x) ** k for k in range(n + 1)], n)
    return out


def cofactor_det(m):
    """Determinant by Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * Fraction(m[0][j]) * cofactor_det(minor)
    return total


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        total += (-1) ** inversions * prod((Fraction(m[i][perm[i]]) for i in range(n)), start=1)
    return total


def ssyt_count(shape, weight):
    """Kostka number by filling every cell with every letter and filtering."""
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    k = len(weight)
    count = 0
    for letters in product(range(1, k + 1), repeat=len(cells)):
        fill = dict(zip(cells, letters))
        if any(fill[(i, j)] > fill[(i, j + 1)] for (i, j) in cells if (i, j + 1) in fill):
            continue
        if any(fill[(i, j)] >= fill[(i + 1, j)] for (i, j) in cells if (i + 1, j) in fill):
            continue
        if all(letters.count(a + 1) == weight[a] for a in range(k)):
            count += 1
    return count


def hook_content(shape, n):
    conj = transpose_cells(shape)
    num = den = 1
    for i, p in enumerate(shape):
        for j in range(p):
            num *= n + j - i
            den *= (p - j - 1) + (conj[j] - i - 1) + 1
    return Fraction(num, den)


def random_rational(rng, max_num=4, max_den=4):
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def random_unit_series(rng, order, low=-5, high=5):
    """Random series with constant term 1 and small rational coefficients."""
    return [Fraction(1)] + [Fraction(rng.randint(low, high), rng.randint(1, 3))
                            for _ in range(order)]


def rng(seed):
    return random.Random(seed)
