"""Schur-type symmetric functions evaluated at a specialization.

A :class:`Specialization` fixes the values of the elementary functions
(``e_r``) and, dually, of the complete functions (``h_r``, written ``s_r`` in
the dimension tables).  Schur and skew Schur values come from the two
Jacobi-Trudi determinants.

Independent of the determinants, finite-variable Schur polynomials are summed
over semistandard tableaux: :func:`schur_polynomial_oracle` enumerates every
tableau, :func:`skew_schur_polynomial` peels off horizontal strips (one per
letter).  Kostka numbers and Littlewood-Richardson coefficients are tableau
counts.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .errors import InsufficientPrecision, InvalidShape, WeightMismatch
from .linalg import det
from .partition import Partition, SkewShape, conjugate, contains, subpartitions
from .series import FactoredSeries, TruncatedSeries, as_fraction, dual_series, expand


@dataclass(frozen=True)
class Specialization:
    """Values ``e_0..e_N`` and ``h_0..h_N`` related by ``E(t) H(-t) = 1``."""

    e_values: TruncatedSeries
    s_values: TruncatedSeries

    @classmethod
    def from_lambda_series(cls, e_values):
        if e_values.coeffs[0] != 1:
            raise ValueError("elementary values need e_0 = 1")
        return cls(e_values, dual_series(e_values))

    @classmethod
    def from_s_series(cls, s_values):
        if s_values.coeffs[0] != 1:
            raise ValueError("complete values need h_0 = 1")
        return cls(dual_series(s_values), s_values)

    @classmethod
    def from_factored(cls, f, order):
        return cls.from_lambda_series(expand(f, order))

    @classmethod
    def from_variables(cls, x, y=(), order=8):
        """Super specialization: ``x`` as roots, ``y`` as poles of the e-series."""
        return cls.from_factored(FactoredSeries(roots=x, poles=y), order)

    @property
    def order(self):
        return self.e_values.order

    def e(self, r):
        return self._value(self.e_values, r)

    def h(self, r):
        return self._value(self.s_values, r)

    def _value(self, series, r):
        if r < 0:
            return Fraction(0)
        if r > series.order:
            raise InsufficientPrecision(
                f"index {r} exceeds the specialization order {series.order}"
            )
        return series.coeffs[r]


def _as_shape(shape):
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(Partition(shape))


def jacobi_trudi_h(sp, shape):
    """``det(h_{outer_i - inner_j - i + j})`` of size l(outer)."""
    shape = _as_shape(shape)
    lam, mu = shape.outer, shape.inner
    n = len(lam)
    return det([[sp.h(lam[i] - mu.part(j) - i + j) for j in range(n)] for i in range(n)])


def jacobi_trudi_e(sp, shape):
    """``det(e_{outer'_i - inner'_j - i + j})`` of size l(outer')."""
    shape = _as_shape(shape).conjugate()
    lam, mu = shape.outer, shape.inner
    n = len(lam)
    return det([[sp.e(lam[i] - mu.part(j) - i + j) for j in range(n)] for i in range(n)])


def skew_schur_value(sp, shape):
    """Skew Schur value at ``sp``, from the smaller Jacobi-Trudi matrix.

    >>> sp = Specialization.from_factored(FactoredSeries(roots=[1, 1]), 4)
    >>> skew_schur_value(sp, SkewShape(Partition([2, 1]), Partition([1])))
    Fraction(4, 1)
    """
    if not isinstance(shape, SkewShape):
        outer, inner = shape
        if not contains(outer, inner):
            raise InvalidShape(f"{list(inner)} is not contained in {list(outer)}")
        shape = SkewShape(Partition(outer), Partition(inner))
    rows = len(shape.outer)
    cols = shape.outer.part(0)
    if rows <= cols:
        return jacobi_trudi_h(sp, shape)
    return jacobi_trudi_e(sp, shape)


def schur_value(sp, partition):
    return skew_schur_value(sp, SkewShape(Partition(partition)))


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape; ``rows[i]`` lists row i's entries left to right."""

    shape: SkewShape
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        expected = [stop - start for start, stop in self.shape.rows()]
        if [len(r) for r in rows] != expected:
            raise InvalidShape("row lengths do not match the shape")
        object.__setattr__(self, "rows", rows)

    def entry(self, i, j):
        start = self.shape.inner.part(i)
        return self.rows[i][j - start]

    def is_semistandard(self):
        for i, row in enumerate(self.rows):
            if any(a < 1 for a in row) or any(a > b for a, b in zip(row, row[1:])):
                return False
            if i == 0:
                continue
            for j in range(self.shape.inner.part(i), self.shape.outer[i]):
                if j >= self.shape.inner.part(i - 1) and self.entry(i - 1, j) >= self.entry(i, j):
                    return False
        return True

    def content(self):
        """Multiplicity of each letter 1..max as a tuple."""
        top = max((max(r) for r in self.rows if r), default=0)
        counts = [0] * top
        for row in self.rows:
            for a in row:
                counts[a - 1] += 1
        return tuple(counts)

    def reverse_reading_word(self):
        """Entries read right to left along rows, top row first."""
        return [a for row in self.rows for a in reversed(row)]


def semistandard_tableaux(shape, max_entry):
    """Every semistandard tableau of ``shape`` with entries in 1..max_entry.

    Exhaustive, cell by cell; intended for small shapes only.
    """
    shape = _as_shape(shape)
    cells = list(shape.cells())
    filling = {}

    def rec(k):
        if k == len(cells):
            yield Tableau(shape, [[filling[(i, j)] for j in range(start, stop)]
                                  for i, (start, stop) in enumerate(shape.rows())])
            return
        i, j = cells[k]
        low = max(filling.get((i, j - 1), 1), filling.get((i - 1, j), 0) + 1)
        for a in range(low, max_entry + 1):
            filling[(i, j)] = a
            yield from rec(k + 1)
        filling.pop((i, j), None)

    yield from rec(0)


def schur_polynomial_oracle(shape, k, values):
    """Brute-force ``s_shape(x_1..x_k)``: sum over all tableaux of the monomials."""
    values = [as_fraction(v) for v in values]
    if len(values) != k:
        raise ValueError("need exactly k values")
    total = Fraction(0)
    for tab in semistandard_tableaux(shape, k):
        total += prod((values[a - 1] for row in tab.rows for a in row), start=Fraction(1))
    return total


def _horizontal_strips(outer, inner, size=None):
    """Partitions nu with inner <= nu and outer/nu a horizontal strip."""
    outer = tuple(outer)
    target = None if size is None else sum(outer) - size

    def rec(i, acc, total):
        if i == len(outer):
            if target is None or total == target:
                yield Partition(acc)
            return
        low = max(outer[i + 1] if i + 1 < len(outer) else 0, inner.part(i))
        for v in range(outer[i], low - 1, -1):
            yield from rec(i + 1, acc + (v,), total + v)

    if not contains(outer, inner):
        return
    yield from rec(0, (), 0)


@lru_cache(maxsize=None)
def _skew_schur_poly(outer, inner, values):
    if not values:
        return Fraction(1) if outer == inner else Fraction(0)
    if len(outer) > len(inner) + len(values):
        return Fraction(0)
    last = values[-1]
    total = Fraction(0)
    for nu in _horizontal_strips(outer, inner):
        strip = sum(outer) - sum(nu)
        total += _skew_schur_poly(nu, inner, values[:-1]) * last ** strip
    return total


def skew_schur_polynomial(shape, values):
    """``s_shape(x_1..x_k)`` by the branching rule (largest letter first)."""
    shape = _as_shape(shape)
    return _skew_schur_poly(shape.outer, shape.inner, tuple(as_fraction(v) for v in values))


def super_schur_value(x, y, partition):
    """Hook Schur function: sum over mu in lambda of ``s_mu(x) s_{lambda'/mu'}(y)``.

    >>> super_schur_value([1], [1], Partition([2, 1]))
    Fraction(2, 1)
    """
    lam = Partition(partition)
    lam_conj = conjugate(lam)
    total = Fraction(0)
    for mu in subpartitions(lam):
        if len(mu) > len(x):
            continue
        left = skew_schur_polynomial(mu, x)
        if left:
            total += left * skew_schur_polynomial(SkewShape(lam_conj, conjugate(mu)), y)
    return total


def kostka(shape, weight):
    """Number of semistandard tableaux of ``shape`` with content ``weight``.

    ``weight`` may be any composition (zeros allowed, any order).
    """
    lam = Partition(shape)
    weight = tuple(int(w) for w in weight)
    if any(w < 0 for w in weight):
        raise ValueError("weight entries must be nonnegative")
    if sum(weight) != lam.weight:
        raise WeightMismatch(f"|{list(lam)}| = {lam.weight} but the weight sums to {sum(weight)}")
    value = _kostka(lam, weight)
    assert value >= 0
    return value


@lru_cache(maxsize=None)
def _kostka(lam, weight):
    if not weight:
        return 1 if not lam else 0
    return sum(_kostka(nu, weight[:-1])
               for nu in _horizontal_strips(lam, Partition(), size=weight[-1]))


def lr_tableaux(mu, gamma, lam):
    """Littlewood-Richardson tableaux of shape lam/mu and content gamma.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left); the lattice condition is enforced as the word grows.
    Yields each tableau as a tuple of rows.
    """
    lam, mu, gamma = Partition(lam), Partition(mu), Partition(gamma)
    if not contains(lam, mu) or lam.weight != mu.weight + gamma.weight:
        return
    shape = SkewShape(lam, mu)
    cells = [(i, j) for i, (start, stop) in enumerate(shape.rows())
             for j in range(stop - 1, start - 1, -1)]
    filling = {}
    counts = [0] * (len(gamma) + 1)

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(filling[(i, j)] for j in range(start, stop))
                        for i, (start, stop) in enumerate(shape.rows()))
            return
        i, j = cells[k]
        high = filling.get((i, j + 1), len(gamma))
        low = filling.get((i - 1, j), 0) + 1
        for a in range(low, min(high, len(gamma), i + 1) + 1):
            if counts[a] >= gamma[a - 1]:
                continue
            if a > 1 and counts[a] + 1 > counts[a - 1]:
                continue
            filling[(i, j)] = a
            counts[a] += 1
            yield from rec(k + 1)
            counts[a] -= 1
            del filling[(i, j)]

    yield from rec(0)


def lr_coefficient(mu, gamma, lam):
    """Multiplicity of ``s_lam`` in ``s_mu s_gamma``, counted by LR tableaux.

    >>> lr_coefficient(Partition([2]), Partition([1]), Partition([2, 1]))
    1
    """
    value = sum(1 for _ in lr_tableaux(mu, gamma, lam))
    assert value >= 0
    return value


def hook_content_dim(partition, n):
    """``s_lambda(1^n)`` by the hook-content formula; 0 when l(lambda) > n."""
    lam = Partition(partition)
    if len(lam) > n:
        return 0
    lam_conj = conjugate(lam)
    num = den = 1
    for i, j in lam.cells():
        num *= n + j - i
        den *= (lam[i] - j - 1) + (lam_conj[j] - i - 1) + 1
    value = Fraction(num, den)
    assert value.denominator == 1
    return int(value)
