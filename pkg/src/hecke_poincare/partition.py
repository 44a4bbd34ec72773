"""Integer partitions and skew shapes.

A :class:`Partition` is a tuple of weakly decreasing positive integers with no
trailing zeros, so structural equality is partition equality.  Absent parts
read as 0 everywhere.
"""

from dataclasses import dataclass
from functools import lru_cache


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    >>> Partition([3, 1, 0])
    Partition(3, 1)
    >>> Partition([3, 1]).conjugate()
    Partition(2, 1, 1)
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition{tuple(self)!r}".replace(",)", ")")

    def part(self, i):
        """The i-th part (0-based), reading absent parts as 0."""
        return self[i] if 0 <= i < len(self) else 0

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def conjugate(self):
        return conjugate(self)

    def cells(self):
        """Yield (row, column) pairs, 0-based, row by row."""
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def to_json(self):
        return list(self)

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list) or not all(
            isinstance(p, int) and not isinstance(p, bool) for p in data
        ):
            raise ValueError(f"partition must be a JSON array of integers: {data!r}")
        return cls(data)


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram outer/inner; requires inner contained in outer."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            from .errors import InvalidShape

            raise InvalidShape(f"{list(self.inner)} is not contained in {list(self.outer)}")

    @property
    def weight(self):
        return self.outer.weight - self.inner.weight

    def conjugate(self):
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def cells(self):
        for i, row in enumerate(self.outer):
            for j in range(self.inner.part(i), row):
                yield i, j

    def rows(self):
        """(start, stop) column range of every row of the outer shape."""
        return [(self.inner.part(i), row) for i, row in enumerate(self.outer)]


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n):
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [tuple(p) for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def partitions_up_to(max_weight):
    """Partitions of every weight 0..max_weight, by weight then reverse-lex."""
    return [p for n in range(max_weight + 1) for p in enumerate_partitions(n)]


def conjugate(partition):
    parts = tuple(partition)
    if not parts:
        return Partition()
    return Partition(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def contains(outer, inner):
    """True iff inner_i <= outer_i for every i (absent parts are 0)."""
    outer, inner = tuple(outer), tuple(inner)
    if len(inner) > len(outer):
        return all(p == 0 for p in inner[len(outer):]) and contains(outer, inner[: len(outer)])
    return all(b <= a for a, b in zip(outer, inner))


def in_hook_region(partition, m, n):
    """Membership in the (m, n) fat hook: every part beyond row m is at most n."""
    return all(p <= n for p in tuple(partition)[m:])


def subpartitions(partition):
    """All partitions contained in ``partition`` (including the empty one)."""
    parts = tuple(partition)

    def rec(i, cap):
        if i == len(parts):
            yield ()
            return
        yield ()
        for v in range(1, min(cap, parts[i]) + 1):
            for rest in rec(i + 1, v):
                yield (v,) + rest

    return [Partition(p) for p in rec(0, parts[0] if parts else 0)]
