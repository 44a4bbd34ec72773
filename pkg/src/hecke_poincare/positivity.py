"""Bounded total-positivity certificates for coefficient sequences.

A sequence ``a_0 = 1, a_1, ...`` is a Polya frequency sequence when every
minor ``det(a_{rows_i - cols_j})`` of its Toeplitz matrix is nonnegative
(``a_k = 0`` for ``k < 0``).  Only finitely many minors can be checked, so
:func:`check_p_sequence` certifies the minors of order at most ``R`` with all
indices at most ``B`` and reports the first negative one it meets.

Minors are enumerated by increasing order, then lexicographically on
``(rows, cols)`` with both written as strictly decreasing tuples.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import IndexOutOfRange
from .linalg import bareiss_det, det
from .partition import Partition, SkewShape, conjugate
from .series import TruncatedSeries, expand, fraction_to_json

DEFAULT_MAX_ORDER = 4
DEFAULT_MAX_INDEX = 10


@dataclass(frozen=True)
class MinorSpec:
    rows: tuple
    cols: tuple

    def __post_init__(self):
        rows, cols = tuple(int(i) for i in self.rows), tuple(int(j) for j in self.cols)
        if not rows or len(rows) != len(cols):
            raise ValueError("rows and cols must be non-empty and of equal length")
        for seq in (rows, cols):
            if seq[-1] < 0 or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"indices must be strictly decreasing and nonnegative: {seq}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def size(self):
        return len(self.rows)

    def is_contained(self):
        """True iff cols_i <= rows_i for all i; otherwise the minor is 0."""
        return all(c <= r for r, c in zip(self.rows, self.cols))

    def skew_shape(self, elementary=True):
        """The skew shape whose Schur value equals this minor, or None if it vanishes.

        With ``delta = (r-1, ..., 0)``, the minor of a complete-function
        sequence is the skew Schur function of (rows - delta)/(cols - delta);
        for an elementary-function sequence the shape is conjugated.
        """
        if not self.is_contained():
            return None
        r = self.size
        outer = Partition(a - (r - 1 - i) for i, a in enumerate(self.rows))
        inner = Partition(b - (r - 1 - i) for i, b in enumerate(self.cols))
        if elementary:
            return SkewShape(conjugate(outer), conjugate(inner))
        return SkewShape(outer, inner)

    def to_json(self):
        return {"rows": list(self.rows), "cols": list(self.cols)}


@dataclass(frozen=True)
class PositivityReport:
    verdict: str
    witness: tuple = None  # (MinorSpec, value)
    bounds: tuple = (DEFAULT_MAX_ORDER, DEFAULT_MAX_INDEX)

    @property
    def passed(self):
        return self.verdict == "pass"

    def to_json(self):
        witness = None
        if self.witness is not None:
            spec, value = self.witness
            witness = dict(spec.to_json(), value=fraction_to_json(value))
        return {
            "verdict": self.verdict,
            "witness": witness,
            "bounds": {"order": self.bounds[0], "index": self.bounds[1]},
        }


def _coefficients(seq):
    if isinstance(seq, TruncatedSeries):
        return seq.coeffs
    return tuple(Fraction(a) for a in seq)


def toeplitz_minor(seq, spec):
    """``det(a_{rows_i - cols_j})`` with negative indices read as 0."""
    a = _coefficients(seq)
    need = max(spec.rows) - min(spec.cols)
    if need >= len(a):
        raise IndexOutOfRange(f"minor needs a_{need} but the sequence stops at a_{len(a) - 1}")
    return det([[a[i - j] if i >= j else 0 for j in spec.cols] for i in spec.rows])


def _decreasing_tuples(size, max_index):
    return sorted(tuple(reversed(c)) for c in combinations(range(max_index + 1), size))


def _dominated(rows):
    """Strictly decreasing tuples cols with cols_i <= rows_i for all i."""
    out = [()]
    r = len(rows)
    for i in range(r):
        out = [c + (v,) for c in out
               for v in range(min(rows[i], c[-1] - 1 if c else rows[i]), r - i - 2, -1)]
    return out


def _minor_values(ints, r, max_index):
    """Integer minors of order r, one per class of (rows, cols) up to a common shift.

    Only contained pairs (cols_i <= rows_i) are stored; all others vanish.
    """
    values = {}
    for rows in combinations(range(max_index, -1, -1), r):
        for cols in _dominated(rows):
            if cols[-1] and rows[-1]:
                continue
            values[(rows, cols)] = bareiss_det(
                [[ints[i - j] if i >= j else 0 for j in cols] for i in rows]
            )
    return values


def _scan(seq, max_order, max_index, is_bad, contained_only):
    """First minor (in enumeration order) whose value satisfies ``is_bad``.

    Works on the sequence scaled to integers, which multiplies each order-r
    minor by a positive constant; the witness is recomputed exactly.
    """
    if max_order < 1 or max_index < 0:
        raise ValueError("bounds must satisfy max_order >= 1 and max_index >= 0")
    a = _coefficients(seq)
    if max_index >= len(a):
        raise IndexOutOfRange(
            f"bounds need a_{max_index} but the sequence stops at a_{len(a) - 1}"
        )
    a = a[: max_index + 1]
    scale = lcm(*(x.denominator for x in a))
    ints = [int(x * scale) for x in a]
    for r in range(1, max_order + 1):
        values = _minor_values(ints, r, max_index)
        zero_is_bad = not contained_only and is_bad(0)
        if not zero_is_bad and not any(is_bad(v) for v in values.values()):
            continue
        # something fails at this order: walk the enumeration to find the first
        tuples = _decreasing_tuples(r, max_index)
        for rows in tuples:
            for cols in tuples:
                if any(c > q for q, c in zip(rows, cols)):
                    if contained_only:
                        continue
                    value = 0
                else:
                    shift = min(rows[-1], cols[-1])
                    value = values[(tuple(i - shift for i in rows),
                                    tuple(j - shift for j in cols))]
                if is_bad(value):
                    spec = MinorSpec(rows, cols)
                    return spec, toeplitz_minor(a, spec)
    return None


def check_p_sequence(seq, max_order=DEFAULT_MAX_ORDER, max_index=DEFAULT_MAX_INDEX):
    """Certify that every Toeplitz minor within the bounds is nonnegative.

    >>> check_p_sequence([1, 1, 1, 0, 0, 0, 0], 3, 6).to_json()["witness"]["value"]
    '-1'
    """
    a = _coefficients(seq)
    if not a or a[0] != 1:
        raise ValueError("a P-sequence candidate must start with a_0 = 1")
    witness = _scan(a, max_order, max_index, lambda v: v < 0, contained_only=False)
    if witness is None:
        return PositivityReport("pass", None, (max_order, max_index))
    return PositivityReport("fail", witness, (max_order, max_index))


@dataclass(frozen=True)
class PPReport:
    """Outcome of the strict (PP) positivity test for a factored series.

    ``certified`` records whether one of the sufficient conditions holds: a
    positive exponential weight, or an infinite family of roots or of poles.
    ``strict_check`` is the bounded search for a contained minor that is not
    strictly positive; finite data with no exponential part always fails it
    eventually.
    """

    certified: bool
    condition: str
    reason: str
    strict_check: PositivityReport

    def to_json(self):
        return {
            "certified": self.certified,
            "condition": self.condition,
            "reason": self.reason,
            "strict_check": self.strict_check.to_json(),
        }


def check_pp_sequence(f, max_order=DEFAULT_MAX_ORDER, max_index=DEFAULT_MAX_INDEX):
    if f.gamma > 0:
        condition, reason = "gamma", "positive exponential weight"
    elif f.root_families:
        condition, reason = "root_family", "infinitely many positive roots"
    elif f.pole_families:
        condition, reason = "pole_family", "infinitely many positive poles"
    else:
        condition = None
        reason = "finite roots and poles with zero exponential weight"
    seq = expand(f, max_index)
    witness = _scan(seq, max_order, max_index, lambda v: v <= 0, contained_only=True)
    strict = PositivityReport("pass" if witness is None else "fail", witness,
                              (max_order, max_index))
    return PPReport(condition is not None, condition, reason, strict)
