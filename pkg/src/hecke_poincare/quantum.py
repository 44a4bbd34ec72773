"""Poincare series of the quadratic algebras attached to a Hecke operator.

A quantum space is given by the factored Poincare series of its exterior
algebra, ``P_Lambda(t) = prod(1 + t_i t) / prod(1 - u_j t)``, together with
the Hecke parameter ``q``.  From it we get the symmetric algebra series by
duality, the dimensions ``m_lambda`` of the simple comodules as Schur values,
and the series of the bialgebra ``E`` in two independent ways: as the sum of
squared dimensions, and as the lambda-ring square of the symmetric series.

``q`` is carried along but never enters a computation: the dimension data do
not depend on it.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from .errors import MismatchedParameter, NegativeDimension, NonIntegralDimension
from .partition import Partition, enumerate_partitions, partitions_up_to
from .positivity import DEFAULT_MAX_ORDER, check_p_sequence
from .series import (
    FactoredSeries,
    TruncatedSeries,
    as_fraction,
    dual_series,
    expand,
    factored_multiply,
    fraction_to_json,
    lambda_product,
)
from .symfun import Specialization, schur_value


@dataclass(frozen=True)
class QuantumSpaceSpec:
    p_lambda: FactoredSeries
    q: Fraction = Fraction(1)

    def __post_init__(self):
        q = as_fraction(self.q)
        if q == 0:
            raise ValueError("the Hecke parameter q must be nonzero")
        if self.p_lambda.gamma != 0:
            raise ValueError("a quantum-space series has no exponential factor (gamma = 0)")
        if not self.p_lambda.is_finite:
            raise ValueError("a quantum-space series has finitely many roots and poles")
        object.__setattr__(self, "q", q)

    @classmethod
    def from_roots(cls, roots=(), poles=(), q=1):
        return cls(FactoredSeries(roots=roots, poles=poles), q)

    @property
    def roots(self):
        return self.p_lambda.roots

    @property
    def poles(self):
        return self.p_lambda.poles

    def to_json(self):
        return {
            "roots": [fraction_to_json(r) for r in self.roots],
            "poles": [fraction_to_json(u) for u in self.poles],
            "q": fraction_to_json(self.q),
        }

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise ValueError("spec JSON must be an object")
        unknown = set(data) - {"roots", "poles", "q"}
        if unknown:
            raise ValueError(f"unknown spec keys: {sorted(unknown)}")
        for key in ("roots", "poles"):
            if not isinstance(data.get(key, []), list):
                raise ValueError(f"'{key}' must be an array")
        return cls.from_roots(data.get("roots", []), data.get("poles", []), data.get("q", "1"))


def lambda_series(spec, order):
    return expand(spec.p_lambda, order)


def s_series(spec, order):
    return dual_series(lambda_series(spec, order))


def specialization(spec, order):
    return Specialization.from_lambda_series(lambda_series(spec, order))


@dataclass(frozen=True)
class DimensionTable:
    """``m_lambda`` for every partition of weight at most ``max_weight``."""

    max_weight: int
    entries: dict = field(hash=False)

    def __getitem__(self, partition):
        return self.entries[Partition(partition)]

    def weight(self, n):
        return {lam: self.entries[lam] for lam in enumerate_partitions(n)}

    def support(self):
        return [lam for lam, m in self.entries.items() if m != 0]

    def to_json(self):
        return {
            "max_weight": self.max_weight,
            "entries": [{"partition": list(lam), "dim": _number_to_json(m)}
                        for lam, m in self.entries.items()],
        }


def _number_to_json(value):
    value = Fraction(value)
    return int(value) if value.denominator == 1 else fraction_to_json(value)


def _label(lam):
    return "m_(" + ",".join(map(str, lam)) + ")"


def _check_dimension(label, value):
    if value.denominator != 1:
        raise NonIntegralDimension(f"{label} = {value} is not an integer")
    if value < 0:
        raise NegativeDimension(f"{label} = {value} is negative")


def comodule_dims(spec, max_weight, strict=True):
    """Dimension table of the simple comodules up to ``max_weight``.

    With ``strict`` (the default) a non-integral or negative value raises,
    since no Hecke operator can produce it.  ``strict=False`` returns the raw
    rational Schur values.
    """
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    sp = specialization(spec, max(max_weight, 1))
    entries = {}
    for lam in partitions_up_to(max_weight):
        value = schur_value(sp, lam)
        if strict:
            _check_dimension(_label(lam), value)
            value = int(value)
        entries[lam] = value
    return DimensionTable(max_weight, entries)


def e_series_via_dims(spec, order, strict=True):
    """``e_n = sum over lambda of n of m_lambda**2``."""
    table = comodule_dims(spec, order, strict=strict)
    return TruncatedSeries(
        [sum(m * m for m in table.weight(n).values()) for n in range(order + 1)], order
    )


def e_series_via_star(spec, order):
    """``P_E = P_S * P_S`` in the lambda-ring, through power sums."""
    if order == 0:
        return TruncatedSeries.one(0)
    return lambda_product(s_series(spec, order), s_series(spec, order)).truncate(order)


def hecke_sum(a, b):
    """Spec of the Hecke sum; its Poincare series are the products of the summands'."""
    if a.q != b.q:
        raise MismatchedParameter(f"Hecke sum needs a common q, got {a.q} and {b.q}")
    return QuantumSpaceSpec(factored_multiply(a.p_lambda, b.p_lambda), a.q)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    passed: bool
    detail: str

    def to_json(self):
        return {"name": self.name, "verdict": "pass" if self.passed else "fail",
                "detail": self.detail}


@dataclass(frozen=True)
class Classification:
    kind: str
    rank: int = None
    super_rank: tuple = None
    reciprocal: bool = False
    integrality_ok: bool = True
    dim_v: Fraction = None
    bound_checks: tuple = ()
    extremal_closed_form: FactoredSeries = None
    p_sequence_ok: bool = True
    diagnostics: tuple = ()

    @property
    def hecke_plausible(self):
        """All necessary conditions hold; this is never a proof of realizability."""
        return (self.integrality_ok and self.p_sequence_ok and not self.diagnostics
                and all(c.passed for c in self.bound_checks))

    def to_json(self):
        return {
            "kind": self.kind,
            "rank": self.rank,
            "super_rank": list(self.super_rank) if self.super_rank else None,
            "reciprocal": self.reciprocal,
            "integrality_ok": self.integrality_ok,
            "dim_v": fraction_to_json(self.dim_v),
            "bound_checks": [c.to_json() for c in self.bound_checks],
            "extremal_closed_form": (self.extremal_closed_form.to_json()
                                     if self.extremal_closed_form else None),
            "p_sequence_ok": self.p_sequence_ok,
            "hecke_plausible": self.hecke_plausible,
            "diagnostics": list(self.diagnostics),
        }


def _inversion_closed(values):
    return sorted(values) == sorted(1 / v for v in values)


def _integrality_failures(lam_series, s, table):
    failures = []
    for label, values in (("lambda", lam_series.coeffs), ("s", s.coeffs)):
        for i, v in enumerate(values):
            try:
                _check_dimension(f"{label}_{i}", v)
            except (NonIntegralDimension, NegativeDimension) as err:
                failures.append(f"{err.code}: {err}")
                break
    for lam, v in table.entries.items():
        try:
            _check_dimension(_label(lam), v)
        except (NonIntegralDimension, NegativeDimension) as err:
            failures.append(f"{err.code}: {err}")
            break
    return failures


def classify(spec, max_weight):
    """Rank or super rank, evenness, reciprocity and the dimension bounds.

    Failed necessary conditions are reported as diagnostics, not raised.
    """
    m, n = len(spec.roots), len(spec.poles)
    order = max(max_weight, m, 1)
    lam_series = lambda_series(spec, order)
    s = dual_series(lam_series)
    table = comodule_dims(spec, max_weight, strict=False)
    dim_v = lam_series.coeffs[1]
    diagnostics = _integrality_failures(lam_series.truncate(max_weight or 1),
                                        s.truncate(max_weight or 1), table)
    integrality_ok = not diagnostics
    checks = []
    extremal = None
    prod_t = prod(spec.roots, start=Fraction(1))
    prod_u = prod(spec.poles, start=Fraction(1))

    if n == 0:
        r = m
        c = lam_series.coeffs
        reciprocal = all(c[k] == c[r - k] for k in range(r + 1))
        even = prod_t == 1 and reciprocal
        kind = "even" if even else "quasi-even"
        if prod_t == 1 and not reciprocal:
            diagnostics.append(
                "top exterior component has dimension 1 but the series is not reciprocal")
        if even:
            if dim_v >= 2:
                checks.append(BoundCheck("rank_at_least_2", r >= 2, f"r = {r}"))
            checks.append(BoundCheck("rank_at_most_dim_v", r <= dim_v,
                                     f"r = {r}, dim V = {dim_v}"))
            if r == dim_v:
                checks.append(BoundCheck("extremal_roots_all_one",
                                         all(t == 1 for t in spec.roots),
                                         "r = dim V forces every root to be 1"))
                extremal = FactoredSeries(poles=[1] * (r * r))
        rank, super_rank = r, None
    else:
        reciprocal = _inversion_closed(spec.roots) and _inversion_closed(spec.poles)
        odd_even = prod_t == 1 and prod_u == 1
        kind = "odd-even" if odd_even else "quasi-odd-even"
        if odd_even:
            checks.append(BoundCheck("super_rank_weight_at_most_dim_v", m + n <= dim_v,
                                     f"m + n = {m + n}, dim V = {dim_v}"))
            if m + n == dim_v:
                checks.append(BoundCheck(
                    "extremal_parameters_all_one",
                    all(t == 1 for t in spec.roots + spec.poles),
                    "m + n = dim V forces every root and pole to be 1"))
                extremal = FactoredSeries(roots=[1] * (2 * m * n), poles=[1] * (m * m + n * n))
        rank, super_rank = None, (m, n)

    p_report = check_p_sequence(lam_series, min(DEFAULT_MAX_ORDER, max(order, 1)), order)
    if not p_report.passed:
        diagnostics.append("lambda-series is not a P-sequence within the checked bounds")

    return Classification(
        kind=kind,
        rank=rank,
        super_rank=super_rank,
        reciprocal=reciprocal,
        integrality_ok=integrality_ok,
        dim_v=dim_v,
        bound_checks=tuple(checks),
        extremal_closed_form=extremal,
        p_sequence_ok=p_report.passed,
        diagnostics=tuple(diagnostics),
    )
