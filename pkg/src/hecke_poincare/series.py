"""Truncated power series over the rationals and the lambda-ring calculus.

Every series carries its truncation order ``N``: it is known modulo
``t**(N+1)``.  Binary operations on series of different orders work at the
smaller order.  Nothing here ever touches floating point.

Series with constant term 1 form a ring in which ordinary multiplication plays
the role of addition and :func:`lambda_product` is the multiplication.  The
product is computed by transporting through power sums: the logarithmic
derivative turns a series into the generating function of its power sums,
where the product becomes the coefficientwise (Hadamard) product.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .errors import ZeroConstantTerm

logger = logging.getLogger(__name__)


def as_fraction(value):
    """Parse an int, Fraction or a ``"p/q"`` string into a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    if isinstance(value, str):
        value = value.strip()
    return Fraction(value)


def fraction_to_json(value):
    # Fraction.__str__ is already lowest terms with a positive denominator
    return str(Fraction(value))


@dataclass(frozen=True, init=False)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of a power series known mod ``t**(N+1)``."""

    coeffs: tuple

    def __init__(self, coeffs, order=None):
        coeffs = [as_fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def coefficient(self, k):
        """Coefficient of ``t**k``; negative indices read as 0."""
        if k < 0:
            return Fraction(0)
        if k > self.order:
            from .errors import InsufficientPrecision

            raise InsufficientPrecision(
                f"coefficient {k} requested from a series known to order {self.order}"
            )
        return self.coeffs[k]

    def truncate(self, order):
        if order > self.order:
            from .errors import InsufficientPrecision

            raise InsufficientPrecision(
                f"cannot raise truncation order from {self.order} to {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __mul__(self, other):
        return multiply(self, other)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __add__(self, other):
        n = _common_order(self, other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __sub__(self, other):
        return self + (-other)

    def reflect(self):
        """The series with ``t`` replaced by ``-t``."""
        return TruncatedSeries([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def to_json(self):
        return {"order": self.order, "coeffs": [fraction_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict) or "coeffs" not in data:
            raise ValueError("series JSON must be an object with a 'coeffs' array")
        coeffs = data["coeffs"]
        if not isinstance(coeffs, list) or not coeffs:
            raise ValueError("'coeffs' must be a non-empty array")
        order = data.get("order", len(coeffs) - 1)
        if not isinstance(order, int) or order != len(coeffs) - 1:
            raise ValueError("'order' must equal len(coeffs) - 1")
        return cls(coeffs, order)


def _common_order(a, b):
    if a.order != b.order:
        logger.debug("truncating to order %d (orders %d and %d)",
                     min(a.order, b.order), a.order, b.order)
    return min(a.order, b.order)


def _require_unit(p):
    if p.coeffs[0] == 0:
        raise ZeroConstantTerm("series has zero constant term")


def multiply(a, b):
    """Cauchy product, truncated at the smaller of the two orders."""
    n = _common_order(a, b)
    x, y = a.coeffs, b.coeffs
    return TruncatedSeries(
        [sum(x[i] * y[k - i] for i in range(k + 1) if x[i] and y[k - i]) for k in range(n + 1)],
        n,
    )


def hadamard(a, b):
    """Coefficientwise product."""
    n = _common_order(a, b)
    return TruncatedSeries([x * y for x, y in zip(a.coeffs[: n + 1], b.coeffs)], n)


def invert(a):
    """Multiplicative inverse mod ``t**(N+1)``; raises ZeroConstantTerm if c_0 = 0."""
    _require_unit(a)
    c = a.coeffs
    inv0 = 1 / c[0]
    out = [inv0]
    for k in range(1, len(c)):
        out.append(-inv0 * sum(c[i] * out[k - i] for i in range(1, k + 1) if c[i]))
    return TruncatedSeries(out, a.order)


def dual_series(p):
    """The series ``q`` with ``p(t) q(-t) = 1``; an involution."""
    _require_unit(p)
    return invert(p.reflect())


def derivative(p):
    if p.order < 1:
        raise ValueError("derivative needs a series of order >= 1")
    return TruncatedSeries([k * p.coeffs[k] for k in range(1, p.order + 1)], p.order - 1)


def integral(p):
    """Antiderivative vanishing at 0; the order goes up by one."""
    return TruncatedSeries([0] + [c / (k + 1) for k, c in enumerate(p.coeffs)], p.order + 1)


def log_derivative(p):
    """``p'/p`` mod ``t**N``; coefficient ``r-1`` is the r-th power sum."""
    _require_unit(p)
    return multiply(derivative(p), invert(p).truncate(p.order - 1))


def exp_integral(p):
    """``exp(integral_0^t p)`` mod ``t**(N+2)``; inverse of :func:`log_derivative`."""
    # g' = g p, solved coefficientwise: (k+1) g_{k+1} = sum_j p_j g_{k-j}
    c = p.coeffs
    g = [Fraction(1)]
    for k in range(len(c)):
        g.append(sum((c[j] * g[k - j] for j in range(k + 1) if c[j]), Fraction(0)) / (k + 1))
    return TruncatedSeries(g, p.order + 1)


def lambda_product(a, b):
    """Lambda-ring product of two series with constant term 1.

    Power sums multiply: ``(1-xt)^-1 * (1-yt)^-1 = (1-xyt)^-1``.
    """
    _require_unit(a)
    _require_unit(b)
    if a.coeffs[0] != 1 or b.coeffs[0] != 1:
        raise ValueError("lambda_product needs constant term 1")
    if min(a.order, b.order) == 0:
        return TruncatedSeries.one(0)
    return exp_integral(hadamard(log_derivative(a), log_derivative(b)))


@dataclass(frozen=True)
class FactoredSeries:
    """``exp(gamma t) prod(1 + r t) / prod(1 - u t)`` over finite root/pole multisets.

    ``root_families`` and ``pole_families`` hold ``(scale, ratio)`` pairs with
    ``0 < ratio < 1``, each standing for the infinite geometric family
    ``scale, scale*ratio, scale*ratio**2, ...`` of roots or poles.
    """

    roots: tuple = ()
    poles: tuple = ()
    gamma: Fraction = Fraction(0)
    root_families: tuple = field(default=())
    pole_families: tuple = field(default=())

    def __post_init__(self):
        roots = tuple(sorted(as_fraction(r) for r in self.roots))
        poles = tuple(sorted(as_fraction(u) for u in self.poles))
        gamma = as_fraction(self.gamma)
        if any(r <= 0 for r in roots) or any(u <= 0 for u in poles):
            raise ValueError("roots and poles must be strictly positive")
        if gamma < 0:
            raise ValueError("gamma must be nonnegative")
        families = []
        for fams in (self.root_families, self.pole_families):
            fams = tuple(sorted((as_fraction(s), as_fraction(q)) for s, q in fams))
            if any(s <= 0 or not 0 < q < 1 for s, q in fams):
                raise ValueError("a family needs scale > 0 and 0 < ratio < 1")
            families.append(fams)
        object.__setattr__(self, "roots", roots)
        object.__setattr__(self, "poles", poles)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "root_families", families[0])
        object.__setattr__(self, "pole_families", families[1])

    @property
    def is_finite(self):
        return not self.root_families and not self.pole_families

    def to_json(self):
        data = {
            "roots": [fraction_to_json(r) for r in self.roots],
            "poles": [fraction_to_json(u) for u in self.poles],
            "gamma": fraction_to_json(self.gamma),
        }
        for key, fams in (("root_families", self.root_families),
                          ("pole_families", self.pole_families)):
            if fams:
                data[key] = [{"scale": fraction_to_json(s), "ratio": fraction_to_json(q)}
                             for s, q in fams]
        return data

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, dict):
            raise ValueError("factored series JSON must be an object")
        families = {}
        for key in ("root_families", "pole_families"):
            families[key] = [(f["scale"], f["ratio"]) for f in data.get(key, [])]
        return cls(
            roots=data.get("roots", []),
            poles=data.get("poles", []),
            gamma=data.get("gamma", "0"),
            **families,
        )


def _euler_coefficients(scale, ratio, order, roots):
    # q-binomial theorem: prod_j (1 + s q^j t) and prod_j (1 - s q^j t)^-1
    out = [Fraction(1)]
    denom = Fraction(1)
    for k in range(1, order + 1):
        denom *= 1 - ratio ** k
        term = scale ** k / denom
        if roots:
            term *= ratio ** (k * (k - 1) // 2)
        out.append(term)
    return TruncatedSeries(out, order)


def expand(f, order):
    """Coefficients of the factored form mod ``t**(order+1)``.

    >>> expand(FactoredSeries(roots=[1], poles=[1]), 3).coeffs
    (Fraction(1, 1), Fraction(2, 1), Fraction(2, 1), Fraction(2, 1))
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = [Fraction(0)] * (order + 1)
    c[0] = Fraction(1)
    for r in f.roots:
        for k in range(order, 0, -1):
            c[k] += r * c[k - 1]
    for u in f.poles:
        for k in range(1, order + 1):
            c[k] += u * c[k - 1]
    result = TruncatedSeries(c, order)
    if f.gamma:
        result = multiply(result, TruncatedSeries(
            [f.gamma ** k / factorial(k) for k in range(order + 1)], order))
    for s, q in f.root_families:
        result = multiply(result, _euler_coefficients(s, q, order, roots=True))
    for s, q in f.pole_families:
        result = multiply(result, _euler_coefficients(s, q, order, roots=False))
    return result


def factored_multiply(a, b):
    """Product of factored forms: multiset unions and summed gamma."""
    return FactoredSeries(
        roots=a.roots + b.roots,
        poles=a.poles + b.poles,
        gamma=a.gamma + b.gamma,
        root_families=a.root_families + b.root_families,
        pole_families=a.pole_families + b.pole_families,
    )
