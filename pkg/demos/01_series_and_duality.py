"""
Truncated series, duality and the lambda-ring square
=====================================================

Everything is exact: coefficients are Fractions and every series knows
how far it is valid.
"""

from fractions import Fraction

from hecke_poincare import FactoredSeries, TruncatedSeries, dual_series, expand, lambda_product

# the exterior algebra of a 2-dimensional space: (1 + t)^2
p = expand(FactoredSeries(roots=[1, 1]), 6)
print("P_Lambda :", [str(c) for c in p.coeffs])

# its dual 1/p(-t) is the symmetric algebra series (1 - t)^-2
q = dual_series(p)
print("P_S      :", [str(c) for c in q.coeffs])
assert dual_series(q) == p

# squaring in the lambda-ring gives (1 - t)^-4, the series of 2x2 matrices
print("P_S * P_S:", [str(c) for c in lambda_product(q, q).coeffs])

# rational data works the same way
r = TruncatedSeries([1, Fraction(5, 2), 1, 0, 0])
print("dual of 1 + 5/2 t + t^2:", [str(c) for c in dual_series(r).coeffs])
