"""
Bounded total positivity
========================

The exterior series of a Hecke operator must be a Polya frequency
sequence.  We check every Toeplitz minor up to a given order and index,
and a failure always comes with the offending minor.
"""

from hecke_poincare import FactoredSeries, check_p_sequence, check_pp_sequence, expand

# an Edrei form passes
f = FactoredSeries(roots=[1, "1/3"], poles=["1/2"], gamma="1/2")
print("Edrei form   :", check_p_sequence(expand(f, 10), 4, 10).to_json())

# 1 + t + t^2 has complex roots, and a 3x3 minor shows it
print("1 + t + t^2  :", check_p_sequence([1, 1, 1, 0, 0, 0, 0], 3, 6).to_json())

# strict positivity of contained minors needs an infinite factor
print("exp(t)       :", check_pp_sequence(FactoredSeries(gamma=1), 3, 6).certified)
print("(1 + t)^2    :", check_pp_sequence(FactoredSeries(roots=[1, 1]), 3, 6).to_json())
