"""
Rank, super rank and the dimension bounds
=========================================
"""

import json

from hecke_poincare import QuantumSpaceSpec, classify, hecke_sum, lambda_series

for roots, poles in [([1, 1], []), ([1], [1]), ([2, 2, "1/4"], [])]:
    spec = QuantumSpaceSpec.from_roots(roots, poles)
    c = classify(spec, 4)
    print(f"roots={roots} poles={poles}: {c.kind}, plausible={c.hecke_plausible}")
    for check in c.bound_checks:
        print(f"    {check.name}: {'ok' if check.passed else 'FAILED'} ({check.detail})")
    for line in c.diagnostics:
        print(f"    ! {line}")
    if c.extremal_closed_form:
        print("    extremal P_E:", json.dumps(c.extremal_closed_form.to_json()))

# Hecke sums multiply the series: GL(1) + GL(1|1)
total = hecke_sum(QuantumSpaceSpec.from_roots([1]), QuantumSpaceSpec.from_roots([1], [1]))
print("Hecke sum:", total.to_json(), [str(c) for c in lambda_series(total, 4).coeffs])
