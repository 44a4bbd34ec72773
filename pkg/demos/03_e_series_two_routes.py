"""
The bialgebra series, computed twice
====================================

Route one sums squared comodule dimensions weight by weight.  Route two
squares the symmetric series in the lambda-ring.  They share no code
beyond the series arithmetic, so agreement is a real check.
"""

from hecke_poincare import QuantumSpaceSpec, e_series_via_dims, e_series_via_star

specs = {
    "GL(2)": QuantumSpaceSpec.from_roots([1, 1]),
    "GL(3)": QuantumSpaceSpec.from_roots([1, 1, 1]),
    "GL(1|1)": QuantumSpaceSpec.from_roots([1], [1]),
    "roots 2, 1/2": QuantumSpaceSpec.from_roots([2, "1/2"]),
}

for name, spec in specs.items():
    by_dims = e_series_via_dims(spec, 6, strict=False)
    by_star = e_series_via_star(spec, 6)
    print(f"{name:13} {[str(c) for c in by_star.coeffs]}  agree={by_dims == by_star}")
