"""
Dimensions of simple comodules
==============================

A quantum space is given by the roots and poles of its exterior series.
The simple comodules are indexed by partitions and their dimensions are
Schur values at that data.
"""

from hecke_poincare import QuantumSpaceSpec, comodule_dims
from hecke_poincare.errors import NonIntegralDimension

# classical GL(2): the support is partitions with at most two rows
table = comodule_dims(QuantumSpaceSpec.from_roots([1, 1]), 4)
for lam, m in table.entries.items():
    print(f"  {str(tuple(lam)):14} {m}")

# the supersymmetric (1|1) case lives on the hook: (2, 2) drops out
super11 = comodule_dims(QuantumSpaceSpec.from_roots([1], [1]), 4)
print("(1|1) support:", [tuple(lam) for lam in super11.support()])

# roots 1/2 and 2 give dim V = 5/2, which no operator can realize
try:
    comodule_dims(QuantumSpaceSpec.from_roots(["1/2", "2"]), 2)
except NonIntegralDimension as err:
    print("rejected:", err)
