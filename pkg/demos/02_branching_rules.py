"""The ten stable branching rules in action.

Run:  python3 demos/02_branching_rules.py
"""

from branchkit import (
    GLLabel,
    branch_decompose,
    branching_multiplicity,
    littlewood_restriction,
    query,
)
from branchkit.errors import StableRangeViolation

E = ()

print("Tensor products (diagonal pairs).  Over Sp(8), V(2,1) ⊗ V(1,1):")
for lam, c in sorted(branch_decompose("sp-diag", ((2, 1), (1, 1)), (4,)).items()):
    print(f"   {c} · V{lam}")
print()

print("Direct sum: the traceless symmetric square of C^10 under O(5)×O(5):")
for (mu, nu), c in sorted(branch_decompose("o-sum", (2,), (5, 5)).items()):
    print(f"   {c} · E{mu} ⊠ E{nu}")
print()

print("Polarization: Λ²C^12 minus nothing — the O(12) module E(1,1) — as")
print("a GL(6) module (C^12 = C^6 ⊕ (C^6)*):")
for mu, c in sorted(branch_decompose("gl-in-o", (1, 1), (6,)).items()):
    print(f"   {c} · F{mu.plus}/{mu.minus}")
print()

print("Bilinear form: S²C^6 under O(6) contains the invariant form once:")
for mu, c in sorted(branch_decompose("o-in-gl", GLLabel((2,), ()), (6,)).items()):
    print(f"   {c} · E{mu}")
print()

print("Classical restriction multiplicities are the bilinear rules with")
print("no dual part.  [F^(4,2) of GL(8) : E^(2) of O(8)] =",
      littlewood_restriction((4, 2), (2,), "O", 8))
print()

print("Outside the stable range the formulas are refused:")
try:
    branching_multiplicity(query("o-diag", (3,), (1,), [(1,), (1,)]))
except StableRangeViolation as exc:
    print("   ", exc)
