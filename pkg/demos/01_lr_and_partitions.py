"""Partitions and Littlewood-Richardson coefficients, the raw material.

Run:  python3 demos/01_lr_and_partitions.py
"""

from branchkit import (
    conjugate,
    double_columns,
    double_rows,
    lr_coeff,
    skew_expand,
    tensor_expand,
)

print("A partition is a weakly decreasing tuple; (3,1) has conjugate",
      conjugate((3, 1)))
print("Row doubling (2,1) ->", double_rows((2, 1)),
      "| column doubling (2,1) ->", double_columns((2, 1)))
print()

print("c^λ_{μν} counts lattice skew tableaux.  The classic first")
print("interesting value, λ=(3,2,1), μ=ν=(2,1):",
      lr_coeff((3, 2, 1), (2, 1), (2, 1)))
print()

print("s_(2,1) · s_(2,1) expands as:")
for lam, c in sorted(tensor_expand((2, 1), (2, 1)).items()):
    print(f"   {c} · s_{lam}")
print()

print("One skew shape yields every coefficient against a fixed inner")
print("partition at once; (3,2,1)/(2,1) expands over contents as:")
for nu, c in sorted(skew_expand((3, 2, 1), (2, 1)).items()):
    print(f"   {nu}: {c}")
print()

print("Pieri's rule falls out: tensoring with a single row adds boxes,")
print("no two in a column.  (2,2) ⊗ (3):")
for lam, c in sorted(tensor_expand((2, 2), (3,)).items()):
    print(f"   {lam}: {c}")
