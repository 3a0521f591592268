"""Matrices that equal their own pseudoinverse.

``a^+ = a`` happens exactly when a = a^3 with a^2 hermitian: the
matrix kills its null space and acts as an involution on its column
space.  The decomposition below recovers that structure explicitly.

Run: python3 demos/04_mp_hermitian_structure.py
"""

import numpy as np

from mpinv import (
    algebraic_mph_check,
    generate_mp_hermitian,
    is_mp_hermitian,
    mph_decompose,
    mph_subspace_check,
    pinv_matrix,
)

# Hand-picked example: not hermitian, not normal, yet a^+ = a.
a = np.array([[1.0, 1.0], [0.0, -1.0]], dtype=complex)
print("a =", a.real.tolist())
print("a^+ =", pinv_matrix(a).real.round(12).tolist())
print("is_mp_hermitian:", is_mp_hermitian(a))
print("algebraic route (a = a^3, a^2 hermitian):", algebraic_mph_check(a))

# A seeded fixture: dimension 6, rank 3.
b = generate_mp_hermitian(6, 3, seed=42)
print("\ngenerated 6x6 fixture, rank 3")
print("is_mp_hermitian:", is_mp_hermitian(b))

report = mph_subspace_check(b)
print("subspace characterization verdicts:")
for name, verdict in report.verdicts.items():
    print(f"  {name}: {verdict}")

dec = mph_decompose(b)
print("\ndecomposition: null dim", dec.h1.dim, "| range dim", dec.h2.dim)
print("t2 @ t2 = I residual:", f"{dec.involution_residual:.3e}")
print("reconstruction residual:", f"{dec.reconstruction_residual:.3e}")

# Closure properties: powers and adjoints stay in the class.
powers_ok = all(is_mp_hermitian(np.linalg.matrix_power(b, k)) for k in (2, 3, 4, 5))
print("\npowers 2..5 remain MP-hermitian:", powers_ok)
print("adjoint remains MP-hermitian:", is_mp_hermitian(b.conj().T))
