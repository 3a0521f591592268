"""Partial isometries, the conorm, and the classification report.

A partial isometry satisfies a^+ = a*; metrically that is the same as
conorm(a) = ||a|| = 1.  A matrix is normal and equal to its own
pseudoinverse exactly when it is a hermitian partial isometry.

Run: python3 demos/05_partial_isometries_conorm.py
"""

import numpy as np

from mpinv import (
    classify,
    conorm,
    matrix_with_singular_values,
    norm_conorm_check,
    normal_mph_check,
    random_hermitian_partial_isometry,
    random_partial_isometry,
)

# Conorm = smallest nonzero singular value = 1 / ||a^+||.
a = matrix_with_singular_values([5.0, 3.0, 0.5], (6, 4), seed=3)
rep = classify(a)
print("prescribed singular values [5, 3, 0.5]:")
print(f"  conorm {conorm(a):.3f}  op_norm {rep.op_norm:.3f}  pinv_norm {rep.pinv_norm:.3f}")
print(f"  conorm * pinv_norm = {rep.conorm * rep.pinv_norm:.12f}")

# A random partial isometry: all singular values are 0 or 1.
p = random_partial_isometry(5, 3, seed=7)
check = norm_conorm_check(p)
print("\nrandom rank-3 partial isometry:")
print("  a^+ = a* :", check.verdicts["partial_isometry"])
print("  conorm = ||a|| = 1 :", check.verdicts["unit_norm_and_conorm"])
print("  the two characterizations agree:", check.verdicts["consistent"])

# The three matrix families around the normal/MPH characterization.
print("\nnormal MP-hermitian  <=>  hermitian partial isometry")
h = random_hermitian_partial_isometry(4, (2, 1, 1), seed=11)
nonnormal = np.array([[1.0, 1.0], [0.0, -1.0]], dtype=complex)
shift = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
for tag, matrix in (
    ("hermitian partial isometry", h),
    ("MP-hermitian but non-normal", nonnormal),
    ("partial isometry but non-hermitian", shift),
):
    r = normal_mph_check(matrix)
    print(
        f"  {tag:<36} lhs={r.verdicts['normal_mp_hermitian']} "
        f"rhs={r.verdicts['hermitian_partial_isometry']} "
        f"consistent={r.verdicts['consistent']}"
    )

# Full classification of a single matrix at a glance.
print("\nclassify(diag(1, -1, 0)):")
print(" ", classify(np.diag([1.0, -1.0, 0.0]).astype(complex)).as_dict())
