"""Pseudoinverse basics: the four defining equations and their residuals.

Run: python3 demos/01_pseudoinverse_basics.py
"""

import numpy as np

from mpinv import adjoint, involution_laws_check, penrose_residuals, pinv

# A rank-deficient rectangular matrix.
a = np.array(
    [
        [2.0, 0.0, 1.0 + 1.0j],
        [0.0, 0.0, 0.0],
        [4.0, 0.0, 2.0 + 2.0j],
        [0.0, 3.0, 0.0],
    ],
    dtype=complex,
)

result = pinv(a)
print("shape of a:", a.shape, "-> shape of a^+:", result.pinv.shape)
print("numerical rank:", result.rank)

# The four defining equations are certified at construction time; the
# residuals tell you how well each one holds.
res = result.residuals
print("\nPenrose residuals (relative):")
print(f"  a x a = a        -> {res.r1:.3e}")
print(f"  x a x = x        -> {res.r2:.3e}")
print(f"  (a x)* = a x     -> {res.r3:.3e}")
print(f"  (x a)* = x a     -> {res.r4:.3e}")

# A wrong candidate is immediately visible in the residuals.
wrong = adjoint(a)  # the adjoint is NOT the pseudoinverse of this a
bad = penrose_residuals(a, wrong)
print("\nresiduals for the adjoint as a (wrong) candidate:")
print(f"  max residual -> {bad.max():.3e}")

# Two involution-like laws: (a*)^+ = (a^+)* and (a^+)^+ = a.
report = involution_laws_check(a)
print("\ninvolution laws:")
for name, verdict in report.verdicts.items():
    print(f"  {name}: {verdict} (residual {report.residuals[name]:.3e})")
