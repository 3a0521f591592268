"""When does (a b)^+ equal b^+ a^+?

The reverse order law is automatic for ordinary inverses but fails for
pseudoinverses in general.  The catalog evaluated here contains the
classical matrix conditions, the commutator/projection conditions
built from p = b b^+, q = a^+ (a^+)*, r = b b*, s = a^+ a, and the
strictly weaker generalized-inverse criterion.

Run: python3 demos/03_reverse_order_law.py
"""

import numpy as np

from mpinv import (
    MBEKHTA_CONDITIONS,
    MP_ROL_CONDITIONS,
    full_report,
    mbekhta_gap_pair,
    pinv_matrix,
)


def show(tag, a, b):
    report = full_report(a, b)
    rol = report.verdicts["ROL_DIRECT"]
    agree = all(report.verdicts[c.value] == rol for c in MP_ROL_CONDITIONS)
    trio = {report.verdicts[c.value] for c in MBEKHTA_CONDITIONS}
    print(f"\n--- {tag} ---")
    print("  (ab)^+ = b^+ a^+ :", rol)
    print("  all 16 Moore-Penrose conditions agree:", agree)
    print("  generalized-inverse trio:", trio)
    return report


# A pair where the law holds: ab is the unit shift.
a1 = np.diag([1.0, 0.0]).astype(complex)
b1 = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
show("holding pair", a1, b1)

# A pair where it fails: the two sides differ by a factor of two.
a2 = np.diag([1.0, 0.0]).astype(complex)
b2 = np.array([[1.0, 0.0], [1.0, 0.0]], dtype=complex)
show("failing pair", a2, b2)
print("  (ab)^+      =", pinv_matrix(a2 @ b2).real.round(3).tolist())
print("  b^+ a^+     =", (pinv_matrix(b2) @ pinv_matrix(a2)).real.round(3).tolist())

# The gap the catalog exists to expose: b^+ a^+ can be a perfectly
# good generalized inverse of ab (ab x ab = ab) while the reverse
# order law for the pseudoinverse still fails.
a3, b3 = mbekhta_gap_pair(4, seed=99)
report = show("generalized-inverse gap witness", a3, b3)
assert report.verdicts["MBEKHTA_GI"] and not report.verdicts["ROL_DIRECT"]
print("  -> weaker criterion true, pseudoinverse reverse order false")
