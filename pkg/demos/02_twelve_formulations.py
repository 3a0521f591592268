"""The twelve equivalent reformulations of the Penrose system.

Each formulation trades the four defining equations for one or two
involution-flavored identities (for example ``a = x* a* a``).  For the
true pseudoinverse all twelve hold; perturb the candidate and every
one of them fails.

Run: python3 demos/02_twelve_formulations.py
"""

from mpinv import (
    FormulationId,
    formulation_holds,
    formulation_residual,
    generate_regular,
    pinv_matrix,
)

a = generate_regular(5, 3, 2, sv_low=0.5, sv_high=2.0, seed=20240115)
x = pinv_matrix(a)
x_perturbed = (1.0 + 1e-3) * x

print(f"{'formulation':<10} {'exact pinv':>12} {'perturbed (1+1e-3)x':>22}")
for fid in FormulationId:
    ok = formulation_holds(a, x, fid)
    res_bad = formulation_residual(a, x_perturbed, fid)
    print(f"{fid.value:<10} {str(ok):>12} {'fails at ' + format(res_bad, '.2e'):>22}")

assert all(formulation_holds(a, x, fid) for fid in FormulationId)
assert not any(formulation_holds(a, x_perturbed, fid) for fid in FormulationId)
print("\nall twelve hold for a^+ and all twelve reject the perturbed candidate")
