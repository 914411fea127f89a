"""Walk through the zeta(3) irrationality-measure bound step by step.

Run: python3 demos/zeta3_record.py
"""

import mpmath

from zetaforms.forms import apery_form, check_integrality_z3, linear_form_z3
from zetaforms.groups import c_from_direction, orbit_M
from zetaforms.measures import measure_z3, phi_function
from zetaforms.presets import RV_ZETA3

mpmath.mp.dps = 30

print("Apery's forms 2A_n zeta(3) - B_n:")
for n in range(1, 5):
    form = apery_form(n)
    print(f"  n={n}: {form.pretty():40s} value {mpmath.nstr(form.evaluate(30), 8)}")

d = RV_ZETA3
print(f"\nDirection {d}; at n=1 the parameters are {d.params(1)}")
form = linear_form_z3(d.params(1))
rep = check_integrality_z3(d.params(1), form)
print(f"  form at n=1 has {len(str(form[3].numerator))}-digit zeta(3) coefficient, integrality: {rep.passed}")

c = c_from_direction(d)
print("\nc-matrix rows:", c.rows())
orbit = orbit_M(c)
print(f"orbit: {len(orbit.elements)} matrices, {len(orbit.collections)} normalized directions")
phi = phi_function(c, orbit)
print(f"phi(x) takes values {sorted(phi.range)} on {len(phi.values)} intervals")

r = measure_z3(d)
for key in ("tau0", "tau1", "C0", "C1", "psi_integral", "inv_square_integral", "C2", "mu_bound"):
    print(f"  {key:20s} {r.as_dict(12)[key]}")
