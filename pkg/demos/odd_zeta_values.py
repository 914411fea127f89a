"""Forms in odd zeta values: the F_{k,n} family, its decay rate, and the
r=3, q=13 direction that forces an irrational value among zeta(5..11).

Run: python3 demos/odd_zeta_values.py
"""

import mpmath

from zetaforms.oddzeta import THEOREM3_ETA, F_kn, asymptotic_slope, measure_odd, phi_x

print("F_{k,1}:")
for k in (3, 5, 7, 9):
    print(f"  k={k}: {F_kn(k, 1).pretty()}")

print("\nlog|F_{5,n}|/n approaches its limit slowly:")
for n in (50, 100, 200, 400):
    print(f"  n={n:4d}: {mpmath.nstr(asymptotic_slope(5, n), 10)}")

eta = THEOREM3_ETA
print(f"\nDirection {eta}")
phi = phi_x(eta)
print(f"phi(x) = min_y phi0(x, y) has {len(phi.values)} intervals, values {sorted(phi.range)}")
r = measure_odd(eta)
d = r.as_dict(12)
print(f"m = {d['m']} (leading term {d['lead']})")
print(f"tau0 = {d['tau0']['re']} + {d['tau0']['im']} i")
print(f"C0 = {d['C0']}  >  C2 = {d['C2']}")
print(f"verdict: {d['verdict']} {', '.join(d['zetas'])}")
