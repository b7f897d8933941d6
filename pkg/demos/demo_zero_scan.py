"""Hunting critical-line zeros with two independent routes.

The scan watches both components of the line indicator; a bracket needs a
component sign change *and* a tenfold dip of |indicator| under its local
median (one component alone vanishes on harmless nodal curves).  Brackets
are bisected by the integral route (paired quadrature of F) and by the
oracle route (accelerated alternating series), whose disagreement exposes
the conditioning wall of the integral representation: |gamma(1/2 + ib)|
shrinks like e^(-pi b/2), so past b ~ 20 the quadrature noise floor eats
into the ordinate resolution.
"""

from etazeros import scan_critical_line
from etazeros.zerofinder import find_zeros, gamma_modulus_critical

brackets = scan_critical_line(10.0, 30.0, 0.25, method="oracle")
print("oracle-scan brackets on [10, 30]:")
for br in brackets:
    print(f"  [{br.b_lo:.2f}, {br.b_hi:.2f}]  dip {br.dip:.3e} vs "
          f"median {br.median:.2f}")

zeros, _ = find_zeros(10.0, 30.0, 0.25)
print("\nrefined zeros (oracle route) and the integral route next to them:")
for z in zeros:
    gap = "n/a" if z["route_gap"] is None else f"{z['route_gap']:.2e}"
    print(f"  b* = {z['b_star']:.9f}   |F| = {z['residual']:.1e}   "
          f"integral route: {z['b_star_integral']:.9f}  (gap {gap})")

print("\nwhy the integral route blurs with height: |gamma(1/2+ib)| decay")
for b in (14.0, 21.0, 25.0, 30.0):
    print(f"  b={b:5.1f}:  |gamma| = {gamma_modulus_critical(b):.3e}   "
          f"quadrature noise ~ 1e-18 -> ordinate resolution ~ "
          f"{1e-18 / (gamma_modulus_critical(b) * 4):.1e}")
