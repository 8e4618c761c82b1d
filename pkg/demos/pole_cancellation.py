"""
Watching a double pole cancel
=============================

At m = n = 2, sigma = 1 the shuffle 3412 alone has a double pole at t = 0.
Summed with 3142 over its orbit, the t^-2 terms cancel and a simple pole is
left.  We see this symbolically (Laurent expansion over a free coefficient
ring) and numerically (completed Riemann zeta in place of L).
"""

from speh_poles import Shuffle, sigma_context
from speh_poles.analysis import normalization_factor, orbit_expr
from speh_poles.laurent import expand, leading_coefficient, pole_order, render_poly
from speh_poles.lfunc import render, render_factored
from speh_poles.orbit import orbit_containing
from speh_poles.zeta import estimate_order, eval_expr

ctx = sigma_context(2, 2, 1)
w = Shuffle.parse(2, 2, "3412")
r = normalization_factor(w, ctx)
print("raw      ", render(r.raw))
print("canonical", render(r.canonical))
print("order    ", pole_order(r.canonical))

orbit = orbit_containing(w, ctx)
R = orbit_expr(orbit, ctx)
print()
print("orbit", [str(x) for x in orbit.members])
print("sum  ", render_factored(R))
print("order", pole_order(R), " leading", render_poly(leading_coefficient(R)))

###############################################################################
# First few Laurent coefficients.  R is the residue of L at 1, a[k,j] the
# Taylor data at k, C = c^(1/2) and Lc = log c.

s = expand(R, J=1)
for k in range(s.min_order, s.trunc_order):
    print(f"t^{k}:", render_poly(s.coeff(k)))

###############################################################################
# Numerically the orbit sum grows like 1/t, the lone member like 1/t^2.

for t in ("1e-2", "1e-3", "1e-4"):
    print(t, float(eval_expr(r.canonical, t)), float(eval_expr(R, t)))
print("estimated orders:", estimate_order(r.canonical), estimate_order(R))
