"""
Three statements that need a small correction
=============================================

Each check below fails as literally written and holds after a one-line fix.
"""

from speh_poles import Shuffle, sigma_context
from speh_poles.analysis import bare_products, check_mirror, check_mirror_without_t, mirror_exponent
from speh_poles.lfunc import render
from speh_poles.orbit import compute_orbits, literal_base_candidates, orbit_containing, residue_weyl_elements

###############################################################################
# 1. Base points.  Requiring w0(i) < w0(partner) for *every* pair has no
# solution when a dead pair sits inverted: here 1 and 3 are paired but never
# move.  Restricting to living pairs gives exactly one member per orbit.

ctx = sigma_context(1, 3, 2)
o = orbit_containing(Shuffle.parse(1, 3, "2341"), ctx)
print("members", [str(w) for w in o.members], "living", sorted(o.living))
print("all-pairs candidates", literal_base_candidates(o.members, ctx), "-> base", o.base_point)

###############################################################################
# 2. Mirror identity.  Reflecting each factor L(k+t) = c^(k-1/2+t) L(1-k-t)
# carries a c^t, so the exponent picks up |K| t on top of the constant E.

ctx = sigma_context(2, 2, 2)
o = compute_orbits(ctx)[0]
block = o.blocks[0]
A, B = bare_products(o.base_point, ctx, block[0])
print("A'(t) =", render(A), "  B'(t) =", render(B), "  E =", mirror_exponent(o.base_point, ctx, block[0]))
print("constant exponent:", check_mirror_without_t(o.base_point, ctx, block),
      "  with |K| t:", check_mirror(o.base_point, ctx, block))

###############################################################################
# 3. Weyl elements.  With w1' = (m+n-sigma..1; m+n-sigma+1..m+n) the relation
# breaks from sigma = 2 on; reversing its second block repairs it, with
# products read as "apply the left factor first".

for sigma in range(3):
    rel = residue_weyl_elements(sigma_context(3, 3, sigma))
    print(sigma, "as printed:", rel.displayed_holds, " reversed block:", rel.relation_holds, rel.convention)
