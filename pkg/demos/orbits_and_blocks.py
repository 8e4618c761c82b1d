"""
Orbits of shuffles under a fixed overlap
========================================

Two shuffles land in the same orbit when they produce the same exponent
profile.  Each orbit is generated from its base point by swapping living
green/red blocks, so its size is a power of two.
"""

from speh_poles import compute_orbits, head_tail, sigma_context
from speh_poles.orbit import exponent_profile, format_profile

# m = n = 2: no pairs at sigma=0, one pair at sigma=1, two at sigma=2
for sigma in range(3):
    ctx = sigma_context(2, 2, sigma)
    print(f"sigma={sigma}  s={ctx.s}  case {ctx.case}  pairs {ctx.pairs()}")
    for o in compute_orbits(ctx):
        names = ",".join(str(w) for w in o.members)
        print(f"   {names:<22} base {o.base_point}  blocks {list(o.blocks)}")
    print()

###############################################################################
# The largest reference example: m = n = 3 at full overlap.

ctx = sigma_context(3, 3, 3)
for o in compute_orbits(ctx):
    print(o.size, o.base_point, format_profile(exponent_profile(o.base_point, ctx)))

###############################################################################
# Dead labels never move.  The head and tail procedures predict them from the
# base point alone; ``head_tail`` raises if the prediction is off.

ctx = sigma_context(4, 3, 2)
for o in [o for o in compute_orbits(ctx) if o.rank][:6]:
    rep = head_tail(o.base_point, ctx, o.living)
    print(o.base_point, "dead", sorted(rep.dead), "head", rep.head_kind or "-",
          [sorted(s) for s in rep.head_sets], "tail", rep.tail_kind or "-",
          [sorted(s) for s in rep.tail_sets])
