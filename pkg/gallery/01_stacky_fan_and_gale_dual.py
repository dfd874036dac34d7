"""
The p-th stacky Hirzebruch surface as a quotient
================================================

Build the fan of F_p, mark the ray at infinity with multiplicity p and
recover the Cox-style quotient from the Gale dual.
"""
from itertools import permutations

from stacky_framed import gale_dual, is_gale_dual_weights, quotient_presentation, root_stacky_fan
from stacky_framed.fans import INF, RAY_NAMES, quotient_stacky_fan_along_ray
from stacky_framed.lattice import IntMatrix

p = 3
sf = root_stacky_fan(p)
print("rays:", dict(zip(RAY_NAMES, sf.fan.rays)))
print("marked vectors (columns of beta):", sf.marked_vectors)

# %%
# The quotient presentation: which coordinates may not vanish together on
# each chart, the group DG(beta) and its weights on C^4.
nonvanishing, group, weights = quotient_presentation(sf)
print("\nDG(beta) =", group)
print("weights:")
for row in weights.tolist():
    print("   ", row)
for cone, keep in zip(sf.fan.max_cones, nonvanishing):
    print(f"chart of cone {cone}: z_i != 0 for i in {keep}")

# %%
# A weight matrix is only defined up to a basis change of DG(beta) and a
# relabelling of the coordinates. The action (t1^p t2^-p, t2, t1, t2) is a
# valid presentation once the rays are read in a different order.
textbook = IntMatrix.from_rows([[p, 0, 1, 0], [-p, 1, 0, 1]])
for order in permutations(range(4)):
    if is_gale_dual_weights(sf.beta.select_columns(order), textbook):
        print("\n(t1^p t2^-p, t2, t1, t2) matches ray order", [RAY_NAMES[i] for i in order])
        break

# %%
# The divisor at infinity: quotient the lattice by p*v_inf and dualise again.
quot, images = quotient_stacky_fan_along_ray(sf, INF)
print("\nN / p v_inf =", quot, " images of v0, v2:", images.tolist())
g, w = gale_dual(images, quot)
print("DG of the gerbe:", g, " weights:", w.tolist())
print("both coordinates have weight (1, 0): the Z/p factor does not act on them")
