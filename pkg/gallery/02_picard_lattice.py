"""
Picard lattice and restriction to the gerbe at infinity
=======================================================
"""
from stacky_framed import intersect, named_class, restrict_to_Dinf, degree_on_Dinf
from stacky_framed.picard import NAMES, coarse_named, good_framing_divisor_check

p = 4
classes = {name: named_class(name, p) for name in NAMES}

print(f"Pic of the p={p} surface in the basis (omega, D_inf):")
for name, c in classes.items():
    print(f"  {name:6s} = {c.a_omega:+d} omega {c.a_Dinf:+d} D_inf")

# %%
# Intersection numbers are rational; omega is a p-th root of -E.
print("\nintersection table")
print("        " + "".join(f"{n:>8s}" for n in NAMES))
for a in NAMES:
    print(f"{a:8s}" + "".join(f"{str(intersect(classes[a], classes[b])):>8s}" for b in NAMES))

# %%
# Restricting to D_inf lands in Z + Z/p = <L1> + <L2>. Degrees only see L1.
print("\nrestriction to D_inf")
for name, c in classes.items():
    r = restrict_to_Dinf(c)
    print(f"  O({name}) -> L1^{r.a} L2^{r.b}   degree {degree_on_Dinf(r)}")

# %%
# Only D_inf is big and nef among the boundary curves of the coarse surface.
for name in ("F", "E", "Dinf"):
    print(f"{name}: good framing divisor = {good_framing_divisor_check(coarse_named(name, p))}")
