"""
Torus-fixed points as Young diagrams
====================================

A fixed point is r pairs of Young diagrams together with the exponents u_a
of the tautological bundle on each summand.
"""
from fractions import Fraction

from stacky_framed import count_fixed_points, count_rank_one, enumerate_fixed_points, fixed_point_discriminant


def draw(y):
    return "/".join(str(part) for part in y) or "-"


print("rank one: number of pairs of Young diagrams of size n")
print([count_rank_one(n) for n in range(11)])

# %%
p, w, u = 3, [1, 1, 0], 1
r = sum(w)
# the smallest discriminant for these invariants comes from u_vec = (0, 1)
Delta = fixed_point_discriminant(p, r, (0, 1), (0, 0)) + 1
print(f"\np={p} w={w} u={u} Delta={Delta}")
for fp in enumerate_fixed_points(p, r, u, Delta, w):
    pairs = "  ".join(f"({draw(a)}, {draw(b)})" for a, b in fp.pairs)
    print(f"  u={fp.u_vec}  {pairs}")

# %%
# Larger charges are cheaper to count than to list.
for D in range(5):
    Delta = Fraction(1, 12) + D
    print(f"Delta={Delta}: {count_fixed_points(p, r, u, Delta, w)} fixed points")
