"""
Dimension of the moduli space and the twisted-sector sums
=========================================================

The closed form for the root-of-unity sum agrees with the actual sum only
for p <= 2. This script prints both so the discrepancy is visible.
"""
from fractions import Fraction

from stacky_framed import (
    A_term,
    B_term,
    dimension,
    dimension_from_twisted_sectors,
    roots_of_unity_sum,
    roots_of_unity_sum_numeric,
    todd2_integral,
    twisted_sector_sum,
)

print(" p  j   closed form   exact sum   numeric")
for p in (2, 3, 4, 5):
    for j in range(p):
        num = roots_of_unity_sum_numeric(p, j)
        print(f"{p:2d} {j:2d} {str(roots_of_unity_sum(p, j)):>12s} {str(twisted_sector_sum(p, j)):>11s}   {num.real:+.6f}")

# %%
print("\nintegral of Td_2:", {p: str(todd2_integral(p)) for p in range(1, 8)})

# %%
# The closed-form dimension splits as -(A + B).
p, w, Delta = 3, [2, 1, 1], Fraction(5, 2)
r = sum(w)
print(f"\np={p} w={w} Delta={Delta}")
print("  A =", A_term(p, r, Delta), " B =", B_term(p, w))
print("  closed-form dimension       ", dimension(p, r, Delta, w))
print("  with exact twisted sectors  ", dimension_from_twisted_sectors(p, r, Delta, w))

# trivial framing: both give 2 r Delta
print("  trivial framing             ", dimension(p, r, Delta, [r, 0, 0]), dimension_from_twisted_sectors(p, r, Delta, [r, 0, 0]))
