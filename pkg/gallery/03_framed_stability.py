"""
Numerical framed stability against a witness list
==================================================

Polynomials are written in the basis n^i / i!. The checker only knows the
subsheaves you hand it, so every verdict is relative to that list.
"""
from fractions import Fraction

from stacky_framed import (
    FramedNumData,
    HilbertPoly,
    delta_semistable_check,
    mu_stable_check,
    polarization_threshold,
)
from stacky_framed.stability import good_framing_sheaf_bound, good_framing_sheaf_check

# rank-two sheaf on a surface, framed, with delta(n) = n
P = HilbertPoly([1, 4, 2])
delta = HilbertPoly([0, 1])
parent = FramedNumData(P, eps=1)

subs = [
    (HilbertPoly([0, 1, 1]), 1, 1),   # a line subsheaf on which the framing is nonzero
    (HilbertPoly([0, 2, 1]), 1, 0),   # a kernel-type subsheaf
    (HilbertPoly([0, 3, 1]), 1, 0),   # too steep, destabilises
]
for k in (1, 2, 3):
    v = delta_semistable_check(parent, delta, subs[:k])
    print(f"first {k} subs: semistable={v.semistable} stable={v.stable}")

# %%
# The slope version only needs degrees and orbifold ranks.
parent_mu = FramedNumData(P, eps=1, ork=2, deg=3)
# framed slope (3 - 1/2)/2 = 5/4, so a framed line subsheaf needs deg' - 1/2 <= 5/4
for deg_sub in (Fraction(1), Fraction(7, 4), Fraction(2)):
    v = mu_stable_check(parent_mu, Fraction(1, 2), [(deg_sub, 1, 1)])
    print(f"deg' = {deg_sub}: mu-semistable={v.semistable} mu-stable={v.stable}")

# %%
# The framing sheaf at infinity is a sum of powers of L2, all of degree zero,
# so it is good whenever the bound 1/(r p) is positive.
p, r = 3, 4
good, A0 = good_framing_sheaf_check([0] * r, 1, p, p)
print(f"\ngood={good} A0={A0} bound={good_framing_sheaf_bound(r, 1, p, p)}")
for A1 in (0, 1, 2):
    print(f"A1 = {A1}: twist the polarization by at least", polarization_threshold(r, 0, A1, 1, 1, p, p, p, 1))
