"""Numerical layer of framed (semi)stability.

Polynomials are stored in the basis ``n^i / i!`` with coefficients listed
from ``alpha_0`` upwards. Subsheaves cannot be enumerated from numerical data,
so every check runs against an explicit, finite witness list and its verdict
only speaks for that list.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd
from typing import Sequence


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _trim(coeffs):
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class HilbertPoly:
    """``sum_i alpha_i n^i / i!``; ``coeffs[i] = alpha_i``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", _trim(_q(c) for c in coeffs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial, ``-1`` for zero."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __add__(self, other: "HilbertPoly") -> "HilbertPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return HilbertPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return HilbertPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k) -> "HilbertPoly":
        k = _q(k)
        return HilbertPoly([k * c for c in self.coeffs])

    def monomial_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients in the ordinary basis ``n^i``."""
        return tuple(c / factorial(i) for i, c in enumerate(self.coeffs))

    def __call__(self, n) -> Fraction:
        n = _q(n)
        return sum((c * n**i for i, c in enumerate(self.monomial_coeffs())), Fraction(0))

    def hat_slope(self, d: int) -> Fraction:
        """``alpha_{d-1} / alpha_d`` for a polynomial of a d-dimensional sheaf."""
        if self.coeff(d) == 0:
            raise ValueError("hat-slope needs a nonzero multiplicity alpha_d")
        return self.coeff(d - 1) / self.coeff(d)


StabilityPoly = HilbertPoly


def _check_eps(eps):
    if eps not in (0, 1):
        raise ValueError(f"framing flag must be 0 or 1, got {eps!r}")


@dataclass(frozen=True)
class FramedNumData:
    """Numerical shadow of a framed sheaf.

    ``eps`` is 1 when the framing map is nonzero on the sheaf, 0 otherwise.
    """

    P: HilbertPoly
    eps: int = 1
    ork: Fraction = Fraction(0)
    deg: Fraction = Fraction(0)

    def __post_init__(self):
        _check_eps(self.eps)
        object.__setattr__(self, "ork", _q(self.ork))
        object.__setattr__(self, "deg", _q(self.deg))


def framed_hilbert(P: HilbertPoly, eps: int, delta: HilbertPoly) -> HilbertPoly:
    _check_eps(eps)
    return P - delta.scale(eps)


def poly_leq(P: HilbertPoly, Q: HilbertPoly, strict: bool = False) -> bool:
    """Eventual comparison ``P(n) <= Q(n)`` (or ``<``) for all large ``n``.

    Compares coefficients from the top degree down; the first difference
    decides. Equal polynomials satisfy ``<=`` but not ``<``.
    """
    n = max(len(P.coeffs), len(Q.coeffs))
    for i in reversed(range(n)):
        a, b = P.coeff(i), Q.coeff(i)
        if a != b:
            return a < b
    return not strict


def crossover_bound(P: HilbertPoly, Q: HilbertPoly) -> Fraction:
    """A point beyond which the sign of ``Q - P`` no longer changes.

    Cauchy bound ``1 + max |c_k / c_lead|`` of the difference in the monomial
    basis; zero when the difference is constant.
    """
    c = _trim((Q - P).monomial_coeffs())
    if len(c) <= 1:
        return Fraction(0)
    lead = c[-1]
    return 1 + max(abs(x / lead) for x in c[:-1])


@dataclass(frozen=True)
class SubVerdict:
    semistable: bool
    stable: bool


@dataclass(frozen=True)
class StabilityVerdict:
    """Verdict of a stability check relative to a finite witness list."""

    semistable: bool
    stable: bool
    subs: tuple[SubVerdict, ...] = field(default=())
    scope: str = "witness list only"


def _collect(per_sub):
    per_sub = tuple(per_sub)
    return StabilityVerdict(
        semistable=all(s.semistable for s in per_sub),
        stable=all(s.stable for s in per_sub),
        subs=per_sub,
    )


def delta_semistable_check(parent: FramedNumData, delta: HilbertPoly, subs) -> StabilityVerdict:
    """delta-(semi)stability of ``parent`` against ``subs``.

    ``subs`` holds triples ``(P', alpha'_d, eps')``. A sub with ``eps' = 0``
    is tested by ``P' (<=) alpha'_d p``, one with ``eps' = 1`` by
    ``P' - delta (<=) alpha'_d p``, where ``p`` is the reduced framed Hilbert
    polynomial of the parent. The dimension ``d`` is read off ``delta``,
    which has degree ``d - 1`` and positive leading coefficient.
    """
    if delta.leading <= 0:
        raise ValueError("stability polynomial needs a positive leading coefficient delta_1")
    d = delta.degree + 1
    if parent.P.degree > d:
        raise ValueError(f"parent polynomial has degree {parent.P.degree} > d = {d}")
    alpha_d = parent.P.coeff(d)
    if alpha_d <= 0:
        raise ValueError("parent has alpha_d <= 0; use delta_rank_zero_verdict")
    reduced = framed_hilbert(parent.P, parent.eps, delta).scale(Fraction(1) / alpha_d)
    out = []
    for P_sub, a_sub, eps_sub in subs:
        _check_eps(eps_sub)
        lhs = framed_hilbert(P_sub, eps_sub, delta)
        rhs = reduced.scale(a_sub)
        out.append(SubVerdict(poly_leq(lhs, rhs), poly_leq(lhs, rhs, strict=True)))
    return _collect(out)


def delta_rank_zero_verdict(P: HilbertPoly, delta: HilbertPoly, framing_injective: bool) -> StabilityVerdict:
    """Convention for framed sheaves with ``alpha_d = 0``.

    Semistable exactly when the framing is injective; stable when moreover
    ``P = delta``.
    """
    ss = bool(framing_injective)
    return StabilityVerdict(ss, ss and P == delta)


def framed_slope(parent: FramedNumData, delta1) -> Fraction:
    if parent.ork == 0:
        raise ValueError("framed slope needs a nonzero orbifold rank")
    return (parent.deg - parent.eps * _q(delta1)) / parent.ork


def mu_stable_check(parent: FramedNumData, delta1, subs) -> StabilityVerdict:
    """mu-(semi)stability with respect to ``delta1`` against ``subs``.

    ``subs`` holds triples ``(deg', ork', eps')``. Kernel-type subs
    (``eps' = 0``) need ``deg' (<=) ork' mu``; the others need
    ``deg' - delta1 (<=) ork' mu`` and ``0 < ork' < ork``.
    """
    delta1 = _q(delta1)
    mu = framed_slope(parent, delta1)
    out = []
    for deg_sub, ork_sub, eps_sub in subs:
        _check_eps(eps_sub)
        deg_sub, ork_sub = _q(deg_sub), _q(ork_sub)
        if eps_sub == 0:
            if ork_sub > parent.ork:
                raise ValueError(f"sub orbifold rank {ork_sub} exceeds parent rank {parent.ork}")
            lhs = deg_sub
        else:
            if not 0 < ork_sub < parent.ork:
                raise ValueError(f"sub orbifold rank {ork_sub} must lie strictly between 0 and {parent.ork}")
            lhs = deg_sub - delta1
        rhs = ork_sub * mu
        out.append(SubVerdict(lhs <= rhs, lhs < rhs))
    return _collect(out)


def mu_rank_zero_verdict(deg, delta1, framing_injective: bool) -> StabilityVerdict:
    ss = bool(framing_injective)
    return StabilityVerdict(ss, ss and _q(deg) == _q(delta1))


def hat_mu_relation(hat_mu, ork_G, alpha_d_OX, alpha_Gd1_OX) -> Fraction:
    """Slope from hat-slope: ``ork(G) alpha_d(O_X) hat_mu - alpha_{G,d-1}(O)``."""
    return _q(ork_G) * _q(alpha_d_OX) * _q(hat_mu) - _q(alpha_Gd1_OX)


def degree_shift(deg_H, n: int, a_D, a_script_D, ork_G, c1_restriction_integral) -> Fraction:
    """Degree with respect to ``H_n = H + n a_D D``."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    return _q(deg_H) + n * _q(a_D) * _q(a_script_D) * _q(ork_G) * _q(c1_restriction_integral)


def twist_degree(deg_E, ork_E, deg_OD) -> Fraction:
    return _q(deg_E) + _q(ork_E) * _q(deg_OD)


def good_framing_sheaf_bound(r: int, a_D, k_D, DD_selfint) -> Fraction:
    return _q(DD_selfint) / (r * _q(a_D) ** 2 * _q(k_D) ** 2)


def good_framing_sheaf_check(line_degrees, a_D, k_D, DD_selfint) -> tuple[bool, Fraction]:
    """Good-framing-sheaf test for a split framing sheaf.

    ``A0`` is the largest slope of a sub line bundle minus the slope of the
    whole sheaf. Returns ``(is_good, A0)``.
    """
    degs = [_q(d) for d in line_degrees]
    if not degs:
        raise ValueError("framing sheaf needs at least one summand")
    A0 = max(degs) - sum(degs) / len(degs)
    return 0 <= A0 < good_framing_sheaf_bound(len(degs), a_D, k_D, DD_selfint), A0


def polarization_threshold(r, A0, A1, a_D, a_script_D, ork_G, k_D, DD_selfint, D_dot_H) -> Fraction:
    """Smallest admissible twist for the polarization ``H + n a_D D``."""
    a_D, k_D, ork_G = _q(a_D), _q(k_D), _q(ork_G)
    gap = _q(DD_selfint) / (a_D**2 * k_D**2) - r * _q(A0)
    if gap <= 0:
        raise ValueError("good framing sheaf bound violated: DD/(a_D^2 k_D^2) - r A0 <= 0")
    num = r * _q(A1) - ork_G * _q(D_dot_H) / (a_D * k_D)
    return max(num / (a_D * _q(a_script_D) * ork_G * gap), Fraction(0))


def generating_sheaf_condition(k: int, r: int) -> bool:
    """Whether ``sum_{i=1}^r w^{-ij}`` vanishes for ``j = 1..k-1`` and every
    primitive k-th root ``w``; this happens exactly when ``k | r``."""
    if k < 1 or r < 1:
        raise ValueError("k and r must be positive")
    return r % k == 0


def generating_sheaf_condition_numeric(k: int, r: int, tol: float = 1e-9) -> bool:
    """Floating-point evaluation of the same root-of-unity sums."""
    for a in range(1, k + 1):
        if k > 1 and gcd(a, k) != 1:
            continue
        w = cmath.exp(2j * cmath.pi * a / k)
        for j in range(1, k):
            if abs(sum(w ** (-i * j) for i in range(1, r + 1))) >= tol:
                return False
    return True

