"""Dimension of moduli of framed sheaves on the p-th stacky Hirzebruch surface.

The framing sheaf at infinity is ``sum_i (L2^i)^{w_i}``, recorded by the
framing vector ``w = (w_0, ..., w_{p-1})`` of rank ``r = sum w_i``.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _check_p(p):
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")


@dataclass(frozen=True)
class FramingVector:
    w: tuple[int, ...]

    def __init__(self, w: Sequence[int]):
        w = tuple(int(x) for x in w)
        if not w:
            raise ValueError("framing vector must have length p >= 1")
        if any(x < 0 for x in w):
            raise ValueError("framing multiplicities must be nonnegative")
        if sum(w) < 1:
            raise ValueError("framing vector must have rank r >= 1")
        object.__setattr__(self, "w", w)

    @property
    def p(self) -> int:
        return len(self.w)

    @property
    def r(self) -> int:
        return sum(self.w)

    def translated(self, j: int) -> tuple[int, ...]:
        """``w(j) = (w_j, ..., w_{p-1}, w_0, ..., w_{j-1})``."""
        j %= self.p
        return self.w[j:] + self.w[:j]

    def self_overlap(self, j: int) -> int:
        """``w . w(j)``."""
        return sum(a * b for a, b in zip(self.w, self.translated(j)))


def _as_framing(w, p=None) -> FramingVector:
    fv = w if isinstance(w, FramingVector) else FramingVector(w)
    if p is not None and fv.p != p:
        raise ValueError(f"framing vector has length {fv.p}, expected p = {p}")
    return fv


def _check_j(p, j):
    _check_p(p)
    if not isinstance(j, int) or not 0 <= j < p:
        raise ValueError(f"j must satisfy 0 <= j <= p-1, got j={j!r} for p={p}")


def roots_of_unity_sum(p: int, j: int) -> Fraction:
    """Closed form ``-(p^2 - 6p + 5)/12 - j(j + p - 2)/2`` (0 when p = 1).

    Intended to evaluate :func:`roots_of_unity_sum_numeric`. The two agree for
    p <= 2 only; :func:`twisted_sector_sum` is the exact value of the sum.
    """
    _check_j(p, j)
    if p == 1:
        return Fraction(0)
    return -Fraction(p * p - 6 * p + 5, 12) - Fraction(j * (j + p - 2), 2)


def roots_of_unity_sum_numeric(p: int, j: int) -> complex:
    """``sum_{i=1}^{p-1} w^{-i(j+2)} / (1 - w^{-i})^2`` with ``w = exp(2 pi i/p)``."""
    _check_j(p, j)
    w = cmath.exp(2j * cmath.pi / p)
    return sum(w ** (-i * (j + 2)) / (1 - w ** (-i)) ** 2 for i in range(1, p))


def twisted_sector_sum(p: int, j: int) -> Fraction:
    """Exact value of :func:`roots_of_unity_sum_numeric`.

    With ``T(t) = sum_i w^{-it} / (1 - w^{-i})^2`` the sum is ``T(j + 2)``.
    ``T(0) = -(p-1)(p-5)/12`` and ``T(t) - T(t+1) = sum_i w^{-it}/(1 - w^{-i})``,
    whose value is ``(p-1)/2`` at ``t = 0`` and ``t - (p+1)/2`` for
    ``1 <= t <= p-1``.
    """
    _check_j(p, j)
    t_target = (j + 2) % p
    T = -Fraction((p - 1) * (p - 5), 12)
    for t in range(t_target):
        T -= Fraction(p - 1, 2) if t == 0 else t - Fraction(p + 1, 2)
    return T


def todd2_integral(p: int) -> Fraction:
    _check_p(p)
    return -Fraction(p * p - 6 * p - 7, 12 * p)


def dimension(p: int, r: int, Delta, w) -> Fraction:
    """``2 r Delta - sum_j (w . w(j)) j (j + p - 2) / (2p)``."""
    fv = _as_framing(w, p)
    if fv.r != r:
        raise ValueError(f"framing vector has rank {fv.r}, expected r = {r}")
    Delta = Fraction(Delta)
    corr = sum(Fraction(fv.self_overlap(j) * j * (j + p - 2), 2 * p) for j in range(p))
    return 2 * r * Delta - corr


def A_term(p: int, r: int, Delta) -> Fraction:
    _check_p(p)
    return -2 * r * Fraction(Delta) - Fraction(r * r * (p * p - 6 * p + 5), 12 * p)


def B_term(p: int, w) -> Fraction:
    """``-(1/p) sum_j (w . w(j)) S(j)`` with S the closed-form sum."""
    fv = _as_framing(w, p)
    return -sum(fv.self_overlap(j) * roots_of_unity_sum(p, j) for j in range(p)) / p


def B_term_exact(p: int, w) -> Fraction:
    """Same as :func:`B_term` with the exact twisted-sector sums."""
    fv = _as_framing(w, p)
    return -sum(fv.self_overlap(j) * twisted_sector_sum(p, j) for j in range(p)) / p


def dimension_from_twisted_sectors(p: int, r: int, Delta, w) -> Fraction:
    """``-(A + B)`` with B built from the exact sums; equals :func:`dimension`
    when p <= 2."""
    fv = _as_framing(w, p)
    if fv.r != r:
        raise ValueError(f"framing vector has rank {fv.r}, expected r = {r}")
    return -(A_term(p, r, Delta) + B_term_exact(p, fv))


def fixed_point_discriminant(p: int, r: int, u_vec: Sequence[int], n_vec: Sequence[int]) -> Fraction:
    """Discriminant of ``sum_a i_*(I_a) (x) R^{u_a}``.

    Each summand has ``ch = e^{u_a omega}(1 - n_a pt)`` and ``omega^2 = -1/p``,
    so ``Delta = sum n_a + sum u_a^2/(2p) - (sum u_a)^2/(2 r p)``.
    """
    _check_p(p)
    if len(u_vec) != r or len(n_vec) != r:
        raise ValueError(f"u_vec and n_vec must have length r = {r}")
    if any(n < 0 for n in n_vec):
        raise ValueError("instanton numbers n_a must be nonnegative")
    su = sum(u_vec)
    return sum(n_vec) + Fraction(sum(u * u for u in u_vec), 2 * p) - Fraction(su * su, 2 * r * p)
