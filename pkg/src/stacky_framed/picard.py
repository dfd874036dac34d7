"""Picard lattice of the stacky Hirzebruch surface and of its gerbe at infinity.

Classes on the stack are written in the basis ``(omega, D_inf)`` where
``omega = F_1 - D_inf`` is the tautological class. The pairing comes from
pulling back the intersection table of the coarse surface ``F_p``:
``pi^* F = F_1``, ``pi^* E = E`` and ``pi^* D_inf = p D_inf``.

Classes on the gerbe ``D_inf`` are ``L1^a L2^b`` with ``L2^p`` trivial.
The restriction map sends ``R = O(omega)`` to ``L2`` and ``O(F_i)`` to
``L1``; consequently ``O(D_inf)`` restricts to ``L1 L2^{-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _check_p(p):
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")


@dataclass(frozen=True)
class DivisorClass:
    """``a_omega * omega + a_Dinf * D_inf`` in Pic of the p-th stacky surface."""

    a_omega: int
    a_Dinf: int
    p: int

    def __post_init__(self):
        _check_p(self.p)

    def _same_p(self, other):
        if not isinstance(other, DivisorClass):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"classes live on different surfaces (p={self.p}, p={other.p})")
        return other

    def __add__(self, other):
        other = self._same_p(other)
        if other is NotImplemented:
            return other
        return DivisorClass(self.a_omega + other.a_omega, self.a_Dinf + other.a_Dinf, self.p)

    def __neg__(self):
        return DivisorClass(-self.a_omega, -self.a_Dinf, self.p)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return DivisorClass(k * self.a_omega, k * self.a_Dinf, self.p)

    @property
    def coarse_pushforward(self) -> tuple[Fraction, Fraction]:
        """Coefficients ``(f, e)`` of the rational class on ``F_p``.

        ``omega = -E/p`` and ``D_inf = (E + p F)/p`` after pushing forward.
        """
        p = self.p
        f = Fraction(self.a_Dinf)
        e = Fraction(self.a_Dinf - self.a_omega, p)
        return f, e


NAMES = ("F1", "F2", "E", "Dinf", "omega")


def named_class(name: str, p: int, u: int = 1) -> DivisorClass:
    """Torus-invariant divisor classes by name.

    ``R_power`` returns ``u * omega``, the first Chern class of ``R^u``.
    """
    if name in ("F1", "F2"):
        return DivisorClass(1, 1, p)
    if name == "E":
        return DivisorClass(-p, 0, p)
    if name == "Dinf":
        return DivisorClass(0, 1, p)
    if name in ("omega", "R"):
        return DivisorClass(1, 0, p)
    if name == "R_power":
        return DivisorClass(u, 0, p)
    raise ValueError(f"unknown divisor class {name!r}")


def pairing_matrix(p: int) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    _check_p(p)
    return ((Fraction(-1, p), Fraction(0)), (Fraction(0), Fraction(1, p)))


def intersect(x: DivisorClass, y: DivisorClass) -> Fraction:
    """Rational intersection number of two classes on the same surface."""
    if x.p != y.p:
        raise ValueError(f"classes live on different surfaces (p={x.p}, p={y.p})")
    g = pairing_matrix(x.p)
    a, b = (x.a_omega, x.a_Dinf), (y.a_omega, y.a_Dinf)
    return sum(a[i] * g[i][j] * b[j] for i in range(2) for j in range(2))


@dataclass(frozen=True)
class DinfLineClass:
    """Line bundle ``L1^a L2^b`` on the gerbe at infinity, ``b`` taken mod p."""

    a: int
    b: int
    p: int

    def __post_init__(self):
        _check_p(self.p)
        if not 0 <= self.b < self.p:
            object.__setattr__(self, "b", self.b % self.p)

    def __add__(self, other):
        if other.p != self.p:
            raise ValueError("classes live on different gerbes")
        return DinfLineClass(self.a + other.a, self.b + other.b, self.p)

    @property
    def is_trivial(self) -> bool:
        return self.a == 0 and self.b == 0


def restrict_to_Dinf(x: DivisorClass) -> DinfLineClass:
    """Restriction ``Pic(X_p) -> Pic(D_inf)``.

    ``omega -> L2`` and ``F_1 = omega + D_inf -> L1``, hence
    ``D_inf -> L1 L2^{-1}`` and ``E = -p omega -> O``.
    """
    return DinfLineClass(x.a_Dinf, x.a_omega - x.a_Dinf, x.p)


def degree_on_Dinf(c: DinfLineClass) -> Fraction:
    """Degree of ``L1^a L2^b``; the torsion part ``L2`` has degree zero."""
    return Fraction(c.a, c.p)


@dataclass(frozen=True)
class CoarseDivisor:
    """``f F + e E`` on the Hirzebruch surface ``F_p``."""

    f: int
    e: int
    p: int


def coarse_intersect(x: CoarseDivisor, y: CoarseDivisor) -> int:
    if x.p != y.p:
        raise ValueError("divisors live on different surfaces")
    # F.F = 0, E.F = 1, E.E = -p
    return x.f * y.e + x.e * y.f - x.p * x.e * y.e


def coarse_named(name: str, p: int) -> CoarseDivisor:
    table = {"F": (1, 0), "E": (0, 1), "Dinf": (p, 1)}
    if name not in table:
        raise ValueError(f"unknown coarse divisor {name!r}")
    return CoarseDivisor(*table[name], p)


def good_framing_divisor_check(d: CoarseDivisor) -> tuple[bool, int | None]:
    """Nef-and-big test on ``F_p`` where every divisor is Cartier.

    Nefness is tested against the two generators ``F`` and ``E`` of the cone of
    curves. Irreducibility is not decided; it is assumed for the named
    torus-invariant curves. Returns ``(is_good, a_D)`` with ``a_D = 1`` when
    good and ``None`` otherwise.
    """
    F, E = CoarseDivisor(1, 0, d.p), CoarseDivisor(0, 1, d.p)
    nef = coarse_intersect(d, F) >= 0 and coarse_intersect(d, E) >= 0
    big = coarse_intersect(d, d) > 0
    return (True, 1) if nef and big else (False, None)
