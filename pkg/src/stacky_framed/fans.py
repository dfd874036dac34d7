"""Rank-two fans, the Hirzebruch fan and its root stacky fan.

Ray order is fixed as ``(rho_0, rho_1, rho_2, rho_inf)`` throughout, with
``v0 = (0, 1)``, ``v1 = (1, 0)``, ``v2 = (p, -1)`` and ``v_inf = (-1, 0)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .lattice import FGAbelianGroup, IntMatrix, cokernel, gale_dual

RAY_NAMES = ("rho_0", "rho_1", "rho_2", "rho_inf")
INF = 3  # index of rho_inf


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _angle_key(v):
    # exact angular order on Q^2 without floating point: half-plane, then slope
    upper = v[1] > 0 or (v[1] == 0 and v[0] > 0)
    x = Fraction(v[0], abs(v[0]) + abs(v[1]))
    return (0, -x) if upper else (1, x)


@dataclass(frozen=True)
class Fan2D:
    """Simplicial fan in ``N = Z^2`` given by primitive rays and 2-cones."""

    rays: tuple[tuple[int, int], ...]
    max_cones: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for v in self.rays:
            if len(v) != 2:
                raise ValueError(f"ray {v} is not in Z^2")
            if math.gcd(*v) != 1:
                raise ValueError(f"ray {v} is not primitive")
        for i, j in self.max_cones:
            if not (0 <= i < len(self.rays) and 0 <= j < len(self.rays)):
                raise ValueError(f"cone ({i}, {j}) references a missing ray")
            if _cross(self.rays[i], self.rays[j]) == 0:
                raise ValueError(f"cone ({i}, {j}) is not two-dimensional")

    def is_complete(self) -> bool:
        """True when the 2-cones are exactly the angularly adjacent ray pairs.

        In rank two that is equivalent to the cones covering ``Q^2`` and
        meeting along faces. Each such cone must also be strictly convex.
        """
        n = len(self.rays)
        if n < 3 or len(self.max_cones) != n:
            return False
        order = sorted(range(n), key=lambda i: _angle_key(self.rays[i]))
        adjacent = set()
        for k in range(n):
            a, b = order[k], order[(k + 1) % n]
            # counterclockwise turn from a to b must be < pi
            if _cross(self.rays[a], self.rays[b]) <= 0:
                return False
            adjacent.add(frozenset((a, b)))
        return adjacent == {frozenset(c) for c in self.max_cones}

    def cones_containing(self, ray_index: int) -> list[tuple[int, int]]:
        return [c for c in self.max_cones if ray_index in c]

    def neighbours(self, ray_index: int) -> list[int]:
        """Rays sharing a 2-cone with ``ray_index``, in index order."""
        out = {j for c in self.cones_containing(ray_index) for j in c if j != ray_index}
        return sorted(out)


@dataclass(frozen=True)
class StackyFan:
    """Fan together with a positive multiplicity per ray.

    The marked vector of ray ``i`` is ``multiplicities[i] * rays[i]``; these
    are the columns of ``beta``.
    """

    fan: Fan2D
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicities) != len(self.fan.rays):
            raise ValueError("one multiplicity per ray is required")
        if any(m < 1 for m in self.multiplicities):
            raise ValueError("multiplicities must be >= 1")

    @property
    def marked_vectors(self) -> tuple[tuple[int, int], ...]:
        return tuple((m * v[0], m * v[1]) for m, v in zip(self.multiplicities, self.fan.rays))

    @property
    def beta(self) -> IntMatrix:
        return IntMatrix.from_columns(self.marked_vectors, rows=2)


def _check_p(p):
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")


def hirzebruch_fan(p: int) -> Fan2D:
    _check_p(p)
    rays = ((0, 1), (1, 0), (p, -1), (-1, 0))
    # sigma_1, sigma_2, sigma_{inf,2}, sigma_{inf,0}
    cones = ((0, 1), (1, 2), (2, 3), (3, 0))
    return Fan2D(rays, cones)


def root_stacky_fan(p: int) -> StackyFan:
    """Stacky fan of the p-th root along the divisor at infinity."""
    return StackyFan(hirzebruch_fan(p), (1, 1, 1, p))


def quotient_presentation(sf: StackyFan) -> tuple[list[tuple[int, ...]], FGAbelianGroup, IntMatrix]:
    """Cox-style quotient data ``[Z / G]`` of a complete stacky fan.

    Returns ``(nonvanishing, group, weights)``. ``nonvanishing[k]`` lists the
    coordinates that must be nonzero on the chart of the k-th maximal cone
    (the rays outside that cone); ``Z`` is the union of these charts, i.e. the
    complement of the irrelevant locus. ``group`` is ``DG(beta)`` and
    ``weights`` its weight matrix, one column per coordinate.
    """
    if not sf.fan.is_complete():
        raise ValueError("quotient presentation needs a complete fan")
    n = len(sf.fan.rays)
    nonvanishing = [tuple(i for i in range(n) if i not in cone) for cone in sf.fan.max_cones]
    group, weights = gale_dual(sf.beta)
    return nonvanishing, group, weights


def quotient_stacky_fan_along_ray(sf: StackyFan, ray_index: int) -> tuple[FGAbelianGroup, IntMatrix]:
    """Lattice ``N / <marked vector>`` and the images of the neighbouring rays.

    The image matrix has one column per neighbouring ray (index order) in the
    canonical coordinates of the quotient lattice.
    """
    if not 0 <= ray_index < len(sf.fan.rays):
        raise ValueError(f"no ray with index {ray_index}")
    marked = sf.marked_vectors
    quot = cokernel(IntMatrix.from_columns([marked[ray_index]], rows=2))
    cols = [quot.image(marked[j]) for j in sf.fan.neighbours(ray_index)]
    return quot, IntMatrix.from_columns(cols, rows=quot.ngens)


def gerbe_gale_dual(p: int) -> tuple[FGAbelianGroup, IntMatrix]:
    """Gale dual of the stacky fan of the divisor at infinity."""
    quot, images = quotient_stacky_fan_along_ray(root_stacky_fan(p), INF)
    return gale_dual(images, quot)
