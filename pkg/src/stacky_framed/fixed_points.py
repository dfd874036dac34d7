"""Torus-fixed points of moduli of framed sheaves on the stacky Hirzebruch surface.

A fixed point is a direct sum of rank-one framed sheaves
``i_*(I_a) (x) R^{u_a}``. Each ideal ``I_a`` is monomial and supported at the
two torus-fixed points of the affine part, so it is a pair of Young diagrams
``(Y1_a, Y2_a)``. Slot 1 is the point P1 and slot 2 the point P2.

Young diagrams are tuples of weakly decreasing positive parts.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .riemann_roch import FramingVector, _as_framing, fixed_point_discriminant

DEFAULT_LIMIT = 10**6

YoungDiagram = tuple  # weakly decreasing positive parts


def is_partition(y) -> bool:
    return all(a >= 1 for a in y) and all(a >= b for a, b in zip(y, y[1:]))


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[YoungDiagram, ...]:
    """All partitions of n in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(1, min(rest, cap) + 1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(sorted(gen(n, n)))


@lru_cache(maxsize=None)
def young_pairs(n: int) -> tuple[tuple[YoungDiagram, YoungDiagram], ...]:
    """Pairs of Young diagrams of total size n, sorted lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = [(a, b) for k in range(n + 1) for a in partitions(k) for b in partitions(n - k)]
    return tuple(sorted(out))


def _series_power(base: list[int], power: int, n: int) -> list[int]:
    out = [1] + [0] * n
    for _ in range(power):
        out = [sum(out[i] * base[k - i] for i in range(k + 1)) for k in range(n + 1)]
    return out


@lru_cache(maxsize=None)
def _partition_counts(n: int) -> tuple[int, ...]:
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for k in range(part, n + 1):
            counts[k] += counts[k - part]
    return tuple(counts)


def count_rank_one(n: int) -> int:
    """Coefficient of ``q^n`` in ``prod_k (1 - q^k)^{-2}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _series_power(list(_partition_counts(n)), 2, n)[n]


def count_multi_pairs(r: int, n: int) -> int:
    """Number of r-tuples of Young-diagram pairs with total size n."""
    return _series_power(list(_partition_counts(n)), 2 * r, n)[n]


@dataclass(frozen=True)
class FixedPoint:
    pairs: tuple[tuple[YoungDiagram, YoungDiagram], ...]
    u_vec: tuple[int, ...]

    @property
    def n_vec(self) -> tuple[int, ...]:
        return tuple(sum(a) + sum(b) for a, b in self.pairs)

    def sort_key(self):
        return (self.u_vec, self.pairs)

    def is_valid(self, p: int, u: int, Delta, w) -> bool:
        """Re-check block congruences, total degree and discriminant."""
        fv = _as_framing(w, p)
        r = fv.r
        if len(self.pairs) != r or len(self.u_vec) != r:
            return False
        if not all(is_partition(a) and is_partition(b) for a, b in self.pairs):
            return False
        if any((ua - i) % p for ua, i in zip(self.u_vec, block_residues(fv))):
            return False
        if sum(self.u_vec) != u:
            return False
        return fixed_point_discriminant(p, r, self.u_vec, self.n_vec) == Fraction(Delta)


class FixedPointList(list):
    """Sorted list of fixed points with a ``truncated`` flag set when the
    enumeration cap was hit."""

    truncated: bool = False


def block_residues(fv: FramingVector) -> tuple[int, ...]:
    """Residue ``i`` of ``u_a`` mod p for each ``a``: the first ``w_0`` slots
    get 0, the next ``w_1`` get 1, and so on."""
    return tuple(i for i, wi in enumerate(fv.w) for _ in range(wi))


def _check_inputs(p, r, u, Delta, w):
    fv = _as_framing(w, p)
    if fv.r != r:
        raise ValueError(f"framing vector has rank {fv.r}, expected r = {r}")
    if (u - sum(i * wi for i, wi in enumerate(fv.w))) % p:
        raise ValueError(f"u = {u} violates u = sum i w_i mod p; no moduli space")
    Delta = Fraction(Delta)
    if Delta < 0:
        raise ValueError("Delta must be nonnegative")
    return fv, Delta


def _u_vectors(p, u, bound, residues):
    """u-vectors with the given residues, sum u and sum of squares <= bound,
    in lexicographic order."""
    r = len(residues)

    def rec(k, partial_sum, partial_sq):
        left = r - k
        rest = u - partial_sum
        if left == 1:
            if (rest - residues[k]) % p == 0 and partial_sq + rest * rest <= bound:
                yield (rest,)
            return
        room = bound - partial_sq
        if room < 0:
            return
        m = math.isqrt(math.floor(room))
        x = -m + ((residues[k] + m) % p)
        while x <= m:
            rem = rest - x
            # remaining slots need at least rem^2/(left-1) of square budget
            if partial_sq + x * x + Fraction(rem * rem, left - 1) <= bound:
                for tail in rec(k + 1, partial_sum + x, partial_sq + x * x):
                    yield (x,) + tail
            x += p

    yield from rec(0, 0, 0)


def _residual(p, r, u, Delta, u_vec):
    N = Delta + Fraction(u * u, 2 * r * p) - Fraction(sum(x * x for x in u_vec), 2 * p)
    if N < 0 or N.denominator != 1:
        return None
    return int(N)


def _admissible(p, r, u, Delta, fv):
    bound = Fraction(u * u, r) + 2 * p * Delta
    for u_vec in _u_vectors(p, u, bound, block_residues(fv)):
        N = _residual(p, r, u, Delta, u_vec)
        if N is not None:
            yield u_vec, N


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for tail in _compositions(total - first, parts - 1):
            yield (first,) + tail


def enumerate_fixed_points(p: int, r: int, u: int, Delta, w, limit: int | None = DEFAULT_LIMIT) -> FixedPointList:
    """All fixed points ``(Y, u_vec)`` with the given invariants.

    Sorted by ``u_vec`` then by the pairs. When more than ``limit`` points
    exist the result holds the first ``limit`` generated and ``truncated``
    is set.
    """
    fv, Delta = _check_inputs(p, r, u, Delta, w)
    out = FixedPointList()
    for u_vec, N in _admissible(p, r, u, Delta, fv):
        block = []
        for n_vec in _compositions(N, r):
            for pairs in product(*(young_pairs(n) for n in n_vec)):
                if limit is not None and len(out) + len(block) >= limit:
                    out.extend(sorted(block, key=FixedPoint.sort_key))
                    out.truncated = True
                    return out
                block.append(FixedPoint(tuple(pairs), u_vec))
        out.extend(sorted(block, key=FixedPoint.sort_key))
    return out


def count_fixed_points(p: int, r: int, u: int, Delta, w) -> int:
    """Number of fixed points, without listing them."""
    fv, Delta = _check_inputs(p, r, u, Delta, w)
    return sum(count_multi_pairs(r, N) for _, N in _admissible(p, r, u, Delta, fv))
