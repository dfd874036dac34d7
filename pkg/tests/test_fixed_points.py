from fractions import Fraction
from itertools import product

import pytest

from stacky_framed.fixed_points import (
    FixedPoint,
    count_fixed_points,
    count_rank_one,
    enumerate_fixed_points,
    is_partition,
    partitions,
    young_pairs,
)
from stacky_framed.riemann_roch import fixed_point_discriminant


def series_coefficients(n):
    """prod_{k>=1} (1 - q^k)^{-2} by repeated geometric-series multiplication."""
    c = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(2):
            # multiply by 1/(1 - q^k)
            for i in range(k, n + 1):
                c[i] += c[i - k]
    return c


def brute_partitions(n):
    """Partitions by filtering all compositions; independent of the library."""
    out = set()

    def comps(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in comps(rest - first):
                yield (first,) + tail

    for c in comps(n):
        out.add(tuple(sorted(c, reverse=True)))
    return out


def test_partitions():
    assert partitions(0) == ((),)
    assert partitions(4) == ((1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,))
    for n in range(9):
        assert set(partitions(n)) == brute_partitions(n)
        assert all(is_partition(y) for y in partitions(n))


def test_young_pairs_examples():
    assert young_pairs(0) == (((), ()),)
    assert len(young_pairs(2)) == 5
    assert len(young_pairs(3)) == 10
    ys = young_pairs(4)
    assert list(ys) == sorted(ys)
    assert all(sum(a) + sum(b) == 4 for a, b in ys)
    assert len(set(ys)) == len(ys)


def test_count_rank_one():
    assert [count_rank_one(n) for n in range(6)] == [1, 2, 5, 10, 20, 36]
    coeffs = series_coefficients(10)
    for n in range(11):
        assert count_rank_one(n) == len(young_pairs(n)) == coeffs[n]


def test_rank_one_examples():
    pts = enumerate_fixed_points(1, 1, 0, 1, [1])
    assert [fp.pairs for fp in pts] == [(((), (1,)),), (((1,), ()),)]
    for p in range(1, 6):
        for i in range(p):
            w = [0] * p
            w[i] = 1
            pts = enumerate_fixed_points(p, 1, i, 0, w)
            assert len(pts) == 1
            assert pts[0] == FixedPoint((((), ()),), (i,))


def test_determinant_congruence():
    with pytest.raises(ValueError):
        enumerate_fixed_points(2, 2, 0, 1, [1, 1])
    with pytest.raises(ValueError):
        enumerate_fixed_points(2, 2, 1, 1, [1, 1, 0])
    with pytest.raises(ValueError):
        enumerate_fixed_points(2, 2, 1, -1, [1, 1])


def brute_force(p, r, u, Delta, w, box=3, max_n=3):
    residues = [i for i, wi in enumerate(w) for _ in range(wi)]
    out = []
    for u_vec in product(range(-box, box + 1), repeat=r):
        if sum(u_vec) != u or any((a - i) % p for a, i in zip(u_vec, residues)):
            continue
        for n_vec in product(range(max_n + 1), repeat=r):
            if fixed_point_discriminant(p, r, u_vec, n_vec) != Delta:
                continue
            for pairs in product(*(young_pairs(n) for n in n_vec)):
                out.append(FixedPoint(tuple(pairs), u_vec))
    return sorted(out, key=FixedPoint.sort_key)


@pytest.mark.parametrize(
    "p,r,u,Delta,w",
    [
        (2, 2, 1, Fraction(1, 2), [1, 1]),
        (2, 2, 1, Fraction(1, 8), [1, 1]),
        (2, 2, 1, Fraction(9, 8), [1, 1]),
        (2, 2, 1, Fraction(17, 8), [1, 1]),
        (3, 2, 1, Fraction(1, 12), [1, 1, 0]),
        (3, 2, 1, Fraction(13, 12), [1, 1, 0]),
        (1, 2, 0, 1, [2]),
        (1, 2, 1, Fraction(3, 4), [2]),
        (3, 3, 0, 1, [1, 1, 1]),
        (2, 3, 1, Fraction(11, 8), [2, 1]),
    ],
)
def test_enumeration_matches_brute_force(p, r, u, Delta, w):
    pts = enumerate_fixed_points(p, r, u, Delta, w)
    assert list(pts) == brute_force(p, r, u, Delta, w)
    assert not pts.truncated
    assert count_fixed_points(p, r, u, Delta, w) == len(pts)
    for fp in pts:
        assert fp.is_valid(p, u, Delta, w)


def test_p2_half_discriminant_is_empty():
    # Delta lies in 1/8 + Z for these invariants, so 1/2 admits nothing
    assert fixed_point_discriminant(2, 2, (0, 1), (0, 0)) == Fraction(1, 8)
    assert enumerate_fixed_points(2, 2, 1, Fraction(1, 2), [1, 1]) == []


def test_trivial_framing_p1():
    # Delta = sum n + (1/2) sum u^2 - u^2/(2r) for p = 1
    pts = enumerate_fixed_points(1, 2, 0, 2, [2])
    for fp in pts:
        s = sum(x * x for x in fp.u_vec)
        assert sum(fp.n_vec) + Fraction(s, 2) == 2
    assert {fp.u_vec for fp in pts} == {(0, 0), (-1, 1), (1, -1)}


@pytest.mark.parametrize("p", [1, 2, 3, 5])
def test_rank_one_counts(p):
    for i in range(p):
        w = [0] * p
        w[i] = 1
        for n in range(7):
            assert len(enumerate_fixed_points(p, 1, i + p, n, w)) == count_rank_one(n)
        assert enumerate_fixed_points(p, 1, i, Fraction(1, 2), w) == []


def test_truncation():
    full = enumerate_fixed_points(1, 1, 0, 4, [1])
    assert len(full) == 20 and not full.truncated
    cut = enumerate_fixed_points(1, 1, 0, 4, [1], limit=7)
    assert len(cut) == 7 and cut.truncated
    exact = enumerate_fixed_points(1, 1, 0, 4, [1], limit=20)
    assert len(exact) == 20 and not exact.truncated


def test_deterministic_order():
    a = enumerate_fixed_points(2, 3, 1, Fraction(11, 8), [2, 1])
    b = enumerate_fixed_points(2, 3, 1, Fraction(11, 8), [2, 1])
    assert a == b
    assert list(a) == sorted(a, key=FixedPoint.sort_key)


def test_count_only_large():
    # rank one on the plain surface: q^12 coefficient
    assert count_fixed_points(1, 1, 0, 12, [1]) == series_coefficients(12)[12]
