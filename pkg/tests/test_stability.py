import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stacky_framed.stability import (
    FramedNumData,
    HilbertPoly,
    crossover_bound,
    degree_shift,
    delta_rank_zero_verdict,
    delta_semistable_check,
    framed_hilbert,
    generating_sheaf_condition,
    generating_sheaf_condition_numeric,
    good_framing_sheaf_bound,
    good_framing_sheaf_check,
    hat_mu_relation,
    mu_rank_zero_verdict,
    mu_stable_check,
    polarization_threshold,
    poly_leq,
    twist_degree,
)

rat = st.fractions(min_value=-20, max_value=20, max_denominator=12)
pos = st.fractions(min_value=Fraction(1, 12), max_value=10, max_denominator=12)
polys = st.lists(rat, min_size=0, max_size=3).map(HilbertPoly)


def test_framed_hilbert_examples():
    P = HilbertPoly([1, 1, 1])
    delta = HilbertPoly([1, 1])
    assert framed_hilbert(P, 0, delta) == P
    assert framed_hilbert(P, 1, delta) == HilbertPoly([0, 0, 1])
    with pytest.raises(ValueError):
        framed_hilbert(P, 2, delta)


@given(polys, polys, polys, st.sampled_from([(0, 0), (1, 0), (0, 1)]))
def test_framed_hilbert_additive(P1, P2, delta, eps_pair):
    e1, e2 = eps_pair
    total = framed_hilbert(P1 + P2, e1 + e2, delta)
    assert total == framed_hilbert(P1, e1, delta) + framed_hilbert(P2, e2, delta)


def test_poly_leq_examples():
    P = HilbertPoly([1, 2, 3])
    assert poly_leq(P, P) and not poly_leq(P, P, strict=True)
    assert not poly_leq(HilbertPoly([0, 0, Fraction(1, 2)]), HilbertPoly([0, 0, Fraction(1, 3)]))
    # lower degree loses only to a positive leading coefficient
    assert poly_leq(HilbertPoly([100]), HilbertPoly([0, 1]))
    assert not poly_leq(HilbertPoly([-100]), HilbertPoly([0, -1]))


@settings(max_examples=300)
@given(polys, polys)
def test_poly_leq_agrees_with_evaluation(P, Q):
    n0 = crossover_bound(P, Q) + 1
    for n in (n0, 2 * n0 + 3):
        assert poly_leq(P, Q) == (P(n) <= Q(n))
        assert poly_leq(P, Q, strict=True) == (P(n) < Q(n))


@given(polys, polys, polys)
def test_poly_leq_total_preorder(P, Q, R):
    assert poly_leq(P, Q) or poly_leq(Q, P)
    if poly_leq(P, Q) and poly_leq(Q, R):
        assert poly_leq(P, R)
    if poly_leq(P, Q) and poly_leq(Q, P):
        assert P == Q


def test_evaluation_uses_factorial_basis():
    P = HilbertPoly([1, 1, 1])  # n^2/2 + n + 1
    assert P(2) == 5
    assert P.monomial_coeffs() == (1, 1, Fraction(1, 2))


def parent(P, eps=1):
    return FramedNumData(HilbertPoly(P), eps)


def test_delta_empty_subs_stable():
    v = delta_semistable_check(parent([1, 2, 2]), HilbertPoly([1, 1]), [])
    assert v.semistable and v.stable
    assert v.scope == "witness list only"


def test_delta_self_comparison():
    P, delta = HilbertPoly([3, 4, 2]), HilbertPoly([1, 1])
    v = delta_semistable_check(FramedNumData(P, 1), delta, [(P, 2, 1)])
    assert v.semistable and not v.stable


def test_delta_destabilizing_kernel_sub():
    # parent of multiplicity 2 with framed hat-slope (4 - 1)/2; a rank-one
    # kernel sub with hat-slope 3 > 3/2 + delta_1/2 destabilizes
    P, delta = HilbertPoly([0, 4, 2]), HilbertPoly([0, 1])
    sub = HilbertPoly([0, 3, 1])
    v = delta_semistable_check(FramedNumData(P, 1), delta, [(sub, 1, 0)])
    assert not v.semistable and not v.stable
    # a kernel sub sitting exactly at the framed hat-slope
    ok = HilbertPoly([0, Fraction(3, 2), 1])
    v = delta_semistable_check(FramedNumData(P, 1), delta, [(ok, 1, 0)])
    assert v.semistable and not v.stable


def test_delta_rank_zero_conventions():
    delta = HilbertPoly([2])
    # d = 1 here, so a constant polynomial has alpha_1 = 0
    with pytest.raises(ValueError):
        delta_semistable_check(FramedNumData(HilbertPoly([2]), 1), delta, [])
    with pytest.raises(ValueError):
        delta_semistable_check(FramedNumData(HilbertPoly([0, 1]), 1), HilbertPoly([]), [])
    assert delta_rank_zero_verdict(HilbertPoly([2]), delta, True).stable
    v = delta_rank_zero_verdict(HilbertPoly([3]), delta, True)
    assert v.semistable and not v.stable
    assert not delta_rank_zero_verdict(HilbertPoly([2]), delta, False).semistable


sub_triples = st.tuples(
    st.lists(rat, min_size=1, max_size=3).map(HilbertPoly), pos, st.integers(0, 1)
)


@settings(max_examples=300)
@given(st.lists(rat, min_size=2, max_size=2), pos, rat, pos, st.integers(0, 1),
       st.lists(sub_triples, max_size=5))
def test_delta_stable_implies_semistable(low, lead, d0, d1, eps, subs):
    P = HilbertPoly(low + [lead])
    delta = HilbertPoly([d0, d1])
    v = delta_semistable_check(FramedNumData(P, eps), delta, subs)
    for s in v.subs:
        assert s.semistable or not s.stable
    assert v.semistable or not v.stable


def mu_parent(deg, ork, eps=1):
    return FramedNumData(HilbertPoly([]), eps, Fraction(ork), Fraction(deg))


def test_mu_examples():
    assert mu_stable_check(mu_parent(3, 2), Fraction(1, 2), []).stable
    deg, ork, d1 = Fraction(5), Fraction(3), Fraction(1, 2)
    ork_sub = Fraction(1)
    v = mu_stable_check(mu_parent(deg, ork), d1, [(deg * ork_sub / ork, ork_sub, 1)])
    assert v.stable
    mu = (deg - d1) / ork
    v = mu_stable_check(mu_parent(deg, ork), d1, [(ork_sub * mu + d1, ork_sub, 1)])
    assert v.semistable and not v.stable


def test_mu_preconditions():
    with pytest.raises(ValueError):
        mu_stable_check(mu_parent(1, 0), 1, [])
    with pytest.raises(ValueError):
        mu_stable_check(mu_parent(1, 2), 1, [(0, 2, 1)])
    with pytest.raises(ValueError):
        mu_stable_check(mu_parent(1, 2), 1, [(0, 3, 0)])
    assert mu_rank_zero_verdict(1, 1, True).stable
    assert not mu_rank_zero_verdict(1, 2, True).stable


@given(rat, st.integers(2, 6), pos, st.integers(0, 1),
       st.lists(st.tuples(rat, st.integers(1, 5), st.integers(0, 1)), max_size=5))
def test_mu_stable_implies_semistable(deg, ork, d1, eps, subs):
    subs = [(d, min(o, ork - 1) if e else min(o, ork), e) for d, o, e in subs]
    v = mu_stable_check(mu_parent(deg, ork, eps), d1, subs)
    assert v.semistable or not v.stable


def test_hat_mu_relation():
    assert hat_mu_relation(Fraction(3, 2), 2, 1, 3) == 0
    assert hat_mu_relation(5, 2, 1, 3) == 7


@given(rat, rat, pos, pos, rat)
def test_hat_mu_affine(a, b, ork, alpha, beta):
    lhs = hat_mu_relation(a + b, ork, alpha, beta) + beta
    assert lhs == hat_mu_relation(a, ork, alpha, beta) + hat_mu_relation(b, ork, alpha, beta) + 2 * beta


def test_degree_shift():
    assert degree_shift(Fraction(7, 3), 0, 1, 1, 4, Fraction(1, 2)) == Fraction(7, 3)
    assert degree_shift(0, 2, 1, 1, 5, Fraction(1, 5)) == 2
    with pytest.raises(ValueError):
        degree_shift(0, -1, 1, 1, 1, 1)


@given(rat, st.integers(0, 10), st.integers(0, 10), pos, pos, pos, rat)
def test_degree_shift_composes(deg, n1, n2, aD, aDD, ork, c1):
    once = degree_shift(deg, n1 + n2, aD, aDD, ork, c1)
    twice = degree_shift(degree_shift(deg, n1, aD, aDD, ork, c1), n2, aD, aDD, ork, c1)
    assert once == twice


def test_twist_degree():
    assert twist_degree(3, 2, 0) == 3
    assert twist_degree(3, 2, Fraction(1, 2)) == 4
    assert twist_degree(twist_degree(3, 2, Fraction(1, 3)), 2, Fraction(1, 3)) == 3 + 2 * 2 * Fraction(1, 3)


def test_good_framing_sheaf():
    assert good_framing_sheaf_check([1, 1, 1], 1, 1, 1) == (True, 0)
    assert good_framing_sheaf_check([5], 1, 1, 1) == (True, 0)
    good, A0 = good_framing_sheaf_check([0, 1], 1, 1, 1)
    assert A0 == Fraction(1, 2) and not good
    with pytest.raises(ValueError):
        good_framing_sheaf_check([], 1, 1, 1)


@pytest.mark.parametrize("p", range(1, 9))
@pytest.mark.parametrize("r", [1, 2, 5])
def test_good_framing_sheaf_at_infinity(p, r):
    bound = good_framing_sheaf_bound(r, 1, p, p)
    assert bound == Fraction(1, r * p)
    assert good_framing_sheaf_check([0] * r, 1, p, p) == (True, 0)


def test_polarization_threshold():
    assert polarization_threshold(1, 0, 1, 1, 1, 1, 1, 1, 0) == 1
    assert polarization_threshold(1, 0, 0, 1, 1, 1, 1, 1, 5) == 0
    with pytest.raises(ValueError):
        polarization_threshold(2, 1, 1, 1, 1, 1, 1, 1, 0)


@given(st.integers(1, 4), rat, rat)
def test_polarization_threshold_monotone(r, h1, h2):
    lo, hi = sorted((h1, h2))
    a = polarization_threshold(r, 0, 2, 1, 1, 1, 1, 1, lo)
    b = polarization_threshold(r, 0, 2, 1, 1, 1, 1, 1, hi)
    assert b <= a


def complex_condition(k, r):
    for a in range(1, k + 1):
        if k > 1 and math.gcd(a, k) != 1:
            continue
        w = cmath.exp(2j * cmath.pi * a / k)
        if any(abs(sum(w ** (-i * j) for i in range(1, r + 1))) >= 1e-9 for j in range(1, k)):
            return False
    return True


def test_generating_sheaf_examples():
    assert generating_sheaf_condition(1, 7)
    assert generating_sheaf_condition(3, 6) and complex_condition(3, 6)
    assert not generating_sheaf_condition(3, 4) and not complex_condition(3, 4)


@pytest.mark.parametrize("k", range(1, 13))
def test_generating_sheaf_all(k):
    for r in range(1, 49):
        assert generating_sheaf_condition(k, r) == (r % k == 0)
        assert generating_sheaf_condition_numeric(k, r) == generating_sheaf_condition(k, r)
