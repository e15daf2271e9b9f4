from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from scv.core import ResidueRing, balanced_int, legendre
from scv.characters import jacobi_sum, make_teichmuller
from scv.errors import BadPrime, NotPAdicInteger, PrecisionTooLow
from scv.etaq import newform_coeff
from scv.gammap import build_gamma_table, gamma_at
from scv.hyperseries import (
    GParams,
    HypParams,
    ScaledResidue,
    apery,
    g_function,
    gaussian_hgs,
    greene_binomial,
    trunc_hyp,
    trunc_hyp_exact,
)

HALF = Fraction(1, 2)


def test_trunc_empty_product():
    ring = ResidueRing(7, 2)
    assert int(trunc_hyp(HypParams((HALF,), (1,), 1, 0), ring)) == 1


def test_trunc_hyp_d1_instance():
    # 1 + 1/4 + 9/64 = 89/64 = -1 (mod 9), the quadratic-symbol value at p=3
    ring = ResidueRing(3, 2)
    val = int(trunc_hyp(HypParams((HALF, HALF), (1,), 1, 2), ring))
    assert val == 8
    assert balanced_int(val, 9) == legendre(-1, 3)


def test_trunc_hyp_conjecture_chain_p7():
    # the quintic-family truncation ties to the eta coefficient at p = 7
    ring = ResidueRing(7, 3)
    fr = [Fraction(i, 5) for i in range(1, 5)]
    val = int(trunc_hyp(HypParams(fr, (1, 1, 1), 1, 6), ring))
    assert balanced_int(val, 343) == newform_coeff("c", 7, 100) == 6


def test_trunc_hyp_rejects_p_in_denominator():
    ring = ResidueRing(5, 2)
    with pytest.raises(NotPAdicInteger):
        trunc_hyp(HypParams((Fraction(1, 5),), (1,), 1, 3), ring)


def test_trunc_hyp_zero_argument_and_dead_upper():
    ring = ResidueRing(7, 2)
    assert int(trunc_hyp(HypParams((HALF,), (1,), 0, 5), ring)) == 1
    # upper parameter -2 kills every term past n = 2
    got = int(trunc_hyp(HypParams((Fraction(-2),), (1,), 1, 30), ring))
    want = trunc_hyp_exact(HypParams((Fraction(-2),), (1,), 1, 30))
    assert got == int(ResidueRing(7, 2).from_rational(want))


def test_lower_param_validation():
    with pytest.raises(ValueError):
        HypParams((HALF,), (Fraction(-1),), 1, 3)
    with pytest.raises(ValueError):
        HypParams((HALF,), (0,), 1, 3)


@given(
    st.sampled_from([7, 11, 13]),
    st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=6), min_size=1, max_size=3),
    st.lists(st.integers(1, 4), min_size=1, max_size=2),
    st.fractions(min_value=-2, max_value=2, max_denominator=6),
    st.integers(0, 25),
)
@settings(max_examples=60, deadline=None)
def test_trunc_hyp_matches_exact_oracle(p, uppers, lowers, z, m):
    if any(a.denominator % p == 0 for a in uppers) or z.denominator % p == 0:
        return
    ring = ResidueRing(p, 2)
    params = HypParams(tuple(uppers), tuple(lowers), z, m)
    # the contract is term-by-term: a single non-integral term raises, even
    # if cancellation would make the full sum integral
    import math

    def poch(x, n):
        out = Fraction(1)
        for i in range(n):
            out *= x + i
        return out

    def term(n):
        t = Fraction(z) ** n / math.factorial(n)
        for a in uppers:
            t *= poch(Fraction(a), n)
        for b in lowers:
            t /= poch(Fraction(b), n)
        return t

    terms_integral = all(term(n).denominator % p for n in range(m + 1))
    if terms_integral:
        exact = trunc_hyp_exact(params)
        assert int(trunc_hyp(params, ring)) == int(ring.from_rational(exact))
    else:
        with pytest.raises(NotPAdicInteger):
            trunc_hyp(params, ring)


def test_apery_examples():
    assert apery(0, "A") == 1
    assert apery(1, "A") == 5
    assert apery(1, "B") == 3
    assert apery(2, "A") == 73
    with pytest.raises(ValueError):
        apery(1, "C")


def test_gparams_validation():
    with pytest.raises(ValueError):
        GParams((Fraction(0),))
    with pytest.raises(ValueError):
        GParams((Fraction(3, 2),))
    assert GParams((Fraction(2, 3), Fraction(1, 3))).fractions == (Fraction(1, 3), Fraction(2, 3))


@pytest.mark.parametrize("p", [7, 11, 13, 97])
@pytest.mark.parametrize("d", [2, 3, 4, 6])
def test_g_function_two_term_congruence(p, d):
    if d >= p:
        return
    k = 2
    ring = ResidueRing(p, k)
    gamma = build_gamma_table(p, k)
    fr = [Fraction(1, d), Fraction(d - 1, d)]
    lhs = int(g_function(GParams(fr), p, k, gamma))
    rhs = int(trunc_hyp(HypParams(fr, (1,), 1, p - 1), ring))
    assert lhs == rhs


def test_g_function_exact_lift_p7():
    gamma = build_gamma_table(7, 3)
    gval = int(g_function(GParams([Fraction(i, 5) for i in range(1, 5)]), 7, 3, gamma))
    # s(7) = -1, so the shifted lift recovers the eta coefficient exactly
    assert balanced_int(gval + 7, 343) == 6


def test_s_sign_both_forms():
    for p in (7, 11, 13, 97):
        gamma = build_gamma_table(p, 1)
        for d1, d2 in ((2, 3), (4, 6), (3, 3)):
            acc = 1
            for d in (d1, d2):
                acc *= int(gamma_at(Fraction(1, d), gamma)) * int(gamma_at(Fraction(d - 1, d), gamma))
            lift = balanced_int(acc, p)
            assert lift == (-1) ** ((p - 1) // d1 + (p - 1) // d2)


def test_greene_binomial_examples():
    p, k = 11, 2
    ring = ResidueRing(p, k)
    chars = make_teichmuller(ring)
    b = greene_binomial(0, 0, chars, ring)
    assert b.scale == 1
    assert b.eq_fraction(Fraction(p - 2, p))
    for n in range(1, p - 1):
        b = greene_binomial(n, n, chars, ring)
        assert b.eq_fraction(Fraction(-1, p))
    # (T over eps) against the direct two-character sum
    b = greene_binomial(1, 0, chars, ring)
    assert int(b.mantissa) == int(jacobi_sum([1, 0], chars))


def test_scaled_residue_precision_rules():
    ring = ResidueRing(7, 2)
    a = ScaledResidue(ring.residue(10), 1)
    b = ScaledResidue(ring.residue(10), 1)
    assert a.digits == 1
    assert a.eq_at_digits(b, 1)
    with pytest.raises(PrecisionTooLow):
        a.eq_at_digits(b, 2)
    with pytest.raises(PrecisionTooLow):
        a.assert_digits(2)
    with pytest.raises(PrecisionTooLow):
        a.times_power(0)
    assert int(a.times_power(1)) == 10
    assert int(a.times_power(2)) == 70 % 49


def test_gaussian_hgs_prop42_instance():
    # p = 11, d = 5: the G function equals (-1)^n p^n F exactly, n = 3
    p, k = 11, 2
    ring = ResidueRing(p, k)
    chars = make_teichmuller(ring)
    gamma = build_gamma_table(p, k)
    f = gaussian_hgs([(i, 5) for i in range(1, 5)], p, k, chars)
    assert f.scale == 3
    lhs = int(g_function(GParams([Fraction(i, 5) for i in range(1, 5)]), p, k, gamma))
    rhs = -int(f.times_power(3)) % ring.modulus
    assert lhs == rhs


def test_gaussian_hgs_cor53_instance():
    p, k = 11, 3
    ring = ResidueRing(p, k)
    chars = make_teichmuller(ring)
    f = gaussian_hgs([(i, 5) for i in range(1, 5)], p, k, chars)
    lift = balanced_int(-int(f.times_power(3)) - p, ring.modulus)  # s(11) = +1
    assert lift == newform_coeff("c", 11, 100) == -43


def test_gaussian_hgs_trivial_family_matches_bruteforce():
    # all-trivial upper characters against an independent raw character sum:
    # every J and chi(-1) below is a plain double loop over omega powers
    p, k = 7, 2
    ring = ResidueRing(p, k)
    chars = make_teichmuller(ring)
    f = gaussian_hgs([(0, 1), (0, 1)], p, k, chars)
    m = ring.modulus

    def chi(s, x):  # T^s(x) from scratch
        return 0 if x % p == 0 else pow(chars.omega(x % p), (-s) % (p - 1), m)

    total = 0
    for s in range(p - 1):
        j_direct = sum(chi(s, t) * chi(-s, 1 - t) for t in range(p)) % m
        term = chi(s, p - 1) * j_direct % m
        total = (total + term * term) % m
    want = total * pow(p - 1, -1, m) % m
    assert f.scale == 1
    assert int(f.mantissa) == want


def test_gaussian_hgs_bad_prime():
    ring = ResidueRing(7, 2)
    chars = make_teichmuller(ring)
    with pytest.raises(BadPrime):
        gaussian_hgs([(1, 5), (4, 5)], 7, 2, chars)
