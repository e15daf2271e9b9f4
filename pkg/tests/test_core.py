from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from scv.core import (
    ResidueRing,
    balanced_lift,
    is_prime,
    legendre,
    primes_in,
    reduce_rational,
    rep_p,
    residue_inv,
)
from scv.errors import NonUnit, NotPAdicInteger


def test_is_prime_small():
    assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(561)  # Carmichael
    assert is_prime(2**31 - 1)


def test_primes_in_inclusive():
    assert primes_in(7, 13) == [7, 11, 13]
    assert primes_in(8, 10) == []


def test_ring_rejects_composite():
    with pytest.raises(ValueError):
        ResidueRing(9, 2)
    with pytest.raises(ValueError):
        ResidueRing(7, 0)


def test_residue_inv_examples():
    assert int(residue_inv(ResidueRing(3, 2).residue(1))) == 1
    assert int(residue_inv(ResidueRing(3, 2).residue(2))) == 5
    assert int(residue_inv(ResidueRing(7, 2).residue(4))) == 37


def test_residue_inv_nonunit():
    with pytest.raises(NonUnit):
        residue_inv(ResidueRing(7, 2).residue(21))


def test_reduce_rational_examples():
    assert int(reduce_rational(Fraction(1, 2), ResidueRing(3, 2))) == 5
    assert int(reduce_rational(Fraction(9, 64), ResidueRing(3, 2))) == 0
    assert int(reduce_rational(Fraction(11, 6), ResidueRing(5, 2))) == 6
    with pytest.raises(NotPAdicInteger):
        reduce_rational(Fraction(1, 10), ResidueRing(5, 2))


def test_rep_examples():
    assert rep_p(Fraction(1, 3), 7) == 5
    assert rep_p(Fraction(2, 3), 7) == 3  # p + 1 - rep(1/3)
    assert rep_p(Fraction(1, 5), 11) == 9
    with pytest.raises(NotPAdicInteger):
        rep_p(Fraction(1, 7), 7)


def test_legendre_examples():
    assert legendre(2, 7) == 1
    assert legendre(7, 7) == 0
    assert legendre(3, 7) == -1


def test_balanced_lift_examples():
    assert balanced_lift(ResidueRing(3, 3).residue(1)) == 1
    assert balanced_lift(ResidueRing(3, 3).residue(26)) == -1
    assert balanced_lift(ResidueRing(7, 3).residue(340)) == -3


def test_residue_arithmetic():
    ring = ResidueRing(5, 2)
    a, b = ring.residue(7), ring.residue(21)
    assert int(a + b) == 3
    assert int(a - b) == (7 - 21) % 25
    assert int(a * b) == 7 * 21 % 25
    assert int(-a) == 18
    assert int(a**3) == 7**3 % 25


@given(st.sampled_from([(3, 2), (7, 3), (11, 2), (13, 1)]), st.integers(1, 10**6))
def test_inv_involution(ring_args, raw):
    ring = ResidueRing(*ring_args)
    if raw % ring.p == 0:
        raw += 1
    a = ring.residue(raw)
    assert residue_inv(residue_inv(a)) == a
    assert int(a * residue_inv(a)) == 1


@given(st.integers(1, 500), st.integers(1, 500))
def test_legendre_multiplicative(a, b):
    p = 23
    if a % p and b % p:
        assert legendre(a, p) * legendre(b, p) == legendre(a * b, p)


@given(st.sampled_from([7, 11, 13, 31]), st.integers(1, 10**9))
def test_balanced_lift_roundtrip(p, n):
    ring = ResidueRing(p, 3)
    t = balanced_lift(ring.residue(n))
    assert -ring.modulus / 2 < t <= ring.modulus / 2
    assert (t - n) % ring.modulus == 0


@given(st.sampled_from([7, 11, 13, 17, 19]), st.integers(2, 12), st.integers(1, 11))
def test_rep_reflection(p, d, m):
    if m >= d or d >= p:
        return
    assert rep_p(Fraction(d - m, d), p) == p + 1 - rep_p(Fraction(m, d), p)


@given(st.sampled_from([11, 13, 17]), st.integers(2, 9))
def test_rep_floor_forms(p, d):
    a = p % d
    if a == 0 or a >= d:
        return
    assert rep_p(Fraction(a, d), p) == p - (p - 1) // d
    assert rep_p(Fraction(d - a, d), p) == (p - 1) // d + 1
