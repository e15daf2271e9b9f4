import pytest
from hypothesis import given, settings, strategies as st

from scv.core import ResidueRing
from scv.characters import (
    PiAdicElement,
    char_value,
    gauss_monomial,
    gauss_sum,
    jacobi_from_gauss,
    jacobi_sum,
    make_teichmuller,
    teichmuller,
)
from scv.errors import BadRange, PiResidueNonScalar
from scv.gammap import build_gamma_table


@pytest.fixture(scope="module")
def ring11():
    return ResidueRing(11, 2)


@pytest.fixture(scope="module")
def ch11(ring11):
    return make_teichmuller(ring11)


@pytest.fixture(scope="module")
def t11(ring11):
    return build_gamma_table(11, 2)


def test_teichmuller_examples():
    ring = ResidueRing(5, 2)
    assert int(teichmuller(1, ring)) == 1
    assert int(teichmuller(4, ring)) == 24  # omega(-1) = -1
    assert int(teichmuller(2, ring)) == 7
    assert pow(7, 4, 25) == 1


def test_teichmuller_characterization(ch11):
    m = 121
    for x in range(1, 11):
        w = ch11.omega(x)
        assert w % 11 == x
        assert pow(w, 10, m) == 1
    for x in range(11):
        for y in range(11):
            assert ch11.omega(x) * ch11.omega(y) % m == ch11.omega(x * y % 11) % m


def test_char_value_conventions(ring11, ch11):
    assert int(char_value(0, 1, ch11)) == 1
    for n in range(10):
        assert int(char_value(n, 0, ch11)) == 0  # chi(0) = 0, trivial included


def test_orthogonality_both_ways(ch11):
    m = 121
    for n in range(10):
        total = sum(ch11.t_value(n, x) for x in range(11)) % m
        assert total == (10 if n == 0 else 0)
    for x in range(11):
        total = sum(ch11.t_value(n, x) for n in range(10)) % m
        assert total == (10 if x == 1 else 0)


def test_pi_adic_monomial_reduction(ring11):
    # pi^(p-1) = -p
    elem = PiAdicElement.monomial(ring11, 1, 10)
    assert elem == PiAdicElement.scalar(ring11, -11)
    assert int(PiAdicElement.scalar(ring11, 5).scalar_part()) == 5
    with pytest.raises(PiResidueNonScalar):
        PiAdicElement.monomial(ring11, 1, 3).scalar_part()


@given(st.integers(0, 25), st.integers(0, 25), st.integers(1, 120), st.integers(1, 120))
@settings(max_examples=40)
def test_pi_adic_monomial_vs_convolution(d1, d2, u1, u2):
    ring = ResidueRing(11, 2)
    a = PiAdicElement.monomial(ring, u1, d1)
    b = PiAdicElement.monomial(ring, u2, d2)
    assert a * b == PiAdicElement.monomial(ring, u1 * u2, d1 + d2)


def test_pi_adic_ring_ops(ring11):
    a = PiAdicElement.monomial(ring11, 3, 2)
    b = PiAdicElement.monomial(ring11, 4, 2)
    assert (a + b).coeffs[2] == 7
    assert (a - b).coeffs[2] == (3 - 4) % 121
    assert (-a).coeffs[2] == 121 - 3
    assert a.scale(5).coeffs[2] == 15


def test_gauss_sum_examples(ring11, t11):
    g0 = gauss_sum(0, t11, ring11)
    assert int(g0.scalar_part()) == 121 - 1  # G_0 = -1
    with pytest.raises(BadRange):
        gauss_sum(10, t11, ring11)


def test_gauss_product_formula():
    # G(chi) G(chi-bar) = chi(-1) p, instance p = 7, j = 3
    ring = ResidueRing(7, 2)
    t = build_gamma_table(7, 2)
    prod = gauss_sum(3, t, ring) * gauss_sum(3, t, ring)
    assert int(prod.scalar_part()) == (-1) ** 3 * 7 % 49
    prod = gauss_sum(0, t, ring) * gauss_sum(0, t, ring)
    assert int(prod.scalar_part()) == 1


def test_jacobi_sum_basics(ring11, ch11):
    assert int(jacobi_sum([0, 0], ch11)) == 9  # p - 2
    for n in range(1, 10):
        assert int(jacobi_sum([0, n], ch11)) == 120  # -1
    # J(chi, chi-bar) = -chi(-1); instance p = 7, chi = T
    ch7 = make_teichmuller(ResidueRing(7, 2))
    assert int(jacobi_sum([1, 5], ch7)) == (-(-1)) % 49


def test_jacobi_sum_triple_matches_naive(ch11):
    # convolution route against the raw triple loop
    m, p = 121, 11
    for exps in [(1, 2, 3), (0, 1, 1), (5, 5, 5), (2, 0, 0)]:
        naive = 0
        for t1 in range(p):
            for t2 in range(p):
                t3 = (1 - t1 - t2) % p
                term = ch11.t_value(exps[0], t1) * ch11.t_value(exps[1], t2) * ch11.t_value(exps[2], t3)
                naive = (naive + term) % m
        assert int(jacobi_sum(exps, ch11)) == naive


def test_jacobi_from_gauss_all_pairs(ring11, ch11, t11):
    for a in range(10):
        for b in range(10):
            if a == 0 and b == 0:
                continue
            assert int(jacobi_from_gauss([a, b], t11, ring11)) == int(jacobi_sum([a, b], ch11))


def test_jacobi_from_gauss_trivial_product_branch(ring11, ch11, t11):
    # chi1 chi2 = eps: J = -G(chi1)G(chi2)/p, cross-checked via J(chi,chi-bar) = -chi(-1)
    for a in range(1, 10):
        got = int(jacobi_from_gauss([a, 10 - a], t11, ring11))
        assert got == (-((-1) ** a)) % 121
    with pytest.raises(PiResidueNonScalar):
        jacobi_from_gauss([0, 0], t11, ring11)


def test_jacobi_reduction_middle_branch(ch11):
    # all-leading-trivial branch of the reduction, r = 3
    m, p = 121, 11
    for c in range(10):
        full = int(jacobi_sum([0, 0, c], ch11))
        base = int(jacobi_sum([0, 0], ch11))
        want = (100 - (p * base if c else base)) % m
        assert full == want


def test_hasse_davenport_instance():
    # order-2 character at p = 13, all psi
    p, k = 13, 2
    ring = ResidueRing(p, k)
    gamma = build_gamma_table(p, k)
    ch = make_teichmuller(ring)
    step = (p - 1) // 2
    fixed = gauss_sum(step, gamma, ring)
    for e in range(p - 1):
        lhs = gauss_sum(e, gamma, ring) * gauss_sum((step + e) % (p - 1), gamma, ring)
        rhs = gauss_sum(2 * e % (p - 1), gamma, ring) * fixed
        rhs = rhs.scale(ch.t_value(-2 * e, 2))
        assert lhs == rhs


def test_gauss_monomial_reduces_index(t11):
    unit, deg = gauss_monomial(13, t11)
    unit2, deg2 = gauss_monomial(3, t11)
    assert (unit, deg) == (unit2, deg2)
