from fractions import Fraction

import pytest

from scv.errors import HypothesisViolated, PoleSample
from scv.identities import (
    default_samples,
    identity_corollary1,
    identity_corollary2,
    identity_theorem1,
    identity_theorem2,
)


def test_corollary1_base_cases():
    # m = n = 1: the k = 1 bracket vanishes, leaving exactly (-1)^2 = 1
    assert identity_corollary1(1, 1) == 0
    assert identity_corollary1(2, 1) == 0  # both sides -1
    # m = n leaves the alternating tail empty by construction
    assert identity_corollary1(5, 5) == 0


@pytest.mark.parametrize("m,n", [(3, 2), (7, 4), (10, 10), (12, 1)])
def test_corollary1_spread(m, n):
    assert identity_corollary1(m, n) == 0


def test_corollary1_hypothesis():
    with pytest.raises(HypothesisViolated):
        identity_corollary1(2, 3)


def test_theorem1_single_sample():
    assert identity_theorem1(1, 1, [Fraction(1, 2)]) == [0]


def test_theorem1_certifying_set():
    samples = [Fraction(1, 3), Fraction(2, 3), Fraction(3), Fraction(5), Fraction(7),
               Fraction(-1, 2), Fraction(1, 5), Fraction(4)]
    assert identity_theorem1(2, 1, samples) == [0] * 8


def test_theorem1_zero_of_rising_factorial_is_finite():
    # x = 1 zeroes (1-x)_n on the left; the right side must also collapse to 0
    assert identity_theorem1(3, 2, [Fraction(1)]) == [0]


def test_theorem1_pole_rejected():
    with pytest.raises(PoleSample):
        identity_theorem1(2, 1, [Fraction(-1)])


def test_theorem1_default_samples():
    residuals = identity_theorem1(4, 3)
    assert len(residuals) == 2 * 7 + 3
    assert all(r == 0 for r in residuals)


def test_default_samples_never_integral():
    for x in default_samples(50):
        assert x.denominator > 1


def test_corollary2_examples():
    assert identity_corollary2(4, 3, 2, 1, 1) == 0
    assert identity_corollary2(4, 3, 2, 0, 0) == 0  # trivially zero weights
    assert identity_corollary2(6, 5, 4, Fraction(2, 3), Fraction(-1, 7)) == 0


def test_theorem2_examples():
    assert all(r == 0 for r in identity_theorem2(6, 4, 3, 1, -2))
    assert all(r == 0 for r in identity_theorem2(4, 3, 2, 1, 1, default_samples(20)))


def test_theorem2_hypothesis_violations():
    with pytest.raises(HypothesisViolated):
        identity_theorem2(4, 3, 1, 1, 1)  # n < p/2
    with pytest.raises(HypothesisViolated):
        identity_theorem2(4, 4, 2, 1, 1)  # m = p hits an undefined harmonic index
    with pytest.raises(HypothesisViolated):
        identity_corollary2(5, 6, 3, 1, 1)  # m > p


def test_theorem2_pole_rejected():
    # integers inside [p-m, m] sit under the bracket poles
    with pytest.raises(PoleSample):
        identity_theorem2(6, 5, 4, 1, 1, [Fraction(2)])
