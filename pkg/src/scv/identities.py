"""Binomial-coefficient/harmonic-sum identities checked in exact rationals.

Two families: a partial-fraction identity for

    f(x) = x (1-x)_n (1-x)_m / ((x)_{n+1} (x)_{m+1})

and its weighted companion with bracket C1 * sum_{s=pp-n}^{n} 1/(s-x)
+ C2 * sum_{s=pp-m}^{m} 1/(s-x) for an integer parameter pp with
pp >= m >= n >= pp/2.  Both sides are rational functions of bounded degree,
so exact agreement at more sample points than the degree bound certifies
the identity; samples are drawn from a fixed deterministic sequence of
non-integer rationals, which can never hit the (all integral) poles.

Taking x -> infinity limits gives two closed sums (the "corollary" forms)
evaluated exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from .errors import HypothesisViolated, PoleSample
from .gammap import harmonic


def _H(n: int, order: int = 1) -> Fraction:
    return harmonic(n, order).value


def _poch(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def default_samples(count: int):
    """Deterministic proper fractions a/q, q = 2, 3, ...; never integers."""
    out = []
    q = 2
    while len(out) < count:
        for a in range(1, q):
            if gcd(a, q) == 1:
                out.append(Fraction(a, q))
                if len(out) == count:
                    break
        q += 1
    return out


def _front_weight(m: int, n: int, k: int) -> int:
    return comb(m + k, k) * comb(m, k) * comb(n + k, k) * comb(n, k)


def _bracket_H(m: int, n: int, k: int) -> Fraction:
    return 1 + k * (_H(m + k) + _H(m - k) + _H(n + k) + _H(n - k) - 4 * _H(k))


def _tail_weight(m: int, n: int, k: int) -> Fraction:
    return Fraction((-1) ** (k - n) * comb(m + k, k) * comb(m, k) * comb(n + k, k), comb(k - 1, n))


def identity_corollary1(m: int, n: int) -> Fraction:
    """Difference (-1)^(m+n) minus the two-sum evaluation; zero iff the identity holds."""
    if not 1 <= n <= m:
        raise HypothesisViolated("need 1 <= n <= m")
    total = Fraction(0)
    for k in range(n + 1):
        total += _front_weight(m, n, k) * _bracket_H(m, n, k)
    for k in range(n + 1, m + 1):
        total += _tail_weight(m, n, k)
    return Fraction((-1) ** (m + n)) - total


def identity_theorem1(m: int, n: int, x_samples=None) -> list[Fraction]:
    """Residuals LHS(x) - RHS(x) of the partial-fraction identity.

    With the default sample set (2(m+n) + 3 non-integer rationals, more
    than twice the degree of either side) an all-zero return certifies the
    identity for this (m, n).
    """
    if not 1 <= n <= m:
        raise HypothesisViolated("need 1 <= n <= m")
    if x_samples is None:
        x_samples = default_samples(2 * (m + n) + 3)
    residuals = []
    for x in x_samples:
        x = Fraction(x)
        if x.denominator == 1 and -m <= x <= 0:
            raise PoleSample(f"x = {x} is a pole")
        lhs = x * _poch(1 - x, n) * _poch(1 - x, m) / (_poch(x, n + 1) * _poch(x, m + 1))
        rhs = 1 / x
        for k in range(1, n + 1):
            w = _front_weight(m, n, k)
            rhs += w * (Fraction(-k) / (x + k) ** 2 + _bracket_H(m, n, k) / (x + k))
        for k in range(n + 1, m + 1):
            rhs += _tail_weight(m, n, k) / (x + k)
        residuals.append(lhs - rhs)
    return residuals


def _check_weighted_hypothesis(pp: int, m: int, n: int) -> None:
    if not (pp >= m >= n >= 1) or 2 * n < pp:
        raise HypothesisViolated("need pp >= m >= n >= pp/2 with n >= 1")
    # m = pp would push the harmonic index k + pp - m - 1 to -1 at k = 0 and
    # collide the bracket pole at s = 0 with the 1/x partial fraction
    if m == pp:
        raise HypothesisViolated("need m < pp: the expansion references H_(pp-m-1)")


def _bracket_sums(pp: int, m: int, n: int, c1: Fraction, c2: Fraction, k: int, order: int = 1) -> Fraction:
    return c1 * (_H(k + n, order) - _H(k + pp - n - 1, order)) + c2 * (
        _H(k + m, order) - _H(k + pp - m - 1, order)
    )


def identity_theorem2(pp: int, m: int, n: int, c1, c2, x_samples=None) -> list[Fraction]:
    """Residuals of the weighted partial-fraction identity at each sample."""
    _check_weighted_hypothesis(pp, m, n)
    c1, c2 = Fraction(c1), Fraction(c2)
    if x_samples is None:
        x_samples = default_samples(3 * (m + n) + 6)
    residuals = []
    for x in x_samples:
        x = Fraction(x)
        if x.denominator == 1 and (-m <= x <= 0 or pp - m <= x <= m):
            raise PoleSample(f"x = {x} is a pole")
        bracket = c1 * sum(1 / (s - x) for s in range(pp - n, n + 1)) + c2 * sum(
            1 / (s - x) for s in range(pp - m, m + 1)
        )
        lhs = x * _poch(1 - x, n) * _poch(1 - x, m) / (_poch(x, n + 1) * _poch(x, m + 1)) * bracket
        rhs = _bracket_sums(pp, m, n, c1, c2, 0) / x
        for k in range(1, n + 1):
            w = _front_weight(m, n, k)
            first = _bracket_sums(pp, m, n, c1, c2, k)
            second = _bracket_sums(pp, m, n, c1, c2, k, order=2)
            rhs += w * (
                -k * first / (x + k) ** 2
                + (_bracket_H(m, n, k) * first - k * second) / (x + k)
            )
        for k in range(n + 1, m + 1):
            rhs += _tail_weight(m, n, k) * _bracket_sums(pp, m, n, c1, c2, k) / (x + k)
        residuals.append(lhs - rhs)
    return residuals


def identity_corollary2(pp: int, m: int, n: int, c1, c2) -> Fraction:
    """The x -> infinity limit sum of the weighted identity; zero iff it holds."""
    _check_weighted_hypothesis(pp, m, n)
    c1, c2 = Fraction(c1), Fraction(c2)
    total = Fraction(0)
    for k in range(n + 1):
        first = _bracket_sums(pp, m, n, c1, c2, k)
        second = _bracket_sums(pp, m, n, c1, c2, k, order=2)
        total += _front_weight(m, n, k) * (_bracket_H(m, n, k) * first - k * second)
    for k in range(n + 1, m + 1):
        total += _tail_weight(m, n, k) * _bracket_sums(pp, m, n, c1, c2, k)
    return total
