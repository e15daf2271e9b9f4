"""The p-adic gamma function mod p^k and its logarithmic derivatives.

A table of Gamma_p(n) for 0 <= n < p^k is built once per (p, k) from the
recurrence Gamma_p(0) = 1, Gamma_p(n+1) = -n Gamma_p(n) (or -Gamma_p(n)
when p | n).  Values at p-integral rational arguments come from the table
entry at the argument's residue mod p^k, which is exact to k digits because
x = y (mod p^k) forces Gamma_p(x) = Gamma_p(y) (mod p^k).

The first two logarithmic derivatives are recovered to the precision the
congruence sweeps need (G1 mod p^2, G2 mod p) by finite differences of the
k = 3 table:

    with A = Gamma_p(x+p)/Gamma_p(x) - 1 and B = Gamma_p(x+2p)/Gamma_p(x) - 1
    computed mod p^3,   G2 = (B - 2A)/p^2 (mod p),  G1 = (4A - B)/(2p) (mod p^2).
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import Residue, ResidueRing, rep_p
from .errors import BadPrime, BadRange, CapacityExceeded, NotPAdicInteger, PrecisionTooLow

# Default cap on p for k = 3 tables (p^3 entries); keeps sweeps laptop-safe.
DEFAULT_GAMMA_CAP = 250


@dataclass(frozen=True)
class PadicGammaTable:
    """values[n] = Gamma_p(n) mod p^k for 0 <= n < p^k."""

    ring: ResidueRing
    values: object  # array('q') or list[int], immutable by convention

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def k(self) -> int:
        return self.ring.k

    def at_index(self, n: int) -> int:
        """Raw table read; n must already be a residue mod p^k."""
        return self.values[n]


def build_gamma_table(p: int, k: int, cap: int | None = DEFAULT_GAMMA_CAP) -> PadicGammaTable:
    """One O(p^k) pass over the defining recurrence.

    The cap only restricts k >= 3 builds, whose p^3 entries dominate memory.
    """
    if p % 2 == 0:
        raise BadPrime("p must be an odd prime")
    if not 1 <= k <= 3:
        raise PrecisionTooLow("supported precisions are k = 1, 2, 3")
    if cap is not None and k >= 3 and p > cap:
        raise CapacityExceeded(f"p={p} exceeds the k=3 table cap {cap}")
    ring = ResidueRing(p, k)
    m = ring.modulus
    values = array("q", bytes(8 * m)) if m < 2**62 else [0] * m
    values[0] = 1
    prev = 1
    for n in range(m - 1):
        prev = (-n * prev) % m if n % p else (-prev) % m
        values[n + 1] = prev
    return PadicGammaTable(ring, values)


_TABLE_CACHE: dict[tuple[int, int], PadicGammaTable] = {}
_TABLE_CACHE_MAX = 3


def shared_gamma_table(p: int, k: int, cap: int | None = DEFAULT_GAMMA_CAP) -> PadicGammaTable:
    """Process-wide table reuse across verification cases (tables are immutable)."""
    key = (p, k)
    table = _TABLE_CACHE.get(key)
    if table is None:
        table = build_gamma_table(p, k, cap)
        if len(_TABLE_CACHE) >= _TABLE_CACHE_MAX:
            _TABLE_CACHE.pop(next(iter(_TABLE_CACHE)))
        _TABLE_CACHE[key] = table
    return table


def gamma_at(x, table: PadicGammaTable) -> Residue:
    """Gamma_p(x) mod p^k for a p-integral rational (or integer) x."""
    x = Fraction(x)
    ring = table.ring
    if x.denominator % ring.p == 0:
        raise NotPAdicInteger(f"{x} is not a p-adic integer for p={ring.p}")
    idx = x.numerator * pow(x.denominator, -1, ring.modulus) % ring.modulus
    return Residue(ring, table.values[idx])


def log_derivs(x, table: PadicGammaTable) -> tuple[int, int]:
    """(G1(x) mod p^2, G2(x) mod p) by finite differences of a k = 3 table."""
    if table.k < 3:
        raise PrecisionTooLow("log derivatives need a k = 3 gamma table")
    p = table.p
    if p < 7:
        raise BadPrime("log derivatives are defined here for p >= 7")
    m3 = table.ring.modulus
    x = Fraction(x)
    g0 = int(gamma_at(x, table))
    ginv = pow(g0, -1, m3)
    a = (int(gamma_at(x + p, table)) * ginv - 1) % m3
    b = (int(gamma_at(x + 2 * p, table)) * ginv - 1) % m3
    c = (b - 2 * a) % m3
    if c % (p * p):
        raise NotPAdicInteger("G2 extraction left a non-integral residue")
    g2 = (c // (p * p)) % p
    d = (4 * a - b) % m3
    if d % p:
        raise NotPAdicInteger("G1 extraction left a non-integral residue")
    g1 = (d // p) * pow(2, -1, p * p) % (p * p)
    return g1, g2


@dataclass(frozen=True)
class HarmonicValue:
    """H_n^(i) = sum_{j=1..n} 1/j^i, exact."""

    n: int
    order: int
    value: Fraction

    def reduce(self, ring: ResidueRing) -> Residue:
        return ring.from_rational(self.value)


_H_CACHE: dict[int, list[Fraction]] = {}


def harmonic(n: int, i: int = 1) -> HarmonicValue:
    """Generalised harmonic sum H_n^(i) with H_0 = 0."""
    if n < 0 or i < 1:
        raise BadRange("need n >= 0 and order i >= 1")
    prefix = _H_CACHE.setdefault(i, [Fraction(0)])
    while len(prefix) <= n:
        j = len(prefix)
        prefix.append(prefix[-1] + Fraction(1, j**i))
    return HarmonicValue(n, i, prefix[n])


def _totient(d: int) -> int:
    return sum(1 for i in range(1, d + 1) if gcd(i, d) == 1)


def gamma_rising_factor(m: int, d: int, j: int, table: PadicGammaTable) -> tuple[Residue, int]:
    """Gamma_p(m/d + j) together with its range class.

    Returns (value mod p^k, e) where e = 0 for 0 <= j <= p - rep(m/d) and
    e = 1 for larger j, the range in which the rising factorial (m/d)_j
    picks up one factor of p.
    """
    p = table.p
    if not (1 <= m < d < p):
        raise BadRange("need 1 <= m < d < p")
    if not 0 <= j <= p - 1:
        raise BadRange("need 0 <= j <= p-1")
    r = rep_p(Fraction(m, d), p)
    exponent = 0 if j <= p - r else 1
    return gamma_at(Fraction(m, d) + j, table), exponent


def gamma_pair_product(m: int, d: int, j: int, table: PadicGammaTable) -> tuple[Residue, int]:
    """Gamma_p(m/d + j) * Gamma_p((d-m)/d + j) with its p-power range class.

    Only defined for d with phi(d) <= 2 and gcd(m, d) = 1, where the two
    basic representatives are p - floor((p-1)/d) and floor((p-1)/d) + 1 in
    some order.  The returned exponent e in {0, 1, 2} counts the powers of
    p inside the paired rising factorials (1/d)_j ((d-1)/d)_j:

        e = 0 for j <= floor((p-1)/d),
        e = 1 for floor((p-1)/d) < j < p - floor((p-1)/d),
        e = 2 for j >= p - floor((p-1)/d).
    """
    p = table.p
    if _totient(d) > 2:
        raise BadRange("pair form requires phi(d) <= 2")
    if not (1 <= m < d < p) or gcd(m, d) != 1:
        raise BadRange("need 1 <= m < d < p with gcd(m, d) = 1")
    if not 0 <= j <= p - 1:
        raise BadRange("need 0 <= j <= p-1")
    r = (p - 1) // d
    if j <= r:
        exponent = 0
    elif j <= p - r - 1:
        exponent = 1
    else:
        exponent = 2
    value = gamma_at(Fraction(m, d) + j, table) * gamma_at(Fraction(d - m, d) + j, table)
    return value, exponent
