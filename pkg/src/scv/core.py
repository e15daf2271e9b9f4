"""Exact residue arithmetic modulo prime powers.

Everything downstream (gamma tables, character sums, series truncations)
reduces through this module: residues mod p^k stored as canonical
nonnegative representatives, rationals reduced via modular inversion of
p-unit denominators, and balanced lifts to recover bounded integers from
modular data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NonUnit, NotPAdicInteger

# Witnesses proving primality for every n < 3.3e24 (deterministic Miller-Rabin).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all inputs below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes in the inclusive range lo..hi."""
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


@dataclass(frozen=True)
class ResidueRing:
    """Arithmetic modulo p^k for a verified prime p and exponent k >= 1."""

    p: int
    k: int
    modulus: int = field(init=False, compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("exponent must be >= 1")
        object.__setattr__(self, "modulus", self.p**self.k)

    def residue(self, value: int) -> "Residue":
        return Residue(self, value % self.modulus)

    def from_rational(self, x) -> "Residue":
        return reduce_rational(x, self)

    def __repr__(self):
        return f"ResidueRing(p={self.p}, k={self.k})"


@dataclass(frozen=True)
class Residue:
    """Canonical representative in [0, p^k)."""

    ring: ResidueRing
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            raise ValueError("residue out of range")

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.ring != self.ring:
                raise ValueError("mixed residue rings")
            return other.value
        return int(other)

    def __add__(self, other):
        return Residue(self.ring, (self.value + self._coerce(other)) % self.ring.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.ring, (self.value - self._coerce(other)) % self.ring.modulus)

    def __rsub__(self, other):
        return Residue(self.ring, (self._coerce(other) - self.value) % self.ring.modulus)

    def __mul__(self, other):
        return Residue(self.ring, self.value * self._coerce(other) % self.ring.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.ring, -self.value % self.ring.modulus)

    def __pow__(self, e: int):
        return Residue(self.ring, pow(self.value, e, self.ring.modulus))

    def inverse(self) -> "Residue":
        return residue_inv(self)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.ring.p}^{self.ring.k})"


def residue_inv(a: Residue) -> Residue:
    """Multiplicative inverse mod p^k; raises NonUnit when p | a."""
    if a.value % a.ring.p == 0:
        raise NonUnit(f"{a.value} is not a unit mod {a.ring.p}^{a.ring.k}")
    return Residue(a.ring, pow(a.value, -1, a.ring.modulus))


def reduce_rational(x, ring: ResidueRing) -> Residue:
    """Reduce a rational with p-unit denominator to a residue mod p^k."""
    x = Fraction(x)
    if x.denominator % ring.p == 0:
        raise NotPAdicInteger(f"{x} has p={ring.p} in its denominator")
    m = ring.modulus
    return Residue(ring, x.numerator * pow(x.denominator, -1, m) % m)


def rep_p(x, p: int) -> int:
    """Basic representative of a p-integral rational in {0, ..., p-1}."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPAdicInteger(f"{x} has p={p} in its denominator")
    return x.numerator * pow(x.denominator, -1, p) % p


def legendre(a: int, p: int) -> int:
    """Quadratic-residue symbol via the Euler criterion (p an odd prime)."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def balanced_lift(a: Residue) -> int:
    """The unique integer t with t = a (mod p^k) and -p^k/2 < t <= p^k/2."""
    m = a.ring.modulus
    return a.value if a.value <= m // 2 else a.value - m


def balanced_int(value: int, modulus: int) -> int:
    """balanced_lift for raw (value, modulus) pairs used in hot loops."""
    value %= modulus
    return value if value <= modulus // 2 else value - modulus
