"""Teichmuller characters, the ramified ring Z_p[pi]/(pi^(p-1) + p),
Gauss sums, and generalised Jacobi sums.

The character-group generator is fixed globally as T = inverse Teichmuller
character, so T^n(x) = omega(x)^(-n); omega itself is the unique lift with
omega(x) = x (mod p) and omega(x)^(p-1) = 1, computed as x^(p^(k-1)) mod p^k.

Gauss sums never touch the additive character directly: G(T^j) enters as
the monomial -pi^j Gamma_p(j/(p-1)), and every consequence we verify is a
polynomial identity whose pi-powers cancel down to scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from .core import Residue, ResidueRing
from .errors import BadRange, PiResidueNonScalar
from .gammap import PadicGammaTable

__all__ = [
    "TeichmullerChar",
    "teichmuller",
    "char_value",
    "PiAdicElement",
    "gauss_sum",
    "gauss_monomial",
    "jacobi_sum",
    "jacobi_from_gauss",
]


@dataclass(frozen=True)
class TeichmullerChar:
    """Table of omega(x) mod p^k for 0 <= x < p, with omega(0) = 0."""

    ring: ResidueRing
    table: tuple

    @property
    def p(self) -> int:
        return self.ring.p

    def omega(self, x: int) -> int:
        return self.table[x % self.p]

    def power_table(self):
        """Dense omega(x)^e table for x in F_p, 0 <= e < p-1 (built lazily)."""
        cached = _POWTAB_CACHE.get((self.p, self.ring.k))
        if cached is None:
            p, m = self.p, self.ring.modulus
            # row 0 is all zeros: chi(0) = 0 for every chi, trivial included
            cached = [[0] * (p - 1)]
            for x in range(1, p):
                w = self.table[x]
                row = [1] * (p - 1)
                acc = 1
                for e in range(1, p - 1):
                    acc = acc * w % m
                    row[e] = acc
                cached.append(row)
            if len(_POWTAB_CACHE) > 12:
                _POWTAB_CACHE.clear()
            _POWTAB_CACHE[(self.p, self.ring.k)] = cached
        return cached

    def t_value(self, n: int, x: int) -> int:
        """T^n(x) = omega(x)^(-n mod (p-1)) as a raw integer mod p^k."""
        x %= self.p
        if x == 0:
            return 0
        return self.power_table()[x][(-n) % (self.p - 1)]


_POWTAB_CACHE: dict = {}
_CHAR_CACHE: dict = {}


def make_teichmuller(ring: ResidueRing) -> TeichmullerChar:
    """omega(x) = x^(p^(k-1)) mod p^k for all x in F_p."""
    key = (ring.p, ring.k)
    cached = _CHAR_CACHE.get(key)
    if cached is None:
        e = ring.p ** (ring.k - 1)
        cached = TeichmullerChar(ring, tuple(pow(x, e, ring.modulus) for x in range(ring.p)))
        if len(_CHAR_CACHE) > 8:
            _CHAR_CACHE.clear()
        _CHAR_CACHE[key] = cached
    return cached


def teichmuller(x: int, ring: ResidueRing) -> Residue:
    """The Teichmuller lift of x mod p into Z/p^k."""
    return Residue(ring, make_teichmuller(ring).omega(x))


def char_value(n: int, x: int, chars: TeichmullerChar) -> Residue:
    """T^n(x), with every character vanishing at x = 0."""
    return Residue(chars.ring, chars.t_value(n, x))


class PiAdicElement:
    """Element of Z_p[pi]/(pi^(p-1) + p) as coefficients mod p^k.

    coeffs[i] multiplies pi^i; products reduce pi^(p-1) -> -p immediately,
    then reduce coefficients mod p^k.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: ResidueRing, coeffs):
        if len(coeffs) != ring.p - 1:
            raise ValueError("coefficient vector must have length p-1")
        self.ring = ring
        self.coeffs = [c % ring.modulus for c in coeffs]

    @classmethod
    def zero(cls, ring: ResidueRing) -> "PiAdicElement":
        return cls(ring, [0] * (ring.p - 1))

    @classmethod
    def scalar(cls, ring: ResidueRing, value: int) -> "PiAdicElement":
        coeffs = [0] * (ring.p - 1)
        coeffs[0] = value % ring.modulus
        return cls(ring, coeffs)

    @classmethod
    def monomial(cls, ring: ResidueRing, unit: int, degree: int) -> "PiAdicElement":
        """unit * pi^degree with the degree reduced by pi^(p-1) = -p."""
        q, r = divmod(degree, ring.p - 1)
        coeffs = [0] * (ring.p - 1)
        coeffs[r] = unit * pow(-ring.p, q, ring.modulus) % ring.modulus
        return cls(ring, coeffs)

    def __add__(self, other: "PiAdicElement") -> "PiAdicElement":
        m = self.ring.modulus
        return PiAdicElement(self.ring, [(a + b) % m for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "PiAdicElement") -> "PiAdicElement":
        m = self.ring.modulus
        return PiAdicElement(self.ring, [(a - b) % m for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "PiAdicElement":
        m = self.ring.modulus
        return PiAdicElement(self.ring, [-a % m for a in self.coeffs])

    def scale(self, c: int) -> "PiAdicElement":
        m = self.ring.modulus
        return PiAdicElement(self.ring, [a * c % m for a in self.coeffs])

    def __mul__(self, other: "PiAdicElement") -> "PiAdicElement":
        n = self.ring.p - 1
        m = self.ring.modulus
        mp = -self.ring.p % m
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                d = i + j
                term = a * b
                if d >= n:
                    d -= n
                    term *= mp
                out[d] = (out[d] + term) % m
        return PiAdicElement(self.ring, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, PiAdicElement) and self.ring == other.ring and self.coeffs == other.coeffs

    def is_scalar(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def scalar_part(self) -> Residue:
        """The pi^0 coefficient; raises unless every higher coefficient vanishes."""
        if not self.is_scalar():
            bad = [i for i, c in enumerate(self.coeffs) if c and i]
            raise PiResidueNonScalar(f"nonzero pi-coefficients at degrees {bad[:4]}")
        return Residue(self.ring, self.coeffs[0])

    def __repr__(self):
        terms = [f"{c}*pi^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def gauss_monomial(j: int, gamma: PadicGammaTable) -> tuple[int, int]:
    """G(T^j) as a raw (unit, pi-degree) pair: G(T^j) = -Gamma_p(j/(p-1)) pi^j.

    j is first reduced into 0..p-2; the returned unit is mod p^k.
    """
    p, m = gamma.p, gamma.ring.modulus
    j %= p - 1
    idx = j * pow(p - 1, -1, m) % m
    return -gamma.values[idx] % m, j


def gauss_sum(j: int, gamma: PadicGammaTable, ring: ResidueRing) -> PiAdicElement:
    """The Gauss sum G(T^j) as a pi-adic monomial (Gross-Koblitz form)."""
    if ring != gamma.ring:
        raise ValueError("gamma table and ring disagree")
    if not 0 <= j <= ring.p - 2:
        raise BadRange("need 0 <= j <= p-2")
    unit, degree = gauss_monomial(j, gamma)
    return PiAdicElement.monomial(ring, unit, degree)


def jacobi_sum(exponents, chars: TeichmullerChar) -> Residue:
    """Generalised Jacobi sum J(T^e1, ..., T^er) over t_1 + ... + t_r = 1.

    r = 2 is a direct O(p) sum; r >= 3 convolves the first r-1 character
    tables over Z/p (O(r p^2)) and pairs the result with the last character.
    """
    exps = list(exponents)
    if len(exps) < 2:
        raise BadRange("need at least two characters")
    p = chars.p
    m = chars.ring.modulus
    powtab = chars.power_table()
    pm1 = p - 1

    def tab(e):
        ne = (-e) % pm1
        return [powtab[x][ne] for x in range(p)]

    if len(exps) == 2:
        t1 = tab(exps[0])
        t2 = tab(exps[1])
        total = 0
        for t in range(p):
            total += t1[t] * t2[(1 - t) % p]
        return Residue(chars.ring, total % m)

    dist = tab(exps[0])
    for e in exps[1:-1]:
        nxt = tab(e)
        out = [0] * p
        for s, a in enumerate(dist):
            if a == 0:
                continue
            for t, b in enumerate(nxt):
                if b:
                    out[(s + t) % p] = (out[(s + t) % p] + a * b) % m
        dist = out
    last = tab(exps[-1])
    total = 0
    for s, a in enumerate(dist):
        if a:
            total += a * last[(1 - s) % p]
    return Residue(chars.ring, total % m)


def jacobi_from_gauss(exponents, gamma: PadicGammaTable, ring: ResidueRing) -> Residue:
    """Jacobi sum rebuilt purely from Gross-Koblitz Gauss-sum monomials.

    Uses the product/quotient relations: J = prod G(chi_i) / G(prod chi_i)
    when the product character is nontrivial, and J = -prod G(chi_i) / p
    when it is trivial.  The pi-degrees always cancel to a multiple of p-1,
    so the result is a scalar; anything else signals an arithmetic bug.
    """
    exps = [e % (ring.p - 1) for e in exponents]
    if len(exps) < 2:
        raise BadRange("need at least two characters")
    if all(e == 0 for e in exps):
        raise PiResidueNonScalar("all-trivial tuple is outside this route; use jacobi_sum")
    p, m = ring.p, ring.modulus
    unit = 1
    degree = 0
    for e in exps:
        u, d = gauss_monomial(e, gamma)
        unit = unit * u % m
        degree += d
    total = sum(exps) % (p - 1)
    if total != 0:
        u, d = gauss_monomial(total, gamma)
        degree -= d
        if degree % (p - 1):
            raise PiResidueNonScalar("pi-degree failed to cancel in the quotient")
        unit = unit * pow(u, -1, m) % m
        unit = unit * pow(-p % m, degree // (p - 1), m) % m
        return Residue(ring, unit)
    # product character trivial: J = -prod G / p, and prod G = unit * (-p)^(degree/(p-1))
    if degree % (p - 1) or degree == 0:
        raise PiResidueNonScalar("pi-degree failed to cancel in the trivial-product branch")
    w = degree // (p - 1)
    value = -unit * pow(-1, w, m) * pow(p, w - 1, m) % m
    return Residue(ring, value)
