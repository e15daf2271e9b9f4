"""Truncated hypergeometric series mod p^k, Apery numbers, the p-adic
hypergeometric G function, and Greene-style finite-field series.

Truncated series use the multiplicative term recurrence

    t_{n+1} = t_n * prod(a_i + n) / prod(b_i + n) * z / (n + 1)

with every term carried as p^val * unit: numerators and denominators of the
small rational factors are stripped of their p-powers before the unit part
is multiplied mod p^k.  Naive modular inversion of whole denominators would
silently fail at the indices where a Pochhammer ratio acquires a p-factor;
the explicit valuation makes those terms reduce correctly (or raise when a
term is genuinely not a p-adic integer).

The G function is the double sum

    -1/(p-1) * sum_{k'=0}^{n+1} (-p)^k' *
        sum_{j=floor(m_k' r_k')+1}^{floor(m_{k'+1} r_{k'+1})} (-1)^(j(n+1))
        Gamma_p(j/(p-1))^(n+1)
        * prod_{i>k'} Gamma_p(m_i/d_i - j/(p-1)) / Gamma_p(m_i/d_i)
        * prod_{i<=k'} Gamma_p(1 + m_i/d_i - j/(p-1)) / Gamma_p(m_i/d_i)

with r_i = (p-1)/d_i and the boundary conventions m_0 = -1, m_{n+2} = p-2,
d_0 = d_{n+2} = p-1.  Arguments may come in any order; evaluation sorts
them ascending.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Residue, ResidueRing
from .errors import BadPrime, NotPAdicInteger, PrecisionTooLow
from .gammap import PadicGammaTable
from .characters import TeichmullerChar, jacobi_sum


def _strip_p(n: int, p: int) -> tuple[int, int]:
    """(valuation, unit) decomposition of a nonzero integer."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class HypParams:
    """Parameters of a truncated pFq evaluation at a rational argument."""

    upper: tuple
    lower: tuple
    argument: Fraction = Fraction(1)
    truncation: int = 0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(Fraction(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(b) for b in self.lower))
        object.__setattr__(self, "argument", Fraction(self.argument))
        for b in self.lower:
            if b.denominator == 1 and b <= 0:
                raise ValueError("lower parameters must avoid 0 and negative integers")
        if self.truncation < 0:
            raise ValueError("truncation must be nonnegative")


def trunc_hyp(params: HypParams, ring: ResidueRing) -> Residue:
    """Partial sum of the hypergeometric series up to the truncation index."""
    p, k, m = ring.p, ring.k, ring.modulus
    for fr in params.upper + params.lower + (params.argument,):
        if fr.denominator % p == 0:
            raise NotPAdicInteger(f"parameter {fr} has p={p} in its denominator")
    zn, zd = params.argument.numerator, params.argument.denominator
    if zn == 0:
        return Residue(ring, 1 % m)
    zval, zunit = _strip_p(zn, p)
    zfac = zunit * pow(zd, -1, m) % m
    upper_inv = [pow(a.denominator, -1, m) for a in params.upper]

    total = 0
    val, unit = 0, 1
    for n in range(params.truncation + 1):
        if val < 0:
            raise NotPAdicInteger(f"term {n} is not a p-adic integer")
        if val < k:
            total = (total + pow(p, val) * unit) % m
        if n == params.truncation:
            break
        dead = False
        den_acc = 1
        for a, ainv in zip(params.upper, upper_inv):
            t = a.numerator + n * a.denominator
            if t == 0:
                dead = True
                break
            v, u = _strip_p(t, p)
            val += v
            unit = unit * (u % m) % m * ainv % m
        if dead:
            break
        for b in params.lower:
            t = b.numerator + n * b.denominator
            v, u = _strip_p(t, p)
            val -= v
            den_acc = den_acc * (u % m) % m
            unit = unit * b.denominator % m
        v, u = _strip_p(n + 1, p)
        val += zval - v
        den_acc = den_acc * (u % m) % m
        unit = unit * zfac % m * pow(den_acc, -1, m) % m
    return Residue(ring, total)


def trunc_hyp_exact(params: HypParams) -> Fraction:
    """Direct exact-rational summation; the independent oracle for trunc_hyp."""
    total = Fraction(0)
    for n in range(params.truncation + 1):
        term = Fraction(1)
        for a in params.upper:
            term *= _pochhammer(a, n)
        for b in params.lower:
            term /= _pochhammer(b, n)
        term *= params.argument**n
        term /= math.factorial(n)
        total += term
    return total


def _pochhammer(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def apery(n: int, kind: str) -> int:
    """Apery numbers: kind "A" squares both binomials, kind "B" only one."""
    if kind == "A":
        return sum(math.comb(n + j, j) ** 2 * math.comb(n, j) ** 2 for j in range(n + 1))
    if kind == "B":
        return sum(math.comb(n + j, j) * math.comb(n, j) ** 2 for j in range(n + 1))
    raise ValueError("kind must be 'A' or 'B'")


@dataclass(frozen=True)
class GParams:
    """Fraction list for the G function; every entry strictly between 0 and 1."""

    fractions: tuple

    def __post_init__(self):
        fracs = tuple(sorted(Fraction(f) for f in self.fractions))
        if not fracs:
            raise ValueError("need at least one fraction")
        if any(not 0 < f < 1 for f in fracs):
            raise ValueError("fractions must lie strictly between 0 and 1")
        object.__setattr__(self, "fractions", fracs)


def g_function(params: GParams, p: int, k: int, gamma: PadicGammaTable) -> Residue:
    """The p-adic hypergeometric G value at the given fractions, mod p^k."""
    if gamma.p != p or gamma.k != k:
        raise ValueError("gamma table does not match (p, k)")
    ring = gamma.ring
    m = ring.modulus
    fracs = params.fractions
    n1 = len(fracs)
    for f in fracs:
        if f.denominator % p == 0:
            raise NotPAdicInteger(f"fraction {f} has p={p} in its denominator")
    pm1 = p - 1
    inv_pm1 = pow(pm1, -1, m)
    table = gamma.values
    # residues of m_i/d_i and their gamma inverses
    base = [f.numerator * pow(f.denominator, -1, m) % m for f in fracs]
    ginv = [pow(table[c], -1, m) for c in base]
    bounds = [-1] + [f.numerator * pm1 // f.denominator for f in fracs] + [p - 2]
    total = 0
    for kp in range(n1 + 1):
        if kp >= k:
            break  # (-p)^kp = 0 mod p^k from here on
        w = pow(-p, kp, m)
        lo, hi = bounds[kp] + 1, bounds[kp + 1]
        for j in range(lo, hi + 1):
            jidx = j * inv_pm1 % m
            t = pow(table[jidx], n1, m)
            for i in range(n1):
                arg = (base[i] + (1 if i < kp else 0) - jidx) % m
                t = t * table[arg] % m * ginv[i] % m
            if (j * n1) % 2:
                t = -t % m
            total = (total + w * t) % m
    return Residue(ring, -inv_pm1 * total % m)


@dataclass(frozen=True)
class ScaledResidue:
    """mantissa * p^(-scale), mantissa known mod p^k.

    Only k - scale digits of the underlying p-adic value are genuine;
    comparisons that would need more raise PrecisionTooLow instead of
    silently passing.
    """

    mantissa: Residue
    scale: int = 0

    @property
    def digits(self) -> int:
        return self.mantissa.ring.k - self.scale

    def assert_digits(self, needed: int) -> None:
        if self.digits < needed:
            raise PrecisionTooLow(f"value carries {self.digits} digits; {needed} required")

    def times_power(self, t: int) -> Residue:
        """Residue of value * p^t; t must absorb the whole scale."""
        if t < self.scale:
            raise PrecisionTooLow("cannot shift below the stored scale without dividing")
        ring = self.mantissa.ring
        return Residue(ring, self.mantissa.value * pow(ring.p, t - self.scale, ring.modulus) % ring.modulus)

    def eq_at_digits(self, other: "ScaledResidue", digits: int) -> bool:
        """Whether the two p-adic values agree modulo p^digits.

        Both values are aligned at the larger scale s; the difference is
        then (a - b) * p^(-s) with a - b known mod p^k, so the comparison
        is decidable only when digits <= k - s.
        """
        ring = self.mantissa.ring
        if other.mantissa.ring != ring:
            raise ValueError("mixed rings")
        s = max(self.scale, other.scale)
        if ring.k - s < digits:
            raise PrecisionTooLow(f"only {ring.k - s} shared digits available; {digits} required")
        a = self.mantissa.value * ring.p ** (s - self.scale)
        b = other.mantissa.value * ring.p ** (s - other.scale)
        return (a - b) % ring.p ** (digits + s) == 0

    def eq_fraction(self, x) -> bool:
        """Exact comparison with a rational, at the mantissa's full precision."""
        ring = self.mantissa.ring
        scaled = Fraction(x) * ring.p**self.scale
        if scaled.denominator % ring.p == 0:
            return False
        return int(ring.from_rational(scaled)) == self.mantissa.value


def greene_binomial(a_exp: int, b_exp: int, chars: TeichmullerChar, ring: ResidueRing) -> ScaledResidue:
    """Finite-field binomial (T^a over T^b) = T^b(-1) J(T^a, T^-b) / p."""
    if chars.ring != ring:
        raise ValueError("character table does not match the ring")
    sign = chars.t_value(b_exp, ring.p - 1)  # T^b(-1)
    j = jacobi_sum([a_exp, -b_exp], chars)
    return ScaledResidue(Residue(ring, sign * j.value % ring.modulus), 1)


def gaussian_hgs(d_list, p: int, k: int, chars: TeichmullerChar) -> ScaledResidue:
    """Greene's hypergeometric character sum at argument 1, unit lower row.

    d_list holds (m_i, d_i) pairs; the i-th upper character is the power
    m_i (p-1)/d_i of the fixed generator, which requires p = 1 (mod d_i).
    Returns a ScaledResidue of scale n (one less than the number of upper
    characters): the full mantissa sum is exact mod p^k, every apparent
    division by p being carried in the scale.
    """
    pairs = [(int(mi), int(di)) for mi, di in d_list]
    for _, di in pairs:
        if (p - 1) % di:
            raise BadPrime(f"need p = 1 (mod {di})")
    if chars.p != p or chars.ring.k != k:
        raise ValueError("character table does not match (p, k)")
    ring = chars.ring
    m = ring.modulus
    pm1 = p - 1
    exps = [mi * pm1 // di for mi, di in pairs]
    n = len(exps) - 1
    total = 0
    for s in range(pm1):
        term = 1
        neg = False
        for a in exps:
            term = term * jacobi_sum([(a + s) % pm1, (-s) % pm1], chars).value % m
            if s % 2:
                neg = not neg
        total = (total - term if neg else total + term) % m
    mant = total * pow(pm1, -1, m) % m
    return ScaledResidue(Residue(ring, mant), n)
