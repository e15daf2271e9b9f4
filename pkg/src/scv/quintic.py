"""Point counts for the quintic threefold

    x0^5 + x1^5 + x2^5 + x3^5 + x4^5 - 5 x0 x1 x2 x3 x4 = 0  in  P^4(F_p)

by chart enumeration, and the same count reassembled from character sums.

The projective count splits over charts "first nonzero coordinate = 1".
With x0 = 0 the cross term dies and the chart counts reduce to counting
fifth-power representations; the x0 = 1 chart runs over (x1, x2, x3) with
the number of x4 roots of x^5 - a x + b read from a precomputed table.

The character-sum route evaluates

    p N_p = p^4 + p^3 + p^2 + p - 4 + 10A + 10B + 5C + D

where A, B, C, D are torus sums of the additive character.  A, B, C reduce
to closed forms (constants, or Jacobi-sum combinations when p = 1 mod 5
that are recovered exactly by balanced lifts, the sums being bounded by
4p).  D is an e-sum of six Gauss-sum monomials, each a scalar because its
pi-degree is a multiple of p-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Residue, balanced_int
from .characters import TeichmullerChar, gauss_monomial, jacobi_sum
from .errors import BadPrime, CapacityExceeded, PiResidueNonScalar, PrecisionTooLow
from .gammap import PadicGammaTable

DEFAULT_ENUM_CAP = 31


@dataclass(frozen=True)
class CountResult:
    """Projective count with its hyperplane/affine chart split."""

    p: int
    n_points: int
    part_hyperplane: int  # points with x0 = 0, a P^3 count
    part_affine: int  # points with x0 = 1, an A^4 count
    chart_counts: tuple  # (N1, N2, N3, N4) by number of free coordinates


def _fifth_tables(p: int):
    fifth = [pow(x, 5, p) for x in range(p)]
    n5 = [0] * p
    for v in fifth:
        n5[v] += 1
    return fifth, n5


def _roots_table(p: int, fifth):
    """roots[a][b] = number of x in F_p with x^5 - a x + b = 0."""
    roots = [[0] * p for _ in range(p)]
    for a in range(p):
        row = roots[a]
        for x in range(p):
            row[(a * x - fifth[x]) % p] += 1
    return roots


def count_quintic(p: int, cap: int = DEFAULT_ENUM_CAP) -> CountResult:
    """Exact projective count by chart decomposition, O(p^3) after tables."""
    if p == 5:
        raise BadPrime("the quintic degenerates at p = 5")
    if p > cap:
        raise CapacityExceeded(f"p={p} exceeds the enumeration cap {cap}; raise it explicitly")
    fifth, n5 = _fifth_tables(p)
    neg1 = (p - 1) % p
    n_1 = n5[neg1]
    n_2 = sum(n5[(neg1 - fifth[x]) % p] for x in range(p))
    n_3 = 0
    for x2 in range(p):
        c2 = neg1 - fifth[x2]
        for x3 in range(p):
            n_3 += n5[(c2 - fifth[x3]) % p]
    roots = _roots_table(p, fifth)
    n_4 = 0
    for x1 in range(p):
        f1 = 1 + fifth[x1]
        for x2 in range(p):
            f12 = f1 + fifth[x2]
            a12 = 5 * x1 * x2 % p
            for x3 in range(p):
                n_4 += roots[a12 * x3 % p][(f12 + fifth[x3]) % p]
    hyper = n_1 + n_2 + n_3
    return CountResult(p, hyper + n_4, hyper, n_4, (n_1, n_2, n_3, n_4))


def affine_cone_count(p: int) -> int:
    """Zeros of the homogeneous quintic in A^5; equals 1 + (p-1) N_p."""
    fifth, _ = _fifth_tables(p)
    roots = _roots_table(p, fifth)
    total = 0
    for x0 in range(p):
        f0 = fifth[x0]
        for x1 in range(p):
            f01 = f0 + fifth[x1]
            m01 = x0 * x1 % p
            for x2 in range(p):
                f012 = f01 + fifth[x2]
                m012 = 5 * m01 * x2 % p
                for x3 in range(p):
                    total += roots[m012 * x3 % p][(f012 + fifth[x3]) % p]
    return total


def affine_torus_counts(p: int) -> tuple[int, int, int, int]:
    """Brute-force torus solution counts feeding the A, B, C, D oracle."""
    fifth, n5 = _fifth_tables(p)
    roots = _roots_table(p, fifth)
    neg1 = (p - 1) % p
    n1 = n5[neg1]
    n2 = 0
    for x in range(1, p):
        v = (neg1 - fifth[x]) % p
        n2 += n5[v] - (1 if v == 0 else 0)
    n3 = 0
    for x in range(1, p):
        cx = neg1 - fifth[x]
        for y in range(1, p):
            v = (cx - fifth[y]) % p
            n3 += n5[v] - (1 if v == 0 else 0)
    n4 = 0
    for x1 in range(1, p):
        f1 = 1 + fifth[x1]
        for x2 in range(1, p):
            f12 = f1 + fifth[x2]
            a12 = 5 * x1 * x2 % p
            for x3 in range(1, p):
                b = (f12 + fifth[x3]) % p
                n4 += roots[a12 * x3 % p][b] - (1 if b == 0 else 0)
    return n1, n2, n3, n4


def torus_charsum_oracle(p: int) -> tuple[int, int, int, int]:
    """Exact (A, B, C, D) from brute-force counts: X = p*n - (p-1)^j."""
    n1, n2, n3, n4 = affine_torus_counts(p)
    return (
        p * n1 - (p - 1),
        p * n2 - (p - 1) ** 2,
        p * n3 - (p - 1) ** 3,
        p * n4 - (p - 1) ** 4,
    )


def sign_s(p: int) -> int:
    """The sign s(p): +1 when p = 1, 4 (mod 5), -1 when p = 2, 3 (mod 5)."""
    if p % 5 == 0:
        raise BadPrime("s(p) is undefined at p = 5")
    return 1 if p % 5 in (1, 4) else -1


@dataclass(frozen=True)
class CharSumABCD:
    a: int
    b: int
    c: int
    d: Residue


def _gamma_frac_units(gamma: PadicGammaTable):
    """gamma(a/(p-1)) mod p^k indexed by a in 0..p-2."""
    p, m = gamma.p, gamma.ring.modulus
    inv = pow(p - 1, -1, m)
    return [gamma.values[a * inv % m] for a in range(p - 1)]


def _d_esum_core(p: int, gamma: PadicGammaTable, chars: TeichmullerChar) -> int:
    """(p-1) * D0 = sum_e G_{-e}^5 G_{5e} T^{-5e}(-5), a scalar mod p^k."""
    m = gamma.ring.modulus
    pm1 = p - 1
    gu = _gamma_frac_units(gamma)
    w5 = chars.omega((-5) % p)
    w5pow = [1] * pm1
    for e in range(1, pm1):
        w5pow[e] = w5pow[e - 1] * w5 % m
    total = 0
    for e in range(pm1):
        e1 = (-e) % pm1
        e2 = 5 * e % pm1
        sdeg = 5 * e1 + e2
        if sdeg % pm1:
            raise PiResidueNonScalar("pi-degree failed to cancel in the D sum")
        w = sdeg // pm1
        term = pow(gu[e1], 5, m) * gu[e2] % m * pow(-p % m, w, m) % m
        total = (total + term * w5pow[e2]) % m
    return total


def _jacobi_lift_sums(p: int, chars: TeichmullerChar) -> tuple[int, int]:
    """Exact (sum_k J(kt,2kt,2kt), sum_k J(kt,kt,kt)) for p = 1 (mod 5).

    Each sum is a rational integer bounded by 4p, so its balanced lift
    from mod p^k is exact once p^k > 8p (any k >= 2 here, as p >= 11).
    """
    m = chars.ring.modulus
    if m <= 8 * p:
        raise PrecisionTooLow("need k >= 2 to lift the Jacobi sums exactly")
    t = (p - 1) // 5
    s1 = s2 = 0
    for k in range(1, 5):
        s1 += int(jacobi_sum([k * t, 2 * k * t, 2 * k * t], chars))
        s2 += int(jacobi_sum([k * t, k * t, k * t], chars))
    return balanced_int(s1, m), balanced_int(s2, m)


def char_sum_ABCD(p: int, k: int, gamma: PadicGammaTable, chars: TeichmullerChar) -> CharSumABCD:
    """The four torus character sums: A, B, C exact, D as a residue mod p^k."""
    if p == 5 or p == 2:
        raise BadPrime("need an odd prime p != 5")
    if gamma.p != p or gamma.k != k or chars.ring != gamma.ring:
        raise ValueError("tables do not match (p, k)")
    m = gamma.ring.modulus
    d_res = Residue(gamma.ring, _d_esum_core(p, gamma, chars) * pow(p - 1, -1, m) % m)
    if p % 5 != 1:
        return CharSumABCD(1, -1, 1, d_res)
    # p = 1 (mod 5): A = 1 + 4p, with the Gauss-sum evaluation asserted.
    t = (p - 1) // 5
    astar = 0
    for i in range(1, 5):
        u1, d1 = gauss_monomial(i * t, gamma)
        u2, d2 = gauss_monomial(-i * t, gamma)
        if (d1 + d2) % (p - 1):
            raise PiResidueNonScalar("A* monomials failed to pair")
        astar = (astar + u1 * u2 * pow(-p % m, (d1 + d2) // (p - 1), m)) % m
    if astar != 4 * p % m:
        raise PiResidueNonScalar("A* evaluation disagrees with 4p")
    sj1, sj2 = _jacobi_lift_sums(p, chars)
    a = 1 + 4 * p
    b = -1 - 12 * p - 3 * p * sj1
    c = 1 + 36 * p * p + 24 * p + 12 * p * sj1 + 4 * p * sj2
    # full D: 125 monomial products per e
    pm1 = p - 1
    gu = _gamma_frac_units(gamma)
    w5 = chars.omega((-5) % p)
    w5pow = [1] * pm1
    for e in range(1, pm1):
        w5pow[e] = w5pow[e - 1] * w5 % m
    mp_pow = [pow(-p % m, w, m) for w in range(7)]
    total = 0
    for e in range(pm1):
        chi = w5pow[5 * e % pm1]
        subtotal = 0
        for i in range(5):
            for j in range(5):
                for kk in range(5):
                    e1 = (-e + (i + j + kk) * t) % pm1
                    e2 = (-e - i * t) % pm1
                    e3 = (-e - j * t) % pm1
                    e4 = (-e - kk * t) % pm1
                    e5 = (-e) % pm1
                    e6 = 5 * e % pm1
                    sdeg = e1 + e2 + e3 + e4 + e5 + e6
                    if sdeg % pm1:
                        raise PiResidueNonScalar("pi-degree failed to cancel in D")
                    term = gu[e1] * gu[e2] % m * gu[e3] % m * gu[e4] % m * gu[e5] % m * gu[e6] % m
                    subtotal = (subtotal + term * mp_pow[sdeg // pm1]) % m
        total = (total + subtotal * chi) % m
    d_full = Residue(gamma.ring, total * pow(pm1, -1, m) % m)
    return CharSumABCD(a, b, c, d_full)


def charsum_D_exact(p: int, gamma: PadicGammaTable, chars: TeichmullerChar) -> int:
    """Exact integer D recovered from the character-sum route.

    For p != 1 (mod 5) the e-sum itself is D and lies within the balanced
    range of p^3 (its size is governed by the weight-four coefficient
    bound).  For p = 1 (mod 5) the e-sum is only the (i,j,k) = 0 part; the
    remaining 124 triples collapse to Jacobi-sum combinations:

        D = D0 + 24p^3 - 280p^2 - 40p - 20p*sum J(kt,kt,kt) - 30p*sum J(kt,2kt,2kt).
    """
    if gamma.k < 3:
        raise PrecisionTooLow("exact D recovery needs k = 3")
    m = gamma.ring.modulus
    d0 = balanced_int(_d_esum_core(p, gamma, chars) * pow(p - 1, -1, m) % m, m)
    if p % 5 != 1:
        return d0
    sj1, sj2 = _jacobi_lift_sums(p, chars)
    return d0 + 24 * p**3 - 280 * p**2 - 40 * p - 20 * p * sj2 - 30 * p * sj1


def theorem51_check(p: int, gamma: PadicGammaTable, chars: TeichmullerChar) -> int:
    """Balanced lift of -1/(p-1) [1 + (1/p) sum_j G_{-j}^5 G_{5j} T^{-5j}(-5)] - s(p) p.

    The j-sum runs over 1..p-2; each summand carries an explicit pi-degree
    that is a positive multiple of p-1, so dividing by p leaves explicit
    powers (-1)^w p^(w-1) and the whole expression is computed mod p^3
    without any modular division by p.
    """
    if p % 5 == 0 or p < 7:
        raise BadPrime("need a prime p >= 7, p != 5")
    if gamma.k < 3:
        raise PrecisionTooLow("theorem-5.1 checks run at k = 3")
    m = gamma.ring.modulus
    pm1 = p - 1
    gu = _gamma_frac_units(gamma)
    w5 = chars.omega((-5) % p)
    total = 0
    for j in range(1, pm1):
        e1 = pm1 - j
        e2 = 5 * j % pm1
        sdeg = 5 * e1 + e2
        if sdeg % pm1 or sdeg == 0:
            raise PiResidueNonScalar("pi-degree failed to cancel")
        w = sdeg // pm1
        term = pow(gu[e1], 5, m) * gu[e2] % m
        term = term * pow(-1, w, m) % m * pow(p, w - 1, m) % m
        term = term * pow(w5, e2, m) % m
        total = (total + term) % m
    value = -pow(pm1, -1, m) * (1 + total) % m
    value = (value - sign_s(p) * p) % m
    return balanced_int(value, m)
