"""Supercongruence verification toolkit.

Exact residue arithmetic mod prime powers, the p-adic gamma function and
its logarithmic derivatives, Teichmuller characters with Gauss and Jacobi
sums, truncated and p-adic hypergeometric series, eta-quotient coefficient
families, quintic point counts, and a prime-sweep harness that cross-checks
them against each other.
"""

from .core import (
    Residue,
    ResidueRing,
    balanced_lift,
    is_prime,
    legendre,
    primes_in,
    reduce_rational,
    rep_p,
    residue_inv,
)
from .gammap import (
    PadicGammaTable,
    build_gamma_table,
    gamma_at,
    gamma_pair_product,
    gamma_rising_factor,
    harmonic,
    log_derivs,
    shared_gamma_table,
)
from .characters import (
    PiAdicElement,
    TeichmullerChar,
    char_value,
    gauss_sum,
    jacobi_from_gauss,
    jacobi_sum,
    make_teichmuller,
    teichmuller,
)
from .hyperseries import (
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
from .identities import (
    identity_corollary1,
    identity_corollary2,
    identity_theorem1,
    identity_theorem2,
)
from .etaq import EtaQuotientSpec, QSeries, eta_quotient, newform_coeff, newform_series
from .quintic import (
    CharSumABCD,
    CountResult,
    char_sum_ABCD,
    charsum_D_exact,
    count_quintic,
    sign_s,
    theorem51_check,
)

__version__ = "0.1.0"
