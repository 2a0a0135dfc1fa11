"""Exact verification of Carlitz-type congruences for alternating binomial sums.

The headline family: for an odd prime p and a >= 1,

    sum_{k=0}^{p-1} (-1)^((a-1)k) C(p-1, k)^a
        == 2^(a(p-1)) + a(a-1)(3a-4)/48 * p^3 * B_(p-3)   (mod p^4),

together with its relatives (the central binomial coefficient mod p^3
and p^4, the mod-p^3 power sum statement, the u-sums with two binomial
factors, exact alternating identities) and the half-range and
parity-restricted harmonic sums the proofs run on.

Everything is integer arithmetic: a check compares two canonical
residues and reports equality, never "close enough".
"""

from .bernoulli import (
    BernoulliResidue,
    FermatQuotient,
    bernoulli_exact,
    bernoulli_mod_p,
    bernoulli_pm3_mod_p,
    bernoulli_window_mod_p,
    fermat_quotient_2,
    fermat_quotients_all_bases,
    power_sum_mod,
)
from .congruences import (
    COROLLARY_COEFFICIENTS,
    CongruenceCheck,
    ExcludedTriple,
    alternating_square_sum,
    chamberland_dilcher_exact,
    chamberland_dilcher_u,
    exact_identity_1_3,
    exact_identity_1_4,
    lhs_power_sum,
    lhs_power_sum_exact,
    lhs_power_sums_batch,
    rhs_theorem,
    theorem_coefficient,
    verify_cai_granville,
    verify_carlitz,
    verify_chamberland_dilcher,
    verify_corollary,
    verify_morley,
    verify_p3_special,
    verify_theorem_1_1,
)
from .harmonic import (
    HarmonicProfile,
    even_restricted_sums,
    half_harmonic,
    verify_derived_sums,
    verify_lemma_2_1,
    verify_lemma_2_2,
)
from .residues import (
    NegativeValuation,
    NotInvertible,
    OddPrime,
    Residue,
    ResidueRing,
    batch_invert,
    binom_pm1,
    egcd,
    inverse_range,
    invert_mod,
    is_odd_prime,
    make_ring,
    mod_inv,
    mod_pow,
    reduce_rational,
    signed_central_binomial,
    symmetric_inverse_sums,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BernoulliResidue",
    "FermatQuotient",
    "bernoulli_exact",
    "bernoulli_mod_p",
    "bernoulli_pm3_mod_p",
    "bernoulli_window_mod_p",
    "fermat_quotient_2",
    "fermat_quotients_all_bases",
    "power_sum_mod",
    "COROLLARY_COEFFICIENTS",
    "CongruenceCheck",
    "ExcludedTriple",
    "alternating_square_sum",
    "chamberland_dilcher_exact",
    "chamberland_dilcher_u",
    "exact_identity_1_3",
    "exact_identity_1_4",
    "lhs_power_sum",
    "lhs_power_sum_exact",
    "lhs_power_sums_batch",
    "rhs_theorem",
    "theorem_coefficient",
    "verify_cai_granville",
    "verify_carlitz",
    "verify_chamberland_dilcher",
    "verify_corollary",
    "verify_morley",
    "verify_p3_special",
    "verify_theorem_1_1",
    "HarmonicProfile",
    "even_restricted_sums",
    "half_harmonic",
    "verify_derived_sums",
    "verify_lemma_2_1",
    "verify_lemma_2_2",
    "NegativeValuation",
    "NotInvertible",
    "OddPrime",
    "Residue",
    "ResidueRing",
    "batch_invert",
    "binom_pm1",
    "egcd",
    "inverse_range",
    "invert_mod",
    "is_odd_prime",
    "make_ring",
    "mod_inv",
    "mod_pow",
    "reduce_rational",
    "signed_central_binomial",
    "symmetric_inverse_sums",
]
