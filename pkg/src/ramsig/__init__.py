"""Ramanujan-sum signal processing.

Arithmetic-function generators, the finite DFT with its
number-theoretic identities, the Ramanujan-Fourier transform, and
power-spectral-density slope analysis for low-frequency noise.
"""

from .arith import (
    DEFAULT_SIEVE_BUDGET,
    Factorization,
    FactorSieve,
    SieveMemoryError,
    build_sieve,
    factorize,
    gcd,
    is_prime,
    legendre_symbol,
    mangoldt,
    mangoldt_base,
    mobius,
    mobius_phi2_ratio,
    mobius_phi_ratio,
    ramanujan_sum,
    ramanujan_sum_direct,
    ramanujan_sum_period,
    sigma,
    totient,
    totient2,
)
from .estimators import RamanujanTransform, SpectralSlope, WelchPsd
from .sequences import (
    PairCorrelation,
    SummatorySeries,
    b_autocorrelation,
    gen_b,
    gen_b_error,
    gen_mobius_summatory,
    gen_phi_ratio,
    gen_psi_error,
    gen_sigma_ratio,
    hardy_littlewood_c,
    pair_correlation,
    twin_prime_constant,
)
from .spectra import (
    PowerLawFit,
    PsdEstimate,
    default_band,
    fit_power_law,
    psd,
    segment_length_for,
)
from .transforms import (
    DftSpectrum,
    RftSpectrum,
    circular_convolution,
    dft,
    dft_direct,
    gauss_sum,
    idft,
    legendre_dft_deviation,
    rft_forward,
    rft_synthesize,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SIEVE_BUDGET",
    "DftSpectrum",
    "FactorSieve",
    "Factorization",
    "PairCorrelation",
    "PowerLawFit",
    "PsdEstimate",
    "RamanujanTransform",
    "RftSpectrum",
    "SieveMemoryError",
    "SpectralSlope",
    "SummatorySeries",
    "WelchPsd",
    "b_autocorrelation",
    "build_sieve",
    "circular_convolution",
    "default_band",
    "dft",
    "dft_direct",
    "factorize",
    "fit_power_law",
    "gauss_sum",
    "gcd",
    "gen_b",
    "gen_b_error",
    "gen_mobius_summatory",
    "gen_phi_ratio",
    "gen_psi_error",
    "gen_sigma_ratio",
    "hardy_littlewood_c",
    "idft",
    "is_prime",
    "legendre_dft_deviation",
    "legendre_symbol",
    "mangoldt",
    "mangoldt_base",
    "mobius",
    "mobius_phi2_ratio",
    "mobius_phi_ratio",
    "pair_correlation",
    "psd",
    "ramanujan_sum",
    "ramanujan_sum_direct",
    "ramanujan_sum_period",
    "rft_forward",
    "rft_synthesize",
    "segment_length_for",
    "sigma",
    "totient",
    "totient2",
    "twin_prime_constant",
]
