"""Arithmetical signal generators and pair-correlation quantities.

Generators produce the prime-coded sequences whose summatory error
terms carry low-frequency noise: the normalized summatory Mobius
function M(t)/sqrt(t), the relative error of the prime-power counting
sum psi(t), the modified Mangoldt sequence b(n) = Lambda(n) phi(n)/n
and its summatory error, and the pointwise ratios sigma(n)/n and
phi(n)/n.  Tables are filled by vectorized prime sieves in one pass;
the per-n scalar functions in ``arith`` serve as the independent naive
oracle in tests.

The Hardy-Littlewood pair-correlation model C(h) and the empirical
autocorrelation of b(n) live here too.  C(h) as printed in the
literature is nonzero for odd h, which contradicts the twin-prime case
h = 2 it is meant to cover as well as the measured autocorrelation;
both parity conventions are implemented behind the ``parity`` flag
("paper" keeps the printed case split, "empirical" swaps it) rather
than silently fixing one.
"""

import functools
import math
from dataclasses import dataclass

import numpy as np

from .arith import factorize
from .validation import check_positive_int

PARITY_CONVENTIONS = ("paper", "empirical")


@dataclass(frozen=True)
class SummatorySeries:
    """Error/normalized term of a running arithmetical sum at t = 1..T."""

    kind: str
    values: np.ndarray


@dataclass(frozen=True)
class PairCorrelation:
    """Empirical autocorrelation of b(n) next to the model C(h) per lag."""

    lags: np.ndarray
    empirical: np.ndarray
    model: np.ndarray
    twin_prime_constant: float


def _primes_upto(sieve, bound):
    primes = sieve.primes()
    return primes[primes <= bound].tolist()


def _mobius_table(sieve, limit):
    """mu(0..limit) by the prime sieve (independent of per-n factorization)."""
    mu = np.ones(limit + 1, dtype=np.int64)
    mu[0] = 0
    for p in _primes_upto(sieve, limit):
        mu[p::p] *= -1
        square = p * p
        if square <= limit:
            mu[square::square] = 0
    return mu


def _mangoldt_table(sieve, limit):
    """Lambda(0..limit); the log is taken once per prime, not per entry."""
    lam = np.zeros(limit + 1, dtype=np.float64)
    for p in _primes_upto(sieve, limit):
        log_p = math.log(p)
        pk = p
        while pk <= limit:
            lam[pk] = log_p
            pk *= p
    return lam


def _modified_mangoldt_table(sieve, limit):
    """b(0..limit) with b(p**a) = ln(p) (1 - 1/p); zero off prime powers."""
    b = np.zeros(limit + 1, dtype=np.float64)
    for p in _primes_upto(sieve, limit):
        value = math.log(p) * (1.0 - 1.0 / p)
        pk = p
        while pk <= limit:
            b[pk] = value
            pk *= p
    return b


def gen_mobius_summatory(T, sieve):
    """Normalized summatory Mobius function M(t)/sqrt(t) for t = 1..T."""
    T = sieve.check_range(T, "T")
    mu = _mobius_table(sieve, T)
    t = np.arange(1, T + 1, dtype=np.float64)
    values = np.cumsum(mu[1:]) / np.sqrt(t)
    return SummatorySeries(kind="mobius_normalized", values=values)


def gen_psi_error(T, sieve):
    """Relative error of the summatory Mangoldt function, psi(t)/t - 1."""
    T = sieve.check_range(T, "T")
    lam = _mangoldt_table(sieve, T)
    t = np.arange(1, T + 1, dtype=np.float64)
    values = np.cumsum(lam[1:]) / t - 1.0
    return SummatorySeries(kind="psi_error", values=values)


def gen_b(n_max, sieve):
    """Modified Mangoldt sequence b(n) = Lambda(n) phi(n)/n for n = 1..n_max."""
    n_max = sieve.check_range(n_max, "n_max")
    return _modified_mangoldt_table(sieve, n_max)[1:]


def gen_b_error(T, sieve):
    """Relative error of the running sum of b(n), B(t)/t - 1."""
    T = sieve.check_range(T, "T")
    t = np.arange(1, T + 1, dtype=np.float64)
    values = np.cumsum(gen_b(T, sieve)) / t - 1.0
    return SummatorySeries(kind="b_error", values=values)


def gen_sigma_ratio(n_max, sieve):
    """Pointwise divisor-sum ratio sigma(n)/n for n = 1..n_max."""
    n_max = sieve.check_range(n_max, "n_max")
    total = np.zeros(n_max + 1, dtype=np.float64)
    for d in range(1, n_max + 1):
        total[d::d] += d
    return total[1:] / np.arange(1, n_max + 1, dtype=np.float64)


def gen_phi_ratio(n_max, sieve):
    """Pointwise totient ratio phi(n)/n for n = 1..n_max."""
    n_max = sieve.check_range(n_max, "n_max")
    ratio = np.ones(n_max + 1, dtype=np.float64)
    for p in _primes_upto(sieve, n_max):
        ratio[p::p] *= 1.0 - 1.0 / p
    return ratio[1:]


@functools.lru_cache(maxsize=8)
def twin_prime_constant(tol=1e-9):
    """The twin prime constant prod_{p>2} (1 - 1/(p-1)**2) ~ 0.6601618.

    Truncated at a prime bound P with P ln P >= 2/tol; the neglected
    tail of the log-product is about 1/(P ln P) <= tol/2.
    """
    if not 0 < tol < 1e-2:
        raise ValueError(f"tol must be in (0, 1e-2), got {tol}")
    target = 2.0 / tol
    bound = target
    for _ in range(10):
        bound = target / max(math.log(bound), 1.0)
    bound = max(int(bound) + 1, 1000)
    flags = np.ones(bound + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    odd_primes = np.flatnonzero(flags)[1:].astype(np.float64)
    log_product = np.sum(np.log1p(-1.0 / (odd_primes - 1.0) ** 2))
    return float(math.exp(log_product))


def _odd_prime_divisors(h, sieve=None):
    if sieve is not None and h <= sieve.limit:
        return [p for p, _ in factorize(h, sieve) if p > 2]
    divisors = []
    m = h
    while m % 2 == 0:
        m //= 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            divisors.append(d)
            while m % d == 0:
                m //= d
        d += 2
    if m > 1:
        divisors.append(m)
    return divisors


def hardy_littlewood_c(h, parity="paper", sieve=None, tol=1e-9):
    """Pair-correlation model C(h) = 2 C_2 prod_{p|h, p>2} (p-1)/(p-2).

    ``parity`` selects which residue class of h gets the zero branch:
    "paper" zeroes even h (the printed case split), "empirical" zeroes
    odd h (the convention the measured b-autocorrelation supports).
    """
    h = check_positive_int(h, "h")
    if parity not in PARITY_CONVENTIONS:
        raise ValueError(f"parity must be one of {PARITY_CONVENTIONS}, got {parity!r}")
    zero_on_even = parity == "paper"
    if (h % 2 == 0) == zero_on_even:
        return 0.0
    value = 2.0 * twin_prime_constant(tol)
    for p in _odd_prime_divisors(h, sieve):
        value *= (p - 1) / (p - 2)
    return value


def b_autocorrelation(h, N, sieve):
    """Finite-mean autocorrelation (1/N) sum_{n=1..N} b(n) b(n+h)."""
    h = check_positive_int(h, "h")
    N = check_positive_int(N, "N")
    sieve.check_range(h + N, "h + N")
    b = _modified_mangoldt_table(sieve, N + h)
    return float(np.dot(b[1 : N + 1], b[1 + h : N + h + 1]) / N)


def pair_correlation(h_max, N, parity="paper", sieve=None):
    """Empirical vs model pair correlation for lags h = 1..h_max.

    Builds the b table once, so it is the cheap way to tabulate many
    lags at a large N.
    """
    h_max = check_positive_int(h_max, "h_max")
    N = check_positive_int(N, "N")
    if sieve is None:
        raise ValueError("pair_correlation requires a sieve covering N + h_max")
    sieve.check_range(h_max + N, "h_max + N")
    b = _modified_mangoldt_table(sieve, N + h_max)
    lags = np.arange(1, h_max + 1)
    empirical = np.array(
        [np.dot(b[1 : N + 1], b[1 + h : N + h + 1]) / N for h in lags]
    )
    model = np.array([hardy_littlewood_c(int(h), parity, sieve) for h in lags])
    return PairCorrelation(
        lags=lags,
        empirical=empirical,
        model=model,
        twin_prime_constant=twin_prime_constant(),
    )
