"""Fourier analysis on Z/qZ and the Ramanujan-Fourier transform (RFT).

Two engines live here.  The finite DFT uses the 1-based convention
x_hat(p) = sum_{n=1..q} x(n) exp(-2*pi*i*p*n/q) for p = 1..q, which is
the standard 0-based FFT up to a phase twist and an index rotation; the
fast path goes through ``numpy.fft`` and the literal O(q^2) definition
is kept as an independent oracle.  The RFT projects a sequence onto the
Ramanujan sums c_q(n): the coefficient at order q is the finite mean of
x(n) c_q(n) over the record divided by phi(q).

RFT sums run through ``math.fsum`` (exact compensated summation), so
coefficients are bitwise reproducible regardless of evaluation order.
Long records keep their small coefficients: a plain left-to-right float
sum over 1e6 terms would drown them in roundoff.
"""

import math
from dataclasses import dataclass

import numpy as np

from .arith import (
    build_sieve,
    is_prime,
    legendre_symbol,
    ramanujan_sum,
    ramanujan_sum_period,
    totient,
)
from .validation import check_positive_int, check_series


@dataclass(frozen=True)
class DftSpectrum:
    """DFT coefficients x_hat(p); ``coefficients[i]`` holds p = i + 1."""

    coefficients: np.ndarray
    period: int

    def at(self, p):
        """Coefficient at index p, folded modulo the period (p may be <= 0)."""
        return self.coefficients[(p - 1) % self.period]


@dataclass(frozen=True)
class RftSpectrum:
    """RFT coefficients x_q; ``coefficients[i]`` holds q = i + 1.

    ``sample_count`` records the t used in the finite mean so that
    convergence toward the infinite-record value can be judged.
    """

    coefficients: np.ndarray
    q_max: int
    sample_count: int


def dft(x):
    """DFT of a length-q record (complex input allowed).

    Evaluated through the FFT for any q -- numpy's mixed-radix engine is
    O(q log q) for smooth lengths and still exact to roundoff otherwise.
    """
    a = check_series(x, allow_complex=True)
    q = len(a)
    fft0 = np.fft.fft(a)
    p = np.arange(1, q + 1)
    coeff = np.exp(-2j * np.pi * p / q) * fft0[p % q]
    return DftSpectrum(coefficients=coeff, period=q)


def dft_direct(x):
    """O(q^2) evaluation of the DFT definition; oracle for ``dft``."""
    a = check_series(x, allow_complex=True)
    q = len(a)
    n = np.arange(1, q + 1)
    p = np.arange(1, q + 1)
    kernel = np.exp(-2j * np.pi * np.outer(p, n) / q)
    return DftSpectrum(coefficients=kernel @ a.astype(np.complex128), period=q)


def idft(spectrum):
    """Inverse DFT: x(n) = (1/q) sum_p x_hat(p) exp(2*pi*i*p*n/q).

    Returns the complex sample array x(1..q); for the transform of a
    real record the imaginary residue is at roundoff level.
    """
    coeff = np.asarray(spectrum.coefficients, dtype=np.complex128)
    q = spectrum.period
    k = np.arange(q)
    rotated = coeff[(k - 1) % q] * np.exp(2j * np.pi * k / q)
    return np.fft.ifft(rotated)


def circular_convolution(x, y):
    """Cyclic convolution (x*y)(n) = sum_m x(m) y(n-m) over Z/qZ.

    Satisfies the convolution identity dft(x*y) = dft(x) dft(y).
    """
    a = check_series(x, allow_complex=True, name="x")
    b = check_series(y, allow_complex=True, name="y")
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    conv0 = np.fft.ifft(np.fft.fft(a) * np.fft.fft(b))
    # 0-based circular convolution shifted by one slot restores the
    # 1-based indexing of the transform convention.
    result = np.roll(conv0, 1)
    if not (np.iscomplexobj(np.asarray(x)) or np.iscomplexobj(np.asarray(y))):
        return result.real
    return result


def gauss_sum(q, sieve=None):
    """Quadratic Gauss sum g = sum_p (p/q) exp(2*pi*i*p/q), q an odd prime.

    Its square is +q or -q according to the residue class of q mod 4.
    """
    q = check_positive_int(q, "q")
    if q == 2 or not is_prime(q, sieve):
        raise ValueError(f"q={q} is not an odd prime")
    p = np.arange(1, q + 1)
    symbols = np.array([legendre_symbol(int(v), q, sieve) for v in p], dtype=np.float64)
    return complex(np.sum(symbols * np.exp(2j * np.pi * p / q)))


def legendre_dft_deviation(q, sieve=None):
    """Self-similarity defect of the Legendre sequence under the DFT.

    The DFT of L_q reproduces the sequence up to the Gauss sum factor:
    L_hat(-n) = g L_q(n).  Returns max_n |L_hat(-n) - g L_q(n)|, which
    should sit at roundoff level for every odd prime q.
    """
    q = check_positive_int(q, "q")
    if q == 2 or not is_prime(q, sieve):
        raise ValueError(f"q={q} is not an odd prime")
    seq = np.array([legendre_symbol(n, q, sieve) for n in range(1, q + 1)], dtype=np.float64)
    spectrum = dft(seq)
    g = spectrum.at(-1)
    deviations = [abs(spectrum.at(-n) - g * seq[n - 1]) for n in range(1, q + 1)]
    return float(max(deviations))


def rft_forward(x, q_max=None, sieve=None):
    """RFT coefficients x_q for q = 1..q_max from a finite record.

    x_q = [sum_{n=1..t} x(n) c_q(n)] / (t * phi(q)).  The default
    q_max = floor(sqrt(t)): beyond that there are too few periods of
    c_q in the record for the mean to have stabilized.  One period of
    c_q is precomputed per q and indexed by n mod q, so the cost is
    O(t * q_max) multiply-adds.
    """
    a = check_series(x)
    t = len(a)
    if q_max is None:
        q_max = max(1, math.isqrt(t))
    q_max = check_positive_int(q_max, "q_max")
    if sieve is None:
        sieve = build_sieve(max(2, q_max))
    elif q_max > sieve.limit:
        raise ValueError(f"q_max={q_max} exceeds sieve limit {sieve.limit}")
    coeffs = np.empty(q_max, dtype=np.float64)
    for q in range(1, q_max + 1):
        period = ramanujan_sum_period(q, sieve).astype(np.float64)
        reps = -(-t // q)
        weights = np.tile(period, reps)[:t]
        total = math.fsum((a * weights).tolist())
        coeffs[q - 1] = total / (t * totient(q, sieve))
    return RftSpectrum(coefficients=coeffs, q_max=q_max, sample_count=t)


def rft_synthesize(spectrum, n, sieve=None):
    """Evaluate the truncated expansion sum_{q=1..q_max} x_q c_q(n) at n."""
    n = check_positive_int(n, "n")
    q_max = spectrum.q_max
    if sieve is None:
        sieve = build_sieve(max(2, q_max))
    elif q_max > sieve.limit:
        raise ValueError(f"q_max={q_max} exceeds sieve limit {sieve.limit}")
    terms = [
        spectrum.coefficients[q - 1] * ramanujan_sum(q, n, sieve)
        for q in range(1, q_max + 1)
    ]
    return math.fsum(terms)
