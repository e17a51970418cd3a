"""Exact arithmetic functions of classical number theory.

The module is the symbol layer of the package: a smallest-prime-factor
sieve plus the multiplicative functions built on top of it (Mobius,
Euler totient and its order-2 analogue, Mangoldt, divisor sum) and the
Ramanujan sums c_q(n).  Everything here is exact integer/rational
arithmetic; floats appear only in ``mangoldt`` (a logarithm) and in the
root-of-unity oracle ``ramanujan_sum_direct``.

All functions are pure and a ``FactorSieve`` is immutable after
construction, so values may be shared freely across threads.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .validation import check_positive_int

# spf tables are int32 (4 bytes per entry); the budget caps accidental
# multi-gigabyte allocations, not legitimate large runs.
DEFAULT_SIEVE_BUDGET = 512 * 1024 * 1024


class SieveMemoryError(ValueError):
    """Raised when a requested sieve would exceed the memory budget."""


@dataclass(frozen=True)
class FactorSieve:
    """Smallest-prime-factor table for every n in 2..limit.

    ``spf[n]`` is the smallest prime dividing n (``spf[p] == p`` exactly
    when p is prime), which makes factorization an O(log n) chase.
    """

    limit: int
    spf: np.ndarray

    def check_range(self, n, name="n", minimum=1):
        n = check_positive_int(n, name, minimum)
        if n > self.limit:
            raise ValueError(f"{name}={n} outside sieve range 1..{self.limit}")
        return n

    def is_prime(self, n):
        n = self.check_range(n)
        return n >= 2 and int(self.spf[n]) == n

    def primes(self):
        """All primes up to the sieve limit, ascending."""
        idx = np.arange(2, self.limit + 1, dtype=self.spf.dtype)
        return np.flatnonzero(self.spf[2:] == idx) + 2


@dataclass(frozen=True)
class Factorization:
    """Prime decomposition base = prod(p**e), primes strictly increasing."""

    base: int
    factors: tuple

    def __iter__(self):
        return iter(self.factors)


def build_sieve(limit, memory_budget=DEFAULT_SIEVE_BUDGET):
    """Sieve smallest prime factors for all n up to ``limit``.

    O(N log log N) build; rejects limit < 2 and tables that would not
    fit in ``memory_budget`` bytes.
    """
    limit = check_positive_int(limit, "limit", minimum=2)
    needed = 4 * (limit + 1)
    if needed > memory_budget:
        raise SieveMemoryError(
            f"sieve of limit {limit} needs {needed} bytes "
            f"(budget {memory_budget}); raise the budget to proceed"
        )
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    remaining = np.flatnonzero(spf[2:] == 0) + 2
    spf[remaining] = remaining
    return FactorSieve(limit=limit, spf=spf)


def factorize(n, sieve):
    """Prime decomposition of n via the sieve; factorize(1) is empty."""
    n = sieve.check_range(n)
    factors = []
    m = n
    while m > 1:
        p = int(sieve.spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return Factorization(base=n, factors=tuple(factors))


def mobius(n, sieve):
    """Mobius function: 0 on non-squarefree n, else (-1)**(#prime factors)."""
    n = sieve.check_range(n)
    result = 1
    m = n
    while m > 1:
        p = int(sieve.spf[m])
        m //= p
        if m % p == 0:
            return 0
        result = -result
    return result


def totient(q, sieve):
    """Euler totient: the count of 1 <= p <= q coprime to q."""
    q = sieve.check_range(q, "q")
    result = q
    m = q
    while m > 1:
        p = int(sieve.spf[m])
        result = result // p * (p - 1)
        while m % p == 0:
            m //= p
    return result


def totient2(q, sieve):
    """Order-2 totient q**2 * prod(1 - 1/p**2) over primes p | q, exact."""
    q = sieve.check_range(q, "q")
    result = q * q
    m = q
    while m > 1:
        p = int(sieve.spf[m])
        result = result // (p * p) * (p * p - 1)
        while m % p == 0:
            m //= p
    return result


def mangoldt_base(n, sieve):
    """The prime p when n = p**a (a >= 1), else 0.

    Exact companion of ``mangoldt``: summatory code can defer the
    logarithm until after accumulation.
    """
    n = sieve.check_range(n)
    if n == 1:
        return 0
    p = int(sieve.spf[n])
    m = n
    while m % p == 0:
        m //= p
    return p if m == 1 else 0


def mangoldt(n, sieve):
    """Mangoldt function: ln p on prime powers p**a, zero elsewhere."""
    p = mangoldt_base(n, sieve)
    return math.log(p) if p else 0.0


def sigma(n, sieve):
    """Sum of all positive divisors of n, by the multiplicative formula."""
    n = sieve.check_range(n)
    result = 1
    for p, e in factorize(n, sieve):
        result *= (p ** (e + 1) - 1) // (p - 1)
    return result


def gcd(a, b):
    """Greatest common divisor of two nonnegative integers, not both zero."""
    a = check_positive_int(a, "a", minimum=0)
    b = check_positive_int(b, "b", minimum=0)
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def ramanujan_sum(q, n, sieve):
    """Ramanujan sum c_q(n), exactly, via the Mobius/totient closed form.

    c_q(n) = mu(q/g) * phi(q) / phi(q/g) with g = gcd(q, n); an integer
    for every q, n, equal to mu(q) whenever gcd(q, n) = 1, and periodic
    in n with period q.
    """
    q = sieve.check_range(q, "q")
    n = check_positive_int(n, "n")
    g = math.gcd(q, n)
    reduced = q // g
    value = Fraction(mobius(reduced, sieve)) * Fraction(
        totient(q, sieve), totient(reduced, sieve)
    )
    if value.denominator != 1:
        raise ArithmeticError(f"c_{q}({n}) did not reduce to an integer: {value}")
    return int(value)


def ramanujan_sum_period(q, sieve):
    """One period c_q(1..q) as an int64 array.

    c_q(n) depends on n only through gcd(q, n), so the q values are
    filled from one closed-form evaluation per divisor of q.
    """
    q = sieve.check_range(q, "q")
    g = np.gcd(np.arange(1, q + 1, dtype=np.int64), q)
    divisors, positions = np.unique(g, return_inverse=True)
    phi_q = totient(q, sieve)
    values = np.array(
        [
            mobius(q // int(d), sieve) * (phi_q // totient(q // int(d), sieve))
            for d in divisors
        ],
        dtype=np.int64,
    )
    return values[positions]


def ramanujan_sum_direct(q, n):
    """c_q(n) summed literally over the primitive q-th roots of unity.

    Floating-point oracle for ``ramanujan_sum``: adds exp(2*pi*i*p*n/q)
    over all p coprime to q and returns the real part after checking
    that the imaginary part vanished.
    """
    q = check_positive_int(q, "q")
    n = check_positive_int(n, "n")
    p = np.arange(1, q + 1)
    coprime = p[np.gcd(p, q) == 1]
    total = np.exp((2j * np.pi * n / q) * coprime).sum()
    if abs(total.imag) > 1e-9 * max(1.0, abs(total)):
        raise ArithmeticError(
            f"imaginary residue {total.imag:.3e} in root-of-unity sum c_{q}({n})"
        )
    return float(total.real)


def mobius_phi_ratio(q, sieve):
    """mu(q)/phi(q) as an exact rational (RFT model value for b(n))."""
    return Fraction(mobius(q, sieve), totient(q, sieve))


def mobius_phi2_ratio(q, sieve):
    """mu(q)/phi_2(q) as an exact rational (RFT model value for phi(n)/n)."""
    return Fraction(mobius(q, sieve), totient2(q, sieve))


def is_prime(n, sieve=None):
    """Primality test: sieve lookup when possible, else trial division."""
    n = check_positive_int(n, "n", minimum=0)
    if sieve is not None and n <= sieve.limit:
        return n >= 2 and int(sieve.spf[n]) == n
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def legendre_symbol(n, q, sieve=None):
    """Legendre symbol (n/q) for an odd prime q, by Euler's criterion.

    0 when q | n, +1 when n is a nonzero square modulo q, -1 otherwise;
    computed as n**((q-1)/2) mod q mapped into {-1, 0, 1}.
    """
    q = check_positive_int(q, "q")
    if q == 2 or not is_prime(q, sieve):
        raise ValueError(f"q={q} is not an odd prime")
    n = int(n) % q
    if n == 0:
        return 0
    euler = pow(n, (q - 1) // 2, q)
    return -1 if euler == q - 1 else euler
