"""Bernoulli numbers and Fermat quotients, exact and modulo prime powers."""

from fractions import Fraction
from math import comb
from typing import NamedTuple

from .residues import OddPrime

__all__ = [
    "BernoulliResidue",
    "FermatQuotient",
    "bernoulli_exact",
    "bernoulli_mod_p",
    "bernoulli_pm3_mod_p",
    "bernoulli_window_mod_p",
    "fermat_quotient_2",
    "fermat_quotients_all_bases",
    "power_sum_mod",
    "smallest_prime_factors",
]

BERNOULLI_CAP = 400

# Exact Bernoulli numbers B_0..B_n, extended on demand.  The list is
# replaced wholesale (never mutated in place), so concurrent readers in
# one process always see a consistent prefix; workers in a process pool
# each grow their own copy.
_bcache: list[Fraction] = [Fraction(1)]


class BernoulliResidue(NamedTuple):
    """B_(p-3) mod p (or another even-index Bernoulli residue)."""

    p: int
    value: int


class FermatQuotient(NamedTuple):
    """q_2(p) = (2^(p-1) - 1)/p as a canonical residue mod p^3."""

    p: int
    value: int


def bernoulli_exact(n: int) -> Fraction:
    """B_n as an exact rational, by the defining recurrence.

    Convention: sum_{j=0}^{n} binomial(n+1, j) B_j = 0 with B_0 = 1,
    so B_1 = -1/2.  Capped at n <= 400; the recurrence is O(n^2) exact
    rational work and is meant for oracle-scale use.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if n > BERNOULLI_CAP:
        raise ValueError(f"Bernoulli index capped at {BERNOULLI_CAP}, got {n}")
    global _bcache
    if n >= len(_bcache):
        bs = list(_bcache)
        for m in range(len(bs), n + 1):
            acc = Fraction(0)
            for j in range(m):
                acc += comb(m + 1, j) * bs[j]
            bs.append(-acc / (m + 1))
        _bcache = bs
    return _bcache[n]


_spf_cache: list[int] = []


def smallest_prime_factors(n: int) -> list[int]:
    """Sieve of smallest prime factors for 0..n (spf[k] == k iff k is prime).

    The table is cached per process and only ever grows, so repeated
    scans over a prime range pay for one sieve.
    """
    global _spf_cache
    if n >= len(_spf_cache):
        size = max(n + 1, 2 * len(_spf_cache), 1024)
        spf = list(range(size))
        for q in range(2, int(size**0.5) + 1):
            if spf[q] == q:
                for k in range(q * q, size, q):
                    if spf[k] == k:
                        spf[k] = q
        _spf_cache = spf
    return _spf_cache


def power_sum_mod(p: int, exp: int, e: int = 2) -> int:
    """sum_{k=1}^{p-1} k^exp mod p^e.

    k -> k^exp mod p^e is completely multiplicative, so the sieve of
    smallest prime factors turns the sum into one modular exponentiation
    per prime k plus a single multiplication per composite k: O(p) ring
    operations despite the huge exponent.
    """
    p = int(OddPrime(p))
    m = p**e
    spf = smallest_prime_factors(p - 1)
    powv = [0] * p
    powv[1] = 1
    total = 1
    for k in range(2, p):
        s = spf[k]
        v = pow(k, exp, m) if s == k else powv[s] * powv[k // s] % m
        powv[k] = v
        total += v
    return total % m


def bernoulli_mod_p(p: int, index: int) -> int:
    """B_index mod p for an even index with 2 <= index <= p-3, p >= 5.

    Power-sum extraction: with S = sum_{k=1}^{p-1} k^index mod p^2,
    we have S == p * B_index (mod p^2), so B_index == (S/p) mod p.
    Why: sum_{k<p} k^index = (B_{index+1}(p) - B_{index+1})/(index+1)
    expands to binomial(index+1, index) B_index p / (index+1) = B_index p
    plus terms carrying p^2 or more.  The nearest such term involves
    B_{index-1}, which vanishes (odd index >= 3), and the von
    Staudt-Clausen p-part of deeper Bernoulli denominators costs at most
    one factor p against p^3, so everything else dies mod p^2.
    """
    p = int(OddPrime(p))
    if p < 5:
        raise ValueError("p must be >= 5 (for p = 3 use B_0 = 1 directly)")
    if index % 2 != 0 or not 2 <= index <= p - 3:
        raise ValueError(f"index must be even in 2..p-3, got {index}")
    s = power_sum_mod(p, index, 2)
    # p | S is guaranteed by the extraction identity
    if s % p != 0:
        raise AssertionError(f"power sum not divisible by p={p}")
    return (s // p) % p


def bernoulli_pm3_mod_p(p: int) -> BernoulliResidue:
    """B_(p-3) mod p for p >= 5, by power-sum extraction at exponent p-3."""
    p = int(OddPrime(p))
    if p < 5:
        raise ValueError("p must be >= 5 (for p = 3 use B_0 = 1 directly)")
    return BernoulliResidue(p, bernoulli_mod_p(p, p - 3))


def bernoulli_window_mod_p(p: int, offsets: "list[int] | tuple[int, ...]") -> dict[int, int]:
    """B_(p-j) mod p for each odd offset j in `offsets` (3 <= j <= p-2), one pass.

    Single sweep over k = 1..p-1: k^(p-jmax) comes from the multiplicative
    sieve, then consecutive even exponents are reached by repeated
    multiplication with k^2, accumulating each requested power sum.
    Extraction per offset is the same S == p * B (mod p^2) identity as
    bernoulli_mod_p.
    """
    p = int(OddPrime(p))
    if p < 5:
        raise ValueError("p must be >= 5")
    offs = sorted(set(int(j) for j in offsets), reverse=True)
    for j in offs:
        if j % 2 == 0 or not 3 <= j <= p - 2:
            raise ValueError(f"offsets must be odd in 3..p-2, got {j}")
    m = p * p
    jmax = offs[0]
    base_exp = p - jmax
    spf = smallest_prime_factors(p - 1)
    powv = [0] * p
    powv[1] = 1
    acc = {j: 0 for j in offs}
    # exponent ladder per k: p-jmax, p-jmax+2, ..., p-3 (all even)
    steps = [(jmax - j) // 2 for j in offs]
    for k in range(1, p):
        if k == 1:
            v = 1
        else:
            s = spf[k]
            v = pow(k, base_exp, m) if s == k else powv[s] * powv[k // s] % m
            powv[k] = v
        k2 = k * k % m
        t = v
        prev = 0
        for j, st in zip(offs, steps):
            for _ in range(st - prev):
                t = t * k2 % m
            prev = st
            acc[j] += t
    out = {}
    for j in offs:
        s = acc[j] % m
        if s % p != 0:
            raise AssertionError(f"power sum not divisible by p={p}")
        out[j] = (s // p) % p
    return out


def fermat_quotient_2(p: int) -> FermatQuotient:
    """q_2(p) = (2^(p-1) - 1)/p, canonical mod p^3.

    Computed from 2^(p-1) mod p^4 followed by the exact division by p
    that Fermat's little theorem guarantees.
    """
    p = int(OddPrime(p))
    t = pow(2, p - 1, p**4)
    return FermatQuotient(p, ((t - 1) // p) % p**3)


def fermat_quotients_all_bases(p: int) -> list[int]:
    """q_k(p) = (k^(p-1) - 1)/p mod p for k = 0..p-1 (entries 0, 1 are 0).

    Fermat quotients are additive in the base: q_(jk) == q_j + q_k
    (mod p), so one modular exponentiation per prime base extends to all
    composite bases through the smallest-prime-factor sieve.
    """
    p = int(OddPrime(p))
    m = p * p
    spf = smallest_prime_factors(p - 1)
    q = [0] * p
    for k in range(2, p):
        s = spf[k]
        if s == k:
            q[k] = (pow(k, p - 1, m) - 1) // p
        else:
            q[k] = (q[s] + q[k // s]) % p
    return q
