"""The arithmetical functions: d, sigma_t, omega, L_t (Omega), phi, pi, p.

Everything except pi and p reads only the factorization. Values are exact
Python ints. Conventions at n = 1: d = sigma_t = phi = 1, omega = L_t = 0.
"""
from __future__ import annotations

from typing import List

import numpy as np

from cyarith.errors import InvalidArgumentError, OutOfRangeError
from cyarith.sieve import Factorization, SieveTable


def divisor_count(f: Factorization) -> int:
    """d(n) = prod (n_i + 1)"""
    result = 1
    for _, e in f:
        result *= e + 1
    return result


def divisor_power_sum(f: Factorization, t: int) -> int:
    """sigma_t(n) = prod (1 + p_i^t + ... + p_i^(n_i t)); sigma_0 = d"""
    if t < 0:
        raise InvalidArgumentError(f"t must be nonnegative, got {t}")
    result = 1
    for p, e in f:
        q = p ** t
        result *= sum(q ** j for j in range(e + 1))
    return result


def distinct_prime_count(f: Factorization) -> int:
    """omega(n)"""
    return len(f)


def exponent_power_sum(f: Factorization, t: int) -> int:
    """L_t(n) = sum n_i^t; L_1 is Omega(n)."""
    if t < 1:
        raise InvalidArgumentError(f"t must be positive, got {t}")
    return sum(e ** t for _, e in f)


def prime_factor_count(f: Factorization) -> int:
    """Omega(n), prime factors counted with multiplicity"""
    return exponent_power_sum(f, 1)


def euler_totient(f: Factorization) -> int:
    result = 1
    for p, e in f:
        result *= p ** (e - 1) * (p - 1)
    return result


def prime_count_upto(n: int, sieve: SieveTable) -> int:
    """pi(n), the number of primes p <= n."""
    if n > sieve.limit:
        raise OutOfRangeError(f"{n} exceeds sieve limit {sieve.limit}")
    if n < 2:
        return 0
    head = sieve.spf[: n + 1]
    return int(np.count_nonzero(head[2:] == np.arange(2, n + 1)))


def _pentagonal_offsets(n: int):
    # generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ...
    k = 1
    while True:
        for j in (k, -k):
            g = j * (3 * j - 1) // 2
            if g > n:
                return
            yield g, 1 if k % 2 else -1
        k += 1


def partition_counts(n: int) -> List[int]:
    """p(0), ..., p(n) by Euler's pentagonal number recurrence.

    p(m) = sum over generalized pentagonal g <= m of (+1, +1, -1, -1, ...) p(m - g)
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    table = [1] * (n + 1)
    offsets = list(_pentagonal_offsets(n))
    for m in range(1, n + 1):
        total = 0
        for g, sign in offsets:
            if g > m:
                break
            total += sign * table[m - g]
        table[m] = total
    return table


def partition_count(n: int) -> int:
    return partition_counts(n)[n]
