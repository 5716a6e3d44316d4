"""Smallest-prime-factor sieve and integer factorization.

The sieve table is built by the compiled :mod:`cyarith._csieve` kernel when
the extension is available, and by a vectorised numpy sieve otherwise. Both
produce the same table.
"""
from __future__ import annotations

import functools
import logging
import math
from typing import Iterator, Optional, Tuple

import attrs
import numpy as np

from cyarith.errors import InvalidArgumentError, OutOfRangeError
from cyarith.util import OMIT

try:
    from cyarith._csieve import smallest_prime_factors as _compiled_spf
except ImportError:  # extension not built
    _compiled_spf = None

logger = logging.getLogger(__name__)

#: sieve limit used by :func:`default_sieve` before it grows
DEFAULT_SIEVE_LIMIT = 1 << 16

#: arguments above this are factored by trial division in :func:`factor`
MAX_CACHED_SIEVE_LIMIT = 1 << 22


def numpy_spf(limit: int) -> np.ndarray:
    """Eratosthenes variant of the spf table, in numpy.

    Walking primes upward and only filling still-empty cells leaves each
    composite marked by its smallest prime.
    """
    spf = np.zeros(limit + 1, dtype=np.intc)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p::p]
            block[block == 0] = p
    unmarked = np.flatnonzero(spf == 0)
    unmarked = unmarked[unmarked >= 2]
    spf[unmarked] = unmarked
    return spf


def _is_prime_by_trial(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def _check_factors(instance, attribute, value):
    previous = 1
    product = 1
    for p, e in value:
        if p <= previous:
            raise InvalidArgumentError("primes must be strictly increasing")
        if e < 1:
            raise InvalidArgumentError(f"exponent of {p} must be positive")
        if not _is_prime_by_trial(p):
            raise InvalidArgumentError(f"{p} is not prime")
        previous = p
        product *= p ** e
    if product != instance.n:
        raise InvalidArgumentError(f"factors multiply to {product}, not {instance.n}")


@attrs.frozen
class Factorization:
    """Unique factorization ``n = p_1^n_1 ... p_l^n_l`` as ``(p_i, n_i)`` pairs."""

    n: int = attrs.field(validator=attrs.validators.ge(1))
    factors: Tuple[Tuple[int, int], ...] = attrs.field(
        converter=lambda pairs: tuple((int(p), int(e)) for p, e in pairs),
        validator=_check_factors,
    )

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(e for _, e in self.factors)

    def prime_powers(self) -> Tuple[int, ...]:
        """The pairwise coprime blocks p_i^n_i whose product is n."""
        return tuple(p ** e for p, e in self.factors)


def _readonly(table: np.ndarray) -> np.ndarray:
    table.flags.writeable = False
    return table


@attrs.frozen(eq=False)
class SieveTable:
    """Immutable smallest-prime-factor table for 0..limit."""

    limit: int
    spf: np.ndarray = attrs.field(converter=_readonly, repr=False, metadata=OMIT)

    def smallest_factor(self, k: int) -> int:
        if not 2 <= k <= self.limit:
            raise OutOfRangeError(f"{k} outside 2..{self.limit}")
        return int(self.spf[k])

    def is_prime(self, k: int) -> bool:
        if k > self.limit:
            raise OutOfRangeError(f"{k} exceeds sieve limit {self.limit}")
        return k >= 2 and int(self.spf[k]) == k

    def primes(self, upto: Optional[int] = None) -> np.ndarray:
        """Primes p <= upto (default: the whole table), ascending."""
        upto = self.limit if upto is None else upto
        if upto > self.limit:
            raise OutOfRangeError(f"{upto} exceeds sieve limit {self.limit}")
        if upto < 2:
            return np.zeros(0, dtype=np.int64)
        head = self.spf[: upto + 1]
        found = np.flatnonzero(head == np.arange(upto + 1))
        return found[found >= 2].astype(np.int64)


def build_sieve(limit: int) -> SieveTable:
    """Smallest-prime-factor table for 2..limit.

    :raises InvalidArgumentError: if ``limit < 2``
    """
    if limit < 2:
        raise InvalidArgumentError(f"sieve limit must be at least 2, got {limit}")
    if _compiled_spf is not None:
        spf = np.asarray(_compiled_spf(limit))
    else:
        spf = numpy_spf(limit)
    logger.debug("built sieve to %d (%s)", limit, "compiled" if _compiled_spf else "numpy")
    return SieveTable(limit=limit, spf=spf)


@functools.lru_cache(maxsize=8)
def _cached_sieve(limit: int) -> SieveTable:
    return build_sieve(limit)


def default_sieve(at_least: int = DEFAULT_SIEVE_LIMIT) -> SieveTable:
    """A shared sieve covering ``at_least``, sized to the next power of two."""
    limit = DEFAULT_SIEVE_LIMIT
    while limit < at_least:
        limit <<= 1
    return _cached_sieve(limit)


def factorize(n: int, sieve: SieveTable) -> Factorization:
    """Factor ``n`` by repeated smallest-prime-factor lookup.

    :raises InvalidArgumentError: if ``n < 1``
    :raises OutOfRangeError: if ``n`` exceeds the sieve limit
    """
    if n < 1:
        raise InvalidArgumentError(f"cannot factor {n}")
    if n > sieve.limit:
        raise OutOfRangeError(f"{n} exceeds sieve limit {sieve.limit}")
    spf = sieve.spf
    factors = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        factors.append((p, e))
    return _trusted(factors)


def _trusted(factors) -> Factorization:
    # factors from a sieve or trial division are correct by construction;
    # skip the primality re-check in the validator
    n = 1
    for p, e in factors:
        n *= p ** e
    instance = object.__new__(Factorization)
    object.__setattr__(instance, "n", n)
    object.__setattr__(instance, "factors", tuple(factors))
    return instance


def trial_factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division over 2, 3 and 6k±1."""
    if n < 1:
        raise InvalidArgumentError(f"cannot factor {n}")
    factors = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))
    i = 5
    while i * i <= n:
        for p in (i, i + 2):
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e:
                factors.append((p, e))
        i += 6
    if n > 1:
        factors.append((n, 1))
    return _trusted(factors)


def factor(n: int, sieve: Optional[SieveTable] = None) -> Factorization:
    """Factor ``n`` with the sieve when it covers ``n``, trial division otherwise.

    Without an explicit sieve, a shared one is used for arguments up to
    ``MAX_CACHED_SIEVE_LIMIT``.
    """
    if sieve is None and 1 <= n <= MAX_CACHED_SIEVE_LIMIT:
        sieve = default_sieve(n)
    if sieve is not None and n <= sieve.limit:
        return factorize(n, sieve)
    return trial_factorize(n)


def factorizations(n_max: int, sieve: Optional[SieveTable] = None) -> Iterator[Factorization]:
    """Factorizations of 1..n_max in order."""
    if sieve is None or sieve.limit < n_max:
        sieve = build_sieve(max(n_max, 2))
    for n in range(1, n_max + 1):
        yield factorize(n, sieve)
