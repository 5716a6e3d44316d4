"""Theta series and sums of s-th powers.

Counts follow the generating-function convention: ordered tuples of
integers, signs distinguished, zeros allowed. Fermat's "single manner"
count (unordered, nonnegative) is :func:`essentially_distinct_two_squares`;
:func:`ordered_signed_multiplicity` converts one into the other.
"""
from __future__ import annotations

import logging
import math
from typing import FrozenSet, List, Tuple

import attrs
import numpy as np

from cyarith.errors import InvalidArgumentError, OutOfRangeError, UnsupportedError
from cyarith.powerseries import TruncatedSeries, ps_mul, ps_pow
from cyarith.sieve import SieveTable
from cyarith.util import iroot

logger = logging.getLogger(__name__)


def _check_power(s: int):
    if s < 2:
        raise InvalidArgumentError(f"power must be at least 2, got {s}")
    if s % 2:
        raise UnsupportedError(f"odd power s={s} is not supported; only even s")


def _check_theta(instance, attribute, value):
    if value[0] != 1:
        raise InvalidArgumentError("theta series must have constant term 1")
    if any(c not in (0, 1, 2) for c in value.coeffs):
        raise InvalidArgumentError("theta coefficients must be 0, 1 or 2")


@attrs.frozen
class Theta:
    """C^(s)(x) = sum over all integers n of x^(n^s), truncated."""

    s: int
    series: TruncatedSeries = attrs.field(validator=_check_theta)

    @property
    def order(self) -> int:
        return self.series.order


def _check_counts(instance, attribute, value):
    if len(value) != instance.order + 1:
        raise InvalidArgumentError("counts must cover 0..order")
    if value[0] < 1:
        raise InvalidArgumentError("the all-zero tuple must be counted")
    if any(c < 0 for c in value):
        raise InvalidArgumentError("counts must be nonnegative")


@attrs.frozen
class RepCountTable:
    """counts[m] = W_t^(s)(m) for 0 <= m <= order."""

    s: int
    t: int
    order: int
    counts: Tuple[int, ...] = attrs.field(converter=tuple, validator=_check_counts)

    def __getitem__(self, m):
        return self.counts[m]

    def __len__(self):
        return len(self.counts)

    def support(self) -> FrozenSet[int]:
        """The representable integers m <= order."""
        return frozenset(m for m, c in enumerate(self.counts) if c)


def generalized_theta(s: int, order: int) -> Theta:
    """1 at x^0 and 2 at every x^(n^s), n >= 1, up to x^order.

    :raises UnsupportedError: for odd s
    """
    _check_power(s)
    if order < 0:
        raise InvalidArgumentError(f"order must be nonnegative, got {order}")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for n in range(1, iroot(order, s) + 1):
        coeffs[n ** s] = 2
    return Theta(s, TruncatedSeries(order, coeffs))


def theta_series(order: int) -> Theta:
    return generalized_theta(2, order)


def waring_counts(s: int, t: int, order: int) -> RepCountTable:
    """Coefficients of [C^(s)(x)]^t."""
    if t < 1:
        raise InvalidArgumentError(f"t must be positive, got {t}")
    theta = generalized_theta(s, order)
    power = ps_pow(theta.series, t)
    logger.debug("W_%d^(%d) computed to order %d", t, s, order)
    return RepCountTable(s, t, order, power.integers())


def four_square_counts(order: int) -> RepCountTable:
    """J(m), the coefficients of I(x) = K(x)^4."""
    return waring_counts(2, 4, order)


def two_square_counts(order: int) -> RepCountTable:
    """S(n) with ordered signed pairs, the coefficients of K(x)^2."""
    return waring_counts(2, 2, order)


def essentially_distinct_two_squares(n: int) -> int:
    """Number of pairs 0 <= a <= b with a^2 + b^2 = n."""
    if n < 0:
        raise InvalidArgumentError(f"n must be nonnegative, got {n}")
    count = 0
    for a in range(math.isqrt(n // 2) + 1):
        rest = n - a * a
        b = math.isqrt(rest)
        if b * b == rest and a <= b:
            count += 1
    return count


def ordered_signed_multiplicity(a: int, b: int) -> int:
    """How many ordered signed pairs one unordered pair {a, b}, a, b >= 0, stands for."""
    if a == 0 and b == 0:
        return 1
    if a == 0 or b == 0 or a == b:
        return 4
    return 8


def correlation_counts(order: int) -> Tuple[int, ...]:
    """R(n), the coefficients of [I(x)]^2 = K(x)^8."""
    return waring_counts(2, 8, order).counts


def primes_4k1_count(n: int, sieve: SieveTable) -> int:
    """t(n), the number of primes p <= n with p = 1 (mod 4)."""
    if n > sieve.limit:
        raise OutOfRangeError(f"{n} exceeds sieve limit {sieve.limit}")
    return int(np.count_nonzero(sieve.primes(n) % 4 == 1))


def dirichlet_balance(n: int, sieve: SieveTable) -> float:
    """t(n) / pi(n)"""
    primes = sieve.primes(n)
    if len(primes) == 0:
        raise InvalidArgumentError(f"no primes up to {n}")
    return primes_4k1_count(n, sieve) / len(primes)


@attrs.frozen
class LemmaGReport:
    s: int
    t: int
    r: int
    order: int
    mismatches: Tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_lemma_g(s: int, t: int, r: int, order: int) -> LemmaGReport:
    """[C^(s)]^(t+r) against [C^(s)]^t * [C^(s)]^r, coefficient by coefficient."""
    if t < 1 or r < 1:
        raise InvalidArgumentError("t and r must be positive")
    theta = generalized_theta(s, order).series
    joint = ps_pow(theta, t + r)
    split = ps_mul(ps_pow(theta, t), ps_pow(theta, r))
    mismatches = tuple(m for m in range(order + 1) if joint[m] != split[m])
    logger.info("lemma G s=%d t=%d r=%d to order %d: %d mismatches", s, t, r, order, len(mismatches))
    return LemmaGReport(s, t, r, order, mismatches)


def _count_tuples(m: int, s: int, t: int, powers: List[int]) -> int:
    # powers[i] = i^s for 0 <= i <= m^(1/s); each nonzero root comes in two signs
    if t == 1:
        r = iroot(m, s)
        if powers[r] != m:
            return 0
        return 1 if r == 0 else 2
    total = 0
    for i, q in enumerate(powers):
        if q > m:
            break
        ways = _count_tuples(m - q, s, t - 1, powers)
        total += ways if i == 0 else 2 * ways
    return total


def brute_force_count(m: int, s: int, t: int) -> int:
    """Enumerate ordered signed t-tuples with |n_i| <= m^(1/s) and sum n_i^s = m."""
    if m < 0:
        raise InvalidArgumentError(f"m must be nonnegative, got {m}")
    _check_power(s)
    if t < 1:
        raise InvalidArgumentError(f"t must be positive, got {t}")
    powers = [i ** s for i in range(iroot(m, s) + 1)]
    return _count_tuples(m, s, t, powers)


def brute_force_table(limit: int, s: int, t: int) -> Tuple[int, ...]:
    """counts[m] for every m <= limit from one walk over all tuples with sum <= limit."""
    _check_power(s)
    if t < 1:
        raise InvalidArgumentError(f"t must be positive, got {t}")
    root = iroot(limit, s)
    powers = [n ** s for n in range(-root, root + 1)]
    counts = [0] * (limit + 1)

    def walk(depth: int, used: int):
        if depth == t:
            counts[used] += 1
            return
        room = limit - used
        for q in powers:
            if q <= room:
                walk(depth + 1, used + q)

    walk(0, 0)
    return tuple(counts)
