"""Euler-product identities driven by prime-local data.

A :class:`LocalFactorSpec` gives theta(p, a) and K(p, a). They induce

    alpha(n) = prod theta(p_i, n_i)      beta(n) = sum K(p_i, n_i)

and the identity

    prod_p (1 + sum_a theta(p, a) x^K(p, a) / p^(a k)) = 1 + sum_{n>=2} alpha(n) x^beta(n) / n^k

which is checked two ways: term by term (exact, complete for n <= n_max) and
by evaluating truncations of both sides at a rational x.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple

import attrs
import mpmath

from cyarith import fns, functions
from cyarith.classify import ArithFnHandle
from cyarith.errors import InvalidArgumentError
from cyarith.powerseries import TruncatedSeries, from_coefficients, geometric_factor, one, ps_eval, ps_mul
from cyarith.sieve import Factorization, SieveTable, build_sieve, factorize
from cyarith.util import OMIT, exact_sum, rational

logger = logging.getLogger(__name__)

#: numeric checks pass when |product - sum| is below this
DEFAULT_TOLERANCE = Fraction(1, 1000)

#: bounds along which the Lemma A gap is tracked
DOUBLING_SCHEDULE = (
    (125, 4, 1000),
    (250, 8, 4642),
    (500, 16, 21544),
    (1000, 32, 100000),
)

BUILTIN_SPECS = ("lemma-a", "lemma-b", "lemma-c", "lemma-d")


@attrs.frozen
class LocalFactorSpec:
    """theta(p, a) (exact rational) and K(p, a) (nonnegative integer).

    ``growth`` is an exponent g with |theta(p, a)| <= C p^(a g); the
    numeric sides converge for k > g + 1.
    """

    name: str
    theta: Callable[[int, int], object] = attrs.field(repr=False, metadata=OMIT)
    kappa: Callable[[int, int], int] = attrs.field(repr=False, metadata=OMIT)
    growth: int = 0

    def min_exponent(self) -> int:
        return max(2, self.growth + 2)


@attrs.frozen
class AlphaBeta:
    alpha: Fraction
    beta: int


def alpha_beta(spec: LocalFactorSpec, f: Factorization) -> AlphaBeta:
    alpha = Fraction(1)
    beta = 0
    for p, e in f:
        alpha *= rational(spec.theta(p, e))
        beta += spec.kappa(p, e)
    return AlphaBeta(alpha, beta)


def _sigma_local(t):
    def theta(p, a):
        q = p ** t
        return sum(q ** j for j in range(a + 1))

    return theta


def builtin_spec(which: str, t: Optional[int] = None) -> LocalFactorSpec:
    """Local data for Lemmas A-D.

    lemma-a: theta = 1, K = 1 (x^omega(n) / n^k)
    lemma-b: theta = 1 + p^t + ... + p^(a t), K = 1 (sigma_t(n) x^omega(n))
    lemma-c: theta = 1 + a, K = 1 (d(n) x^omega(n))
    lemma-d: theta = 1, K = a^t (x^L_t(n))
    """
    if which == "lemma-a":
        return LocalFactorSpec("lemma-a", lambda p, a: 1, lambda p, a: 1)
    if which == "lemma-b":
        t = 1 if t is None else t
        if t < 0:
            raise InvalidArgumentError(f"lemma-b needs t >= 0, got {t}")
        return LocalFactorSpec(f"lemma-b(t={t})", _sigma_local(t), lambda p, a: 1, growth=t)
    if which == "lemma-c":
        return LocalFactorSpec("lemma-c", lambda p, a: 1 + a, lambda p, a: 1)
    if which == "lemma-d":
        t = 1 if t is None else t
        if t < 1:
            raise InvalidArgumentError(f"lemma-d needs t >= 1, got {t}")
        return LocalFactorSpec(f"lemma-d(t={t})", lambda p, a: 1, lambda p, a: a ** t)
    raise InvalidArgumentError(f"unknown identity {which!r}")


def direct_functions(which: str, t: Optional[int] = None) -> Tuple[ArithFnHandle, ArithFnHandle]:
    """Independent (alpha, beta) implementations for a builtin spec."""
    t = 1 if t is None else t
    if which == "lemma-a":
        return fns.one, fns.omega
    if which == "lemma-b":
        return fns.sigma(t), fns.omega
    if which == "lemma-c":
        return fns.d, fns.omega
    if which == "lemma-d":
        return fns.one, fns.L(t)
    raise InvalidArgumentError(f"unknown identity {which!r}")


@attrs.frozen
class NumericCheck:
    """Both truncated sides at one set of bounds.

    The exact sides can run to tens of thousands of digits, so they are
    left out of reprs and report documents; use :meth:`difference_mpf`.
    """

    x: Fraction
    k: int
    prime_bound: int
    exp_bound: int
    n_max: int
    lhs: Fraction = attrs.field(repr=False, metadata=OMIT)
    rhs: Fraction = attrs.field(repr=False, metadata=OMIT)
    difference: Fraction = attrs.field(repr=False, metadata=OMIT)

    def difference_mpf(self):
        return mpmath.mpf(self.difference.numerator) / self.difference.denominator

    def tail_estimate(self) -> Fraction:
        """Bound on the sum side's missing tail when |x| <= 1 and alpha = 1."""
        return tail_bound(self.n_max, self.k)


@attrs.frozen
class IdentityCheckReport:
    spec_name: str
    n_max: int
    k: Optional[int] = None
    per_term_failures: Tuple[int, ...] = ()
    numeric_check: Optional[NumericCheck] = None
    tolerance: Optional[Fraction] = None

    @property
    def per_term_passed(self) -> bool:
        return not self.per_term_failures

    @property
    def numeric_passed(self) -> Optional[bool]:
        if self.numeric_check is None or self.tolerance is None:
            return None
        return self.numeric_check.difference < self.tolerance

    @property
    def passed(self) -> bool:
        return self.per_term_passed and self.numeric_passed is not False


def _sieve_for(n: int, sieve: Optional[SieveTable]) -> SieveTable:
    if sieve is not None and sieve.limit >= n:
        return sieve
    return build_sieve(max(n, 2))


def verify_per_term(
    spec: LocalFactorSpec,
    direct_alpha: ArithFnHandle,
    direct_beta: ArithFnHandle,
    n_max: int,
    sieve: Optional[SieveTable] = None,
) -> IdentityCheckReport:
    """Compare alpha_beta(spec, n) with the direct functions for 2 <= n <= n_max.

    Each right-hand term alpha(n) x^beta(n) / n^k arises from exactly one
    choice of one term per prime in the product, so agreement of
    (alpha, beta) for every n is the identity's full symbolic content up to
    n_max.
    """
    if n_max < 2:
        raise InvalidArgumentError(f"n_max must be at least 2, got {n_max}")
    sieve = _sieve_for(n_max, sieve)
    failures = []
    for n in range(2, n_max + 1):
        ab = alpha_beta(spec, factorize(n, sieve))
        if ab.alpha != direct_alpha(n) or ab.beta != direct_beta(n):
            failures.append(n)
    if failures:
        logger.info("%s: %d per-term failures, first at n=%d", spec.name, len(failures), failures[0])
    else:
        logger.info("%s: per-term identity holds for 2..%d", spec.name, n_max)
    return IdentityCheckReport(spec.name, n_max, per_term_failures=tuple(failures))


def _check_exponent(k):
    if k < 2:
        raise InvalidArgumentError(f"k must be at least 2, got {k}")


def truncated_product_eval(
    spec: LocalFactorSpec,
    x,
    k: int,
    prime_bound: int,
    exp_bound: int,
    sieve: Optional[SieveTable] = None,
) -> Fraction:
    """prod_{p <= prime_bound} (1 + sum_{a=1}^{exp_bound} theta(p,a) x^K(p,a) / p^(a k))"""
    _check_exponent(k)
    x = rational(x)
    if prime_bound < 2:
        return Fraction(1)
    sieve = _sieve_for(prime_bound, sieve)
    product = Fraction(1)
    for p in sieve.primes(prime_bound):
        p = int(p)
        factor_value = Fraction(1)
        for a in range(1, exp_bound + 1):
            factor_value += rational(spec.theta(p, a)) * x ** spec.kappa(p, a) / p ** (a * k)
        product *= factor_value
    return product


def truncated_sum_eval(
    spec: LocalFactorSpec,
    x,
    k: int,
    n_max: int,
    sieve: Optional[SieveTable] = None,
) -> Fraction:
    """1 + sum_{n=2}^{n_max} alpha(n) x^beta(n) / n^k"""
    _check_exponent(k)
    x = rational(x)
    if n_max < 2:
        return Fraction(1)
    sieve = _sieve_for(n_max, sieve)
    a, b = x.numerator, x.denominator

    def terms():
        yield 1, 1
        for n in range(2, n_max + 1):
            ab = alpha_beta(spec, factorize(n, sieve))
            if ab.alpha == 0 or (a == 0 and ab.beta > 0):
                continue
            yield ab.alpha.numerator * a ** ab.beta, ab.alpha.denominator * b ** ab.beta * n ** k

    return exact_sum(terms())


def lemma_a_closed_product(x, k: int, prime_bound: int) -> Fraction:
    """prod_{p <= prime_bound} (1 + x / (p^k - 1)), Lemma A's product in closed form."""
    _check_exponent(k)
    x = rational(x)
    if prime_bound < 2:
        return Fraction(1)
    product = Fraction(1)
    for p in build_sieve(prime_bound).primes(prime_bound):
        product *= ps_eval(geometric_factor(int(p), k, 1), x)
    return product


def numeric_check(
    spec: LocalFactorSpec,
    x,
    k: int,
    prime_bound: int,
    exp_bound: int,
    n_max: int,
) -> NumericCheck:
    sieve = build_sieve(max(prime_bound, n_max, 2))
    lhs = truncated_product_eval(spec, x, k, prime_bound, exp_bound, sieve)
    rhs = truncated_sum_eval(spec, x, k, n_max, sieve)
    logger.debug("%s at bounds (%d, %d, %d): gap computed", spec.name, prime_bound, exp_bound, n_max)
    return NumericCheck(rational(x), k, prime_bound, exp_bound, n_max, lhs, rhs, abs(lhs - rhs))


@attrs.frozen
class ConvergenceSweep:
    spec_name: str
    checks: Tuple[NumericCheck, ...]

    @property
    def gaps(self) -> Tuple[Fraction, ...]:
        return tuple(c.difference for c in self.checks)

    @property
    def monotone(self) -> bool:
        gaps = self.gaps
        return all(later <= earlier for earlier, later in zip(gaps, gaps[1:]))


def convergence_sweep(
    spec: LocalFactorSpec,
    x,
    k: int,
    schedule: Sequence[Tuple[int, int, int]] = DOUBLING_SCHEDULE,
) -> ConvergenceSweep:
    checks = tuple(numeric_check(spec, x, k, pb, eb, nm) for pb, eb, nm in schedule)
    return ConvergenceSweep(spec.name, checks)


def tail_bound(n_max: int, k: int) -> Fraction:
    """sum_{n > n_max} n^-k < 1 / ((k - 1) n_max^(k-1)), the sum side's tail for |x| <= 1, alpha = 1."""
    return Fraction(1, (k - 1) * n_max ** (k - 1))


@attrs.frozen
class EulerCheck:
    s: int
    n_max: int
    prime_bound: int
    sum_value: Fraction = attrs.field(repr=False, metadata=OMIT)
    product_value: Fraction = attrs.field(repr=False, metadata=OMIT)
    difference: Fraction = attrs.field(repr=False, metadata=OMIT)

    def reference(self):
        return mpmath.zeta(self.s)


def euler_zeta_check(s: int, n_max: int, prime_bound: int) -> EulerCheck:
    """Both sides of sum n^-s = prod (1 - p^-s)^-1, truncated exactly."""
    if s < 2:
        raise InvalidArgumentError(f"s must be at least 2, got {s}")
    total = exact_sum((1, n ** s) for n in range(1, max(n_max, 0) + 1))
    product = Fraction(1)
    if prime_bound >= 2:
        for p in build_sieve(prime_bound).primes(prime_bound):
            q = int(p) ** s
            product *= Fraction(q, q - 1)
    logger.info("euler product s=%d: sum to %d vs primes to %d", s, n_max, prime_bound)
    return EulerCheck(s, n_max, prime_bound, total, product, abs(total - product))


def partition_product(order: int) -> TruncatedSeries:
    """prod_{m=1}^{order} (1 + x^m + x^(2m) + ...) truncated at x^order."""
    result = one(order)
    for m in range(1, order + 1):
        coeffs = [0] * (order + 1)
        for j in range(0, order + 1, m):
            coeffs[j] = 1
        result = ps_mul(result, from_coefficients(coeffs, order))
    return result


def partition_product_check(order: int) -> IdentityCheckReport:
    if order < 1:
        raise InvalidArgumentError(f"order must be at least 1, got {order}")
    product = partition_product(order)
    expected = functions.partition_counts(order)
    failures = tuple(n for n in range(order + 1) if product[n] != expected[n])
    logger.info("partition product to order %d: %d mismatches", order, len(failures))
    return IdentityCheckReport("partition-product", order, per_term_failures=failures)
