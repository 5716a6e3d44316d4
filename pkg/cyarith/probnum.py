"""Arithmetical polynomials and the probability distributions they induce.

For beta over 1..M the polynomial 1 + sum_{n=1}^{M} x^beta(n) is kept as a
histogram of exponents plus the standalone leading 1. Normalising by M+1
gives a probability mass function whose generating polynomial is the moment
function.
"""
from __future__ import annotations

import logging
from collections import Counter
from fractions import Fraction
from typing import Optional, Tuple

import attrs
import mpmath

from cyarith.classify import ArithFnHandle
from cyarith.errors import InvalidArgumentError, InvalidFunctionError
from cyarith.powerseries import TruncatedSeries, from_coefficients
from cyarith.util import rational

logger = logging.getLogger(__name__)


def _check_terms(instance, attribute, value):
    exponents = [s for s, _ in value]
    if any(b <= a for a, b in zip(exponents, exponents[1:])):
        raise InvalidArgumentError("exponents must be strictly increasing")
    if any(s < 0 or t < 1 for s, t in value):
        raise InvalidArgumentError("exponents must be >= 0 and counts >= 1")
    if sum(t for _, t in value) != instance.M:
        raise InvalidArgumentError(f"counts must sum to M={instance.M}")


@attrs.frozen
class ArithPolynomial:
    """leading + sum_j t_j x^s_j, with sum_j t_j = M."""

    M: int = attrs.field(validator=attrs.validators.ge(1))
    terms: Tuple[Tuple[int, int], ...] = attrs.field(
        converter=lambda pairs: tuple((int(s), int(t)) for s, t in pairs),
        validator=_check_terms,
    )
    leading: int = 1

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def coefficient(self, s: int) -> int:
        """Coefficient of x^s, the leading 1 included at s = 0."""
        total = self.leading if s == 0 else 0
        return total + dict(self.terms).get(s, 0)

    def evaluate(self, x) -> Fraction:
        x = rational(x)
        return self.leading + sum(t * x ** s for s, t in self.terms)


def _check_support(instance, attribute, value):
    values = [s for s, _ in value]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidArgumentError("support must be strictly increasing")
    if any(q <= 0 for _, q in value):
        raise InvalidArgumentError("probabilities must be positive")
    if sum(q for _, q in value) != 1:
        raise InvalidArgumentError("probabilities must sum to 1")


@attrs.frozen
class Pmf:
    support: Tuple[Tuple[int, Fraction], ...] = attrs.field(
        converter=lambda pairs: tuple((int(s), rational(q)) for s, q in pairs),
        validator=_check_support,
    )

    def probability(self, s: int) -> Fraction:
        return dict(self.support).get(s, Fraction(0))


def build_polynomial(beta: ArithFnHandle, M: int) -> ArithPolynomial:
    """Histogram of beta(1..M), in the form 1 + t_1 x^s_1 + ... + t_L x^s_L.

    :raises InvalidFunctionError: if some beta(n) is not a nonnegative integer
    """
    if M < 1:
        raise InvalidArgumentError(f"M must be positive, got {M}")
    histogram = Counter()
    for n in range(1, M + 1):
        v = beta(n)
        if isinstance(v, Fraction) and v.denominator == 1:
            v = v.numerator
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidFunctionError(f"{beta.name}({n}) = {v!r} is not a nonnegative integer")
        histogram[v] += 1
    logger.debug("%s histogram over 1..%d: %d distinct exponents", beta.name, M, len(histogram))
    return ArithPolynomial(M, sorted(histogram.items()))


def eval_at_one(p: ArithPolynomial) -> int:
    return p.leading + sum(t for _, t in p.terms)


def normalize(p: ArithPolynomial) -> Pmf:
    """Divide by M+1, merging the leading 1 into the mass at 0."""
    total = eval_at_one(p)
    weights = dict(p.terms)
    weights[0] = weights.get(0, 0) + p.leading
    return Pmf((s, Fraction(w, total)) for s, w in sorted(weights.items()))


def moment(pmf: Pmf, r: int) -> Fraction:
    """E[S^r] = sum_j q_j s_j^r"""
    if r < 1:
        raise InvalidArgumentError(f"moment order must be positive, got {r}")
    return sum((q * s ** r for s, q in pmf.support), Fraction(0))


def moments(pmf: Pmf, count: int = 4) -> Tuple[Fraction, ...]:
    return tuple(moment(pmf, r) for r in range(1, count + 1))


def moment_function_eval(pmf: Pmf, x) -> Fraction:
    """G(x) = sum_j q_j x^s_j; G(1) = 1."""
    x = rational(x)
    return sum((q * x ** s for s, q in pmf.support), Fraction(0))


def normalize_summable_series(a: TruncatedSeries) -> Pmf:
    """Divide a nonnegative coefficient sequence by its sum.

    :raises InvalidArgumentError: for a negative coefficient or an all-zero series
    """
    if any(c < 0 for c in a.coeffs):
        raise InvalidArgumentError("coefficients must be nonnegative")
    total = sum(a.coeffs, Fraction(0))
    if total == 0:
        raise InvalidArgumentError("series is identically zero")
    return Pmf((n, c / total) for n, c in enumerate(a.coeffs) if c)


def weighted_polynomial(alpha: ArithFnHandle, beta: ArithFnHandle, M: int) -> TruncatedSeries:
    """sum_{n=0}^{M} alpha(n) x^beta(n) with the n = 0 term taken as 1.

    The order of the result is the largest exponent reached.
    """
    if M < 1:
        raise InvalidArgumentError(f"M must be positive, got {M}")
    weights = Counter({0: Fraction(1)})
    for n in range(1, M + 1):
        s = beta(n)
        if not isinstance(s, int) or s < 0:
            raise InvalidFunctionError(f"{beta.name}({n}) = {s!r} is not a nonnegative integer")
        weights[s] += rational(alpha(n))
    order = max(weights)
    return from_coefficients([weights.get(s, 0) for s in range(order + 1)], order)


@attrs.frozen
class RootScan:
    radius: Fraction
    step: Fraction
    sign_changes: int
    exact_zeros: Tuple[Fraction, ...]
    identically_zero: bool = False

    @property
    def real_roots_found(self) -> int:
        return self.sign_changes + len(self.exact_zeros)


def real_root_scan(p: ArithPolynomial, radius=4, step=Fraction(1, 16)) -> RootScan:
    """Locate real zeros of p(x) - (M+1) on the grid -radius, ..., radius.

    Sign changes between consecutive nonzero grid values each bracket at
    least one root; grid points where the value is exactly 0 are listed
    and not counted again as a sign change.
    When every exponent is 0 the difference vanishes everywhere; that case
    is flagged as ``identically_zero`` and no roots are reported.
    This is an experiment: it can miss pairs of close roots.
    """
    radius, step = rational(radius), rational(step)
    if radius <= 0 or step <= 0:
        raise InvalidArgumentError("radius and step must be positive")
    if p.degree == 0:
        logger.info("J(x) - %d is identically zero; no roots to scan", eval_at_one(p))
        return RootScan(radius, step, 0, (), identically_zero=True)
    shift = eval_at_one(p)
    zeros = []
    changes = 0
    previous_sign = 0
    x = -radius
    while x <= radius:
        value = p.evaluate(x) - shift
        if value == 0:
            zeros.append(x)
            previous_sign = 0
        else:
            sign = 1 if value > 0 else -1
            if previous_sign and sign != previous_sign:
                changes += 1
            previous_sign = sign
        x += step
    return RootScan(radius, step, changes, tuple(zeros))


@attrs.frozen
class ProbnumSummary:
    polynomial: ArithPolynomial
    pmf: Pmf
    at_one: int
    moments: Tuple[Fraction, ...]
    loglog_reference: float
    roots: Optional[RootScan] = None


def summary(beta: ArithFnHandle, M: int, roots: bool = False, radius=4, step=Fraction(1, 16)) -> ProbnumSummary:
    poly = build_polynomial(beta, M)
    pmf = normalize(poly)
    reference = float(mpmath.log(mpmath.log(M))) if M >= 3 else 0.0
    scan = real_root_scan(poly, radius, step) if roots else None
    return ProbnumSummary(poly, pmf, eval_at_one(poly), moments(pmf), reference, scan)
