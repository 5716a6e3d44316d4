"""Exact truncated formal power series over the rationals.

A :class:`TruncatedSeries` of order N holds c_0..c_N and all arithmetic is
modulo x^(N+1). Binary operations require equal orders; truncate explicitly
with :meth:`TruncatedSeries.truncate` when combining series of different
orders.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import attrs

from cyarith.errors import InvalidArgumentError, UnsupportedError
from cyarith.util import format_rational, rational, rational_tuple

logger = logging.getLogger(__name__)


def _check_length(instance, attribute, value):
    if instance.order < 0:
        raise InvalidArgumentError(f"order must be nonnegative, got {instance.order}")
    if len(value) != instance.order + 1:
        raise InvalidArgumentError(
            f"order {instance.order} needs {instance.order + 1} coefficients, got {len(value)}"
        )


@attrs.frozen
class TruncatedSeries:
    order: int
    coeffs: Tuple[Fraction, ...] = attrs.field(converter=rational_tuple, validator=_check_length)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return ps_add(self, other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return ps_mul(self, other)

    def __pow__(self, k):
        if not isinstance(k, int) or isinstance(k, bool):
            return NotImplemented
        return ps_pow(self, k)

    def __call__(self, x):
        return ps_eval(self, x)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop (or zero-pad) coefficients to the given order."""
        if order < 0:
            raise InvalidArgumentError(f"order must be nonnegative, got {order}")
        coeffs = self.coeffs[: order + 1] + (Fraction(0),) * (order - self.order)
        return TruncatedSeries(order, coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integers(self) -> List[int]:
        """Coefficients as ints; only valid for integral series."""
        if not self.is_integral():
            raise InvalidArgumentError("series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (0,) * (order + 1))


def one(order: int) -> TruncatedSeries:
    return monomial(0, order)


def monomial(exponent: int, order: int, coefficient=1) -> TruncatedSeries:
    """coefficient * x^exponent, vanishing if exponent > order"""
    coeffs = [0] * (order + 1)
    if 0 <= exponent <= order:
        coeffs[exponent] = coefficient
    return TruncatedSeries(order, coeffs)


def from_coefficients(coeffs: Iterable, order: Optional[int] = None) -> TruncatedSeries:
    """Series from a coefficient list, truncated or zero-padded to ``order``."""
    coeffs = list(coeffs)
    if order is None:
        order = len(coeffs) - 1
    coeffs = coeffs[: order + 1] + [0] * (order + 1 - len(coeffs))
    return TruncatedSeries(order, coeffs)


def _same_order(a: TruncatedSeries, b: TruncatedSeries):
    if not isinstance(a, TruncatedSeries) or not isinstance(b, TruncatedSeries):
        raise TypeError("operands must be TruncatedSeries")
    if a.order != b.order:
        raise InvalidArgumentError(f"order mismatch: {a.order} vs {b.order}")


def ps_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _same_order(a, b)
    return TruncatedSeries(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def _convolve(a: Sequence, b: Sequence, order: int) -> list:
    # zero coefficients of b are skipped, which makes products with sparse
    # series (theta series, partition factors) far cheaper than N^2
    out = [0] * (order + 1)
    nonzero = [(j, c) for j, c in enumerate(b) if c]
    for i, ai in enumerate(a):
        if not ai:
            continue
        room = order - i
        for j, bj in nonzero:
            if j > room:
                break
            out[i + j] += ai * bj
    return out


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product c_n = sum_{j<=n} a_j b_(n-j), truncated at the common order."""
    _same_order(a, b)
    if a.is_integral() and b.is_integral():
        coeffs = _convolve(a.integers(), b.integers(), a.order)
    else:
        coeffs = _convolve(a.coeffs, b.coeffs, a.order)
    return TruncatedSeries(a.order, coeffs)


def ps_pow(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a^k by binary powering; a^0 is the series 1."""
    if k < 0:
        raise InvalidArgumentError(f"exponent must be nonnegative, got {k}")
    result = one(a.order)
    base = a
    while k:
        if k & 1:
            result = ps_mul(result, base)
        k >>= 1
        if k:
            base = ps_mul(base, base)
    return result


def ps_pow_recurrence(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a^k through the classical power recurrence for a_0 != 0.

    With g = a^k:  g_0 = a_0^k  and
    n a_0 g_n = sum_{j=1}^{n} ((k+1) j - n) a_j g_(n-j).

    :raises UnsupportedError: if a_0 == 0 (use :func:`ps_pow`)
    """
    if k < 1:
        raise InvalidArgumentError(f"exponent must be positive, got {k}")
    a0 = a.coeffs[0]
    if a0 == 0:
        raise UnsupportedError("power recurrence needs a nonzero constant term")
    order = a.order
    if a.is_integral() and abs(a0) == 1:
        # exact integer division: the result is integral and a_0 is a unit
        coeffs = a.integers()
        unit = coeffs[0]
        g = [unit ** k] + [0] * order
        for n in range(1, order + 1):
            total = 0
            for j in range(1, n + 1):
                if coeffs[j]:
                    total += ((k + 1) * j - n) * coeffs[j] * g[n - j]
            g[n] = total // n * unit
        return TruncatedSeries(order, g)
    coeffs = a.coeffs
    g = [a0 ** k] + [Fraction(0)] * order
    for n in range(1, order + 1):
        total = Fraction(0)
        for j in range(1, n + 1):
            if coeffs[j]:
                total += ((k + 1) * j - n) * coeffs[j] * g[n - j]
        g[n] = total / (n * a0)
    return TruncatedSeries(order, g)


def ps_eval(a: TruncatedSeries, x) -> Fraction:
    """Horner evaluation, exact."""
    x = rational(x)
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def geometric_factor(p: int, k: int, order: int) -> TruncatedSeries:
    """1 + x/(p^k - 1), the closed form of 1 + x/p^k + x/p^(2k) + ..."""
    if p < 2 or k < 1:
        raise InvalidArgumentError(f"need p >= 2 and k >= 1, got p={p}, k={k}")
    return from_coefficients([1, Fraction(1, p ** k - 1)], order)


def dumps(series: TruncatedSeries) -> str:
    """Text form: ``order N`` then one ``num/den`` coefficient per line."""
    lines = [f"order {series.order}"]
    lines.extend(format_rational(c) for c in series.coeffs)
    return "\n".join(lines) + "\n"


def loads(text: str) -> TruncatedSeries:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("order "):
        raise InvalidArgumentError("missing 'order N' header")
    order = int(lines[0].split()[1])
    return TruncatedSeries(order, [rational(line) for line in lines[1:]])
