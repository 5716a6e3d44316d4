from __future__ import annotations

import math
from fractions import Fraction
from numbers import Integral, Rational

from cyarith.errors import InvalidArgumentError

#: attrs field metadata that keeps a field out of report documents
OMIT = {"document": False}


def rational(value) -> Fraction:
    """Coerce ``value`` to an exact :class:`~fractions.Fraction`.

    Accepts ints, Fractions and strings of the form ``"p/q"`` or ``"p"``.
    Floats are refused: they would silently smuggle rounding error into exact
    computations.

    :raises TypeError: for floats and other non-rational types
    :raises InvalidArgumentError: for unparseable strings
    """
    if type(value) is Fraction:
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if sep:
                return Fraction(int(num), int(den))
            return Fraction(int(num))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidArgumentError(f"not a rational: {value!r}") from e
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def rational_tuple(values) -> tuple:
    """attrs converter: any iterable of rationals to a tuple of Fractions"""
    return tuple(rational(v) for v in values)


def format_rational(value) -> str:
    """``num/den`` in lowest terms with a positive denominator."""
    value = rational(value)
    return f"{value.numerator}/{value.denominator}"


def iroot(m: int, s: int) -> int:
    """Largest integer r >= 0 with r**s <= m, computed without floats.

    Integer Newton iteration from a power of two above the root, followed
    by a correction pass at perfect-power boundaries.
    """
    if m < 0:
        raise InvalidArgumentError("iroot of a negative number")
    if s < 1:
        raise InvalidArgumentError("root degree must be positive")
    if m < 2 or s == 1:
        return m
    if s == 2:
        return math.isqrt(m)
    r = 1 << -(-m.bit_length() // s)
    while True:
        y = ((s - 1) * r + m // r ** (s - 1)) // s
        if y >= r:
            break
        r = y
    while r ** s > m:
        r -= 1
    while (r + 1) ** s <= m:
        r += 1
    return r


def exact_sum(terms) -> Fraction:
    """Sum ``(numerator, denominator)`` pairs over their common denominator.

    Adding Fractions one at a time re-normalises a huge denominator on every
    step; accumulating against the running lcm keeps each step linear in
    the size of that denominator.
    """
    pairs = list(terms)
    common = 1
    for _, den in pairs:
        g = math.gcd(den, common % den)
        common = common // g * den
    total = sum(num * (common // den) for num, den in pairs)
    return Fraction(total, common)
