import pytest

from fractions import Fraction

from hypothesis import given, strategies

from cyarith.errors import CyarithError, InvalidArgumentError
from cyarith.util import exact_sum, format_rational, iroot, rational, rational_tuple


def test_rational():
    assert rational(3) == Fraction(3)
    assert rational(Fraction(2, 4)) == Fraction(1, 2)
    assert rational("-6/8") == Fraction(-3, 4)
    assert rational(" 7 ") == 7
    assert rational_tuple([1, "1/2"]) == (Fraction(1), Fraction(1, 2))

    with pytest.raises(TypeError):
        rational(0.5)
    with pytest.raises(TypeError):
        rational(True)
    with pytest.raises(TypeError):
        rational(None)
    with pytest.raises(InvalidArgumentError):
        rational("1/0")
    with pytest.raises(InvalidArgumentError):
        rational("half")


def test_errors_are_builtin_compatible():
    with pytest.raises(ValueError):
        rational("x/y")
    with pytest.raises(CyarithError):
        iroot(-1, 2)


def test_format_rational():
    assert format_rational(5) == "5/1"
    assert format_rational("2/-4") == "-1/2"


def test_iroot():
    assert iroot(0, 3) == 0
    assert iroot(1, 5) == 1
    assert iroot(26, 3) == 2
    assert iroot(27, 3) == 3
    assert iroot(28, 3) == 3
    assert iroot(10 ** 40, 4) == 10 ** 10
    assert iroot(10 ** 40 - 1, 4) == 10 ** 10 - 1
    assert iroot(17, 1) == 17

    with pytest.raises(InvalidArgumentError):
        iroot(10, 0)


@given(strategies.integers(0, 10 ** 60), strategies.integers(1, 9))
def test_iroot_brackets(m, s):
    r = iroot(m, s)
    assert r ** s <= m < (r + 1) ** s


def test_exact_sum():
    assert exact_sum([]) == 0
    assert exact_sum([(1, 2), (1, 3), (1, 6)]) == 1
    assert exact_sum([(1, 4), (-1, 4)]) == 0

    terms = [(1, n * n) for n in range(1, 200)]
    assert exact_sum(terms) == sum(Fraction(a, b) for a, b in terms)
