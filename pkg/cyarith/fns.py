from __future__ import annotations

import functools
import math

from cyarith import functions
from cyarith.classify import INTEGER, REAL, ArithFnHandle
from cyarith.errors import InvalidArgumentError
from cyarith.sieve import default_sieve, factor


@functools.lru_cache(maxsize=4)
def _partition_table(limit):
    return functions.partition_counts(limit)


def _partition(n):
    limit = 1024
    while limit < n:
        limit <<= 1
    return _partition_table(limit)[n]


#:
d = ArithFnHandle("d", lambda n: functions.divisor_count(factor(n)))

#:
omega = ArithFnHandle("omega", lambda n: functions.distinct_prime_count(factor(n)))

#:
bigomega = ArithFnHandle("bigomega", lambda n: functions.prime_factor_count(factor(n)))

#:
phi = ArithFnHandle("phi", lambda n: functions.euler_totient(factor(n)), memoryless=False)

#:
pi = ArithFnHandle(
    "pi", lambda n: functions.prime_count_upto(n, default_sieve(n)), memoryless=False
)

#:
partition = ArithFnHandle("partition", _partition, memoryless=False)

#:
log = ArithFnHandle("log", math.log, REAL)

#:
zero = ArithFnHandle("zero", lambda n: 0)

#:
one = ArithFnHandle("one", lambda n: 1)

#:
identity = ArithFnHandle("identity", lambda n: n)


def sigma(t: int) -> ArithFnHandle:
    return ArithFnHandle(
        f"sigma_{t}", lambda n: functions.divisor_power_sum(factor(n), t), INTEGER
    )


def L(t: int) -> ArithFnHandle:
    return ArithFnHandle(f"L_{t}", lambda n: functions.exponent_power_sum(factor(n), t))


#: CLI identifiers; parameterised entries take ``t``
NAMES = ("d", "sigma", "omega", "bigomega", "L", "phi", "pi", "partition")


def lookup(name: str, t: int = 1) -> ArithFnHandle:
    """Handle for a CLI function identifier.

    :raises InvalidArgumentError: for unknown identifiers
    """
    if name == "sigma":
        return sigma(t)
    if name == "L":
        return L(t)
    fixed = {
        "d": d,
        "omega": omega,
        "bigomega": bigomega,
        "phi": phi,
        "pi": pi,
        "partition": partition,
        "log": log,
    }
    try:
        return fixed[name]
    except KeyError:
        raise InvalidArgumentError(f"unknown function {name!r}") from None
