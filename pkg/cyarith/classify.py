"""Classification of arithmetical functions over a finite range.

Verdicts are exhaustive on 1..bound and nothing more: a report says what
holds for every pair (m, n) with mn <= bound, never what holds for all n.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import attrs

from cyarith.errors import (
    CyarithError,
    EvaluationError,
    InvalidArgumentError,
    OutOfRangeError,
    UnsupportedError,
)
from cyarith.sieve import default_sieve, factor
from cyarith.util import OMIT

logger = logging.getLogger(__name__)

INTEGER = "integer"
RATIONAL = "rational"
REAL = "real"

#: absolute tolerance for real-valued (floating point) handles
REAL_TOLERANCE = 1e-9

#: largest argument :func:`extract_local_factor` will evaluate
DEFAULT_EVALUATION_LIMIT = 10 ** 12

MULTIPLICATIVE = "multiplicative"
ADDITIVE = "additive"


@attrs.frozen
class ArithFnHandle:
    """A named arithmetical function n -> value.

    ``memoryless`` records whether the value is defined from the
    factorization of n alone; phi and pi are not.
    """

    name: str
    eval: Callable[[int], object] = attrs.field(repr=False, metadata=OMIT)
    value_kind: str = attrs.field(
        default=INTEGER, validator=attrs.validators.in_((INTEGER, RATIONAL, REAL))
    )
    memoryless: bool = True

    def __call__(self, n: int):
        try:
            return self.eval(n)
        except CyarithError as e:
            if e.argument is None:
                e.argument = n
            raise
        except Exception as e:
            raise EvaluationError(n, f"{self.name} failed at n={n}: {e}") from e

    def values(self, bound: int) -> List:
        """[f(1), ..., f(bound)] with index 0 unused (None)."""
        return [None] + [self(n) for n in range(1, bound + 1)]


def _agree(a, b, approximate: bool) -> bool:
    if approximate:
        return math.isclose(a, b, rel_tol=0.0, abs_tol=REAL_TOLERANCE)
    return a == b


@attrs.frozen
class ClassificationReport:
    name: str
    bound: int
    multiplicative: bool
    completely_multiplicative: bool
    additive: bool
    completely_additive: bool
    witnesses: Dict[str, Tuple[int, int]] = attrs.field(factory=dict)
    approximate: bool = False
    notes: Tuple[str, ...] = ()


def _first_violation(values, bound, law, coprime_only, approximate):
    for m in range(1, bound + 1):
        for n in range(1, bound // m + 1):
            if coprime_only and math.gcd(m, n) != 1:
                continue
            if not _agree(values[m * n], law(values[m], values[n]), approximate):
                return (m, n)
    return None


def _times(a, b):
    return a * b


def _plus(a, b):
    return a + b


def classify(f: ArithFnHandle, bound: int) -> ClassificationReport:
    """Test the four classical laws on every pair with mn <= bound.

    :raises InvalidArgumentError: if ``bound < 4`` or f vanishes on 1..bound
    :raises EvaluationError: if f fails at some k <= bound
    """
    if bound < 4:
        raise InvalidArgumentError(f"bound must be at least 4, got {bound}")
    values = f.values(bound)
    if all(v == 0 for v in values[1:]):
        raise InvalidArgumentError(f"{f.name} is identically zero on 1..{bound}")
    approximate = f.value_kind == REAL

    laws = {
        "multiplicative": (_times, True),
        "completely_multiplicative": (_times, False),
        "additive": (_plus, True),
        "completely_additive": (_plus, False),
    }
    verdicts = {}
    witnesses = {}
    for law_name, (law, coprime_only) in laws.items():
        witness = _first_violation(values, bound, law, coprime_only, approximate)
        verdicts[law_name] = witness is None
        if witness is not None:
            witnesses[law_name] = witness
    logger.info("classified %s on 1..%d: %s", f.name, bound, verdicts)

    notes = [f"verdicts hold on 1..{bound} only"]
    if approximate:
        notes.append(f"real-valued: compared with absolute tolerance {REAL_TOLERANCE:g}")
    if not f.memoryless and verdicts["multiplicative"]:
        notes.append(
            f"{f.name} is defined with memory, yet multiplicative on this range; "
            "its values at prime powers still determine it"
        )
    return ClassificationReport(
        name=f.name,
        bound=bound,
        witnesses=witnesses,
        approximate=approximate,
        notes=tuple(notes),
        **verdicts,
    )


def witness_violates(f: ArithFnHandle, law: str, witness: Tuple[int, int]) -> bool:
    """Re-evaluate a report witness and confirm it breaks ``law``."""
    m, n = witness
    combine = _times if "multiplicative" in law else _plus
    if not law.startswith("completely") and math.gcd(m, n) != 1:
        return False
    return not _agree(f(m * n), combine(f(m), f(n)), f.value_kind == REAL)


def extract_local_factor(
    f: ArithFnHandle,
    prime_bound: int,
    exp_bound: int,
    limit: int = DEFAULT_EVALUATION_LIMIT,
) -> Dict[Tuple[int, int], object]:
    """The candidate local factor g(p, a) = f(p^a).

    :raises OutOfRangeError: if some p^a exceeds ``limit``
    """
    table = {}
    if prime_bound < 2:
        return table
    for p in default_sieve(prime_bound).primes(prime_bound):
        p = int(p)
        for a in range(1, exp_bound + 1):
            q = p ** a
            if q > limit:
                raise OutOfRangeError(f"{p}^{a} exceeds evaluation limit {limit}")
            table[(p, a)] = f(q)
    return table


@attrs.frozen
class DecompositionReport:
    name: str
    mode: str
    bound: int
    decomposable: bool
    witness: Optional[int] = None


def verify_decomposable(f: ArithFnHandle, mode: str, bound: int) -> DecompositionReport:
    """Check f(n) against the product (or sum) of f(p_i^n_i) for n <= bound.

    n = 1 must give the empty product 1 (resp. the empty sum 0).
    """
    if mode not in (MULTIPLICATIVE, ADDITIVE):
        raise InvalidArgumentError(f"mode must be {MULTIPLICATIVE!r} or {ADDITIVE!r}")
    if bound < 4:
        raise InvalidArgumentError(f"bound must be at least 4, got {bound}")
    approximate = f.value_kind == REAL
    sieve = default_sieve(bound)
    local = {}
    witness = None
    for n in range(1, bound + 1):
        acc = 1 if mode == MULTIPLICATIVE else 0
        for p, e in factor(n, sieve):
            q = p ** e
            if q not in local:
                local[q] = f(q)
            acc = acc * local[q] if mode == MULTIPLICATIVE else acc + local[q]
        if not _agree(f(n), acc, approximate):
            witness = n
            break
    logger.info("%s %s-decomposable on 1..%d: %s", f.name, mode, bound, witness is None)
    return DecompositionReport(f.name, mode, bound, witness is None, witness)


def exp_transform(f: ArithFnHandle, base: int) -> ArithFnHandle:
    """n -> base ** f(n), exactly.

    :raises UnsupportedError: (at evaluation) if f(n) is negative or not an integer
    """
    if base < 2:
        raise InvalidArgumentError(f"base must be at least 2, got {base}")

    def evaluate(n):
        v = f(n)
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise UnsupportedError(f"{f.name}({n}) = {v} is not an integer")
            v = v.numerator
        if not isinstance(v, int) or v < 0:
            raise UnsupportedError(f"{f.name}({n}) = {v} cannot be exponentiated exactly")
        return base ** v

    return ArithFnHandle(f"{base}^{f.name}", evaluate, INTEGER, f.memoryless)


def log_transform(f: ArithFnHandle) -> ArithFnHandle:
    """n -> ln f(n) in floating point; f must be positive."""

    def evaluate(n):
        v = f(n)
        if v <= 0:
            raise UnsupportedError(f"{f.name}({n}) = {v} has no real logarithm")
        return math.log(v)

    return ArithFnHandle(f"log {f.name}", evaluate, REAL, f.memoryless)
