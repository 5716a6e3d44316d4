import pytest

import math

from cyarith import fns
from cyarith.classify import (
    ADDITIVE,
    MULTIPLICATIVE,
    REAL,
    ArithFnHandle,
    classify,
    exp_transform,
    extract_local_factor,
    log_transform,
    verify_decomposable,
    witness_violates,
)
from cyarith.errors import EvaluationError, InvalidArgumentError, OutOfRangeError, UnsupportedError

BOUND = 2000


def check_witnesses(f, report):
    for law, witness in report.witnesses.items():
        assert witness_violates(f, law, witness), (law, witness)


def test_divisor_count():
    report = classify(fns.d, BOUND)
    assert report.multiplicative
    assert not report.completely_multiplicative
    assert report.witnesses["completely_multiplicative"] == (2, 2)
    assert not report.additive
    check_witnesses(fns.d, report)


def test_sigma():
    report = classify(fns.sigma(1), BOUND)
    assert report.multiplicative
    assert not report.completely_multiplicative
    check_witnesses(fns.sigma(1), report)


def test_omega():
    report = classify(fns.omega, BOUND)
    assert report.additive
    assert not report.completely_additive
    assert report.witnesses["completely_additive"] == (2, 2)
    check_witnesses(fns.omega, report)


def test_bigomega_completely_additive():
    report = classify(fns.bigomega, BOUND)
    assert report.additive
    assert report.completely_additive
    assert "completely_additive" not in report.witnesses
    assert classify(fns.L(1), BOUND).completely_additive


def test_totient_has_memory():
    report = classify(fns.phi, BOUND)
    assert report.multiplicative
    assert not report.completely_multiplicative
    assert any("memory" in note for note in report.notes)
    assert verify_decomposable(fns.phi, MULTIPLICATIVE, 5000).decomposable


def test_prime_count_is_neither():
    report = classify(fns.pi, 500)
    assert not report.multiplicative
    assert not report.additive
    check_witnesses(fns.pi, report)


def test_implications():
    for f in (fns.d, fns.omega, fns.bigomega, fns.phi, fns.sigma(2), fns.identity):
        report = classify(f, 300)
        if report.completely_multiplicative:
            assert report.multiplicative
        if report.completely_additive:
            assert report.additive
        assert report.notes[0] == "verdicts hold on 1..300 only"


def test_exp_transform():
    two_omega = exp_transform(fns.omega, 2)
    assert two_omega.name == "2^omega"
    assert two_omega(30) == 8
    assert classify(two_omega, BOUND).multiplicative

    two_bigomega = exp_transform(fns.bigomega, 2)
    assert classify(two_bigomega, BOUND).completely_multiplicative

    constant = exp_transform(fns.zero, 3)
    assert constant(17) == 1
    assert classify(constant, 100).completely_multiplicative

    with pytest.raises(InvalidArgumentError):
        exp_transform(fns.omega, 1)
    negative = exp_transform(ArithFnHandle("neg", lambda n: -n), 2)
    with pytest.raises(UnsupportedError):
        negative(3)


def test_log_is_approximately_completely_additive():
    report = classify(fns.log, 1000)
    assert report.approximate
    assert report.completely_additive
    assert any("tolerance" in note for note in report.notes)

    log_d = log_transform(fns.d)
    assert log_d.value_kind == REAL
    assert classify(log_d, 1000).additive
    assert math.isclose(log_d(12), math.log(6))


def test_classify_errors():
    with pytest.raises(InvalidArgumentError):
        classify(fns.d, 3)
    with pytest.raises(InvalidArgumentError):
        classify(fns.zero, 100)

    broken = ArithFnHandle("broken", lambda n: 1 // (n - 7))
    with pytest.raises(EvaluationError) as info:
        classify(broken, 100)
    assert info.value.argument == 7


def test_extract_local_factor():
    table = extract_local_factor(fns.d, 50, 6)
    assert all(value == a + 1 for (p, a), value in table.items())
    assert (47, 6) in table

    assert extract_local_factor(fns.sigma(1), 2, 2)[(2, 2)] == 7
    assert set(extract_local_factor(fns.omega, 30, 4).values()) == {1}
    assert extract_local_factor(fns.d, 1, 4) == {}

    with pytest.raises(OutOfRangeError):
        extract_local_factor(fns.d, 100, 10, limit=10 ** 6)


def test_verify_decomposable():
    assert verify_decomposable(fns.sigma(2), MULTIPLICATIVE, 5000).decomposable
    assert verify_decomposable(fns.L(3), ADDITIVE, 5000).decomposable

    report = verify_decomposable(fns.omega, MULTIPLICATIVE, 100)
    assert not report.decomposable
    assert report.witness == 1

    report = verify_decomposable(fns.pi, ADDITIVE, 100)
    assert not report.decomposable

    with pytest.raises(InvalidArgumentError):
        verify_decomposable(fns.d, "sideways", 100)


def test_failure_inside_classify_carries_argument():
    f = ArithFnHandle("dip", lambda n: -1 if n == 5 else 0)
    with pytest.raises(UnsupportedError) as info:
        classify(exp_transform(f, 2), 100)
    assert info.value.argument == 5


CATALOG = [fns.d, fns.sigma(1), fns.sigma(2), fns.omega, fns.bigomega, fns.L(1), fns.L(3), fns.phi]


@pytest.mark.parametrize("f", CATALOG, ids=lambda f: f.name)
def test_decomposable_implies_law(f):
    additive = verify_decomposable(f, ADDITIVE, BOUND).decomposable
    multiplicative = verify_decomposable(f, MULTIPLICATIVE, BOUND).decomposable
    report = classify(f, BOUND)
    if additive:
        assert report.additive
    if multiplicative:
        assert report.multiplicative
    assert additive or multiplicative


def test_decomposable_additive_catalog():
    decomposable = {f.name for f in CATALOG if verify_decomposable(f, ADDITIVE, BOUND).decomposable}
    assert decomposable == {"omega", "bigomega", "L_1", "L_3"}


@pytest.mark.parametrize("f", [fns.d, fns.omega, fns.bigomega, fns.L(2), fns.phi, fns.pi], ids=lambda f: f.name)
@pytest.mark.parametrize("base", [2, 3])
def test_additive_iff_exp_multiplicative(f, base):
    plain = classify(f, BOUND)
    lifted = classify(exp_transform(f, base), BOUND)
    assert plain.additive == lifted.multiplicative
    assert plain.completely_additive == lifted.completely_multiplicative
    assert plain.witnesses.get("additive") == lifted.witnesses.get("multiplicative")
    assert plain.witnesses.get("completely_additive") == lifted.witnesses.get("completely_multiplicative")


def test_additive_iff_exp_multiplicative_negative_case():
    report = classify(fns.d, BOUND)
    lifted = classify(exp_transform(fns.d, 2), BOUND)
    assert not report.additive and not lifted.multiplicative
    assert report.witnesses["additive"] == lifted.witnesses["multiplicative"] == (1, 1)
