import pytest

import json
from fractions import Fraction

import attrs
import numpy as np

from cyarith import fns
from cyarith.classify import classify
from cyarith.identities import builtin_spec
from cyarith.reports import render_csv, render_json, to_document
from cyarith.util import OMIT
from cyarith.waring import LemmaGReport


def test_to_document_values():
    assert to_document(Fraction(6, -4)) == "-3/2"
    assert to_document(Fraction(4, 2)) == "2/1"
    assert to_document(np.int64(7)) == 7
    assert to_document((1, Fraction(1, 3), [True, None])) == [1, "1/3", [True, None]]
    assert to_document({(2, 3): 1}) == {"2,3": 1}
    assert to_document(frozenset({3, 1, 2})) == [1, 2, 3]

    with pytest.raises(TypeError):
        to_document(object())


def test_to_document_attrs():
    report = LemmaGReport(2, 1, 1, 16, (3,))
    assert to_document(report) == {"s": 2, "t": 1, "r": 1, "order": 16, "mismatches": [3]}

    # callables are kept out of documents
    assert to_document(builtin_spec("lemma-a")) == {"name": "lemma-a", "growth": 0}

    doc = to_document(classify(fns.d, 50))
    assert doc["witnesses"]["completely_multiplicative"] == [2, 2]
    assert "eval" not in doc


def test_render_json_is_deterministic():
    header = {"tool": "cyarith", "parameters": {"x": Fraction(1, 2), "b": 1}}
    body = {"z": 1, "a": [Fraction(1, 3)]}
    text = render_json(header, body)
    assert text == render_json(dict(reversed(list(header.items()))), body)
    assert text.endswith("\n")
    document = json.loads(text)
    assert document["header"]["parameters"]["x"] == "1/2"
    assert document["body"] == {"a": ["1/3"], "z": 1}


def test_render_csv():
    text = render_csv(["n", "value"], [(1, 1), (2, Fraction(-4, 6))])
    assert text == "n,value\n1,1\n2,-2/3\n"


@attrs.frozen
class _Record:
    shown: int
    quiet: int = attrs.field(repr=False)
    hidden: int = attrs.field(default=0, metadata=OMIT)


def test_to_document_follows_field_metadata():
    record = _Record(1, 2, 3)
    assert "quiet" not in repr(record)
    assert to_document(record) == {"shown": 1, "quiet": 2}
