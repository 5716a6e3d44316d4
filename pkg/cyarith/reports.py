"""Report rendering: structured (JSON) documents and CSV tables.

A structured document has two sections. ``header`` holds what is needed to
reproduce a run (tool, version, command, parameters); ``body`` holds the
results. Nothing time- or host-dependent is written, so identical runs give
identical bytes.
"""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import attrs
import numpy as np

from cyarith.util import format_rational


def to_document(value):
    """Convert results to JSON-compatible data.

    attrs instances become dicts with their field names as keys (fields
    whose metadata sets ``document`` to False are left out), Fractions
    become ``"num/den"`` strings, tuples and sets become lists (sets
    sorted), numpy scalars become Python numbers.
    """
    if attrs.has(type(value)):
        return {
            field.name: to_document(getattr(value, field.name))
            for field in attrs.fields(type(value))
            if field.metadata.get("document", True)
        }
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, Mapping):
        return {_key(k): to_document(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [to_document(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_document(v) for v in value]
    raise TypeError(f"cannot serialise {type(value).__name__}")


def _key(key) -> str:
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


def render_json(header: Mapping, body) -> str:
    document = {"header": to_document(dict(header)), "body": to_document(body)}
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(columns: Sequence[str], rows: Iterable[Sequence]) -> str:
    """CSV with a header row; rationals as ``num/den``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_rational(v) if isinstance(v, Fraction) else v for v in row])
    return buffer.getvalue()
