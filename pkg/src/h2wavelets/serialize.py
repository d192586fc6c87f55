"""JSON documents exchanged by the command-line tools.

Coordinates are written as coefficient strings (``"16/3"`` means
``16pi/3``) and amplitudes as ``"a + b*sqrt2"``; both round-trip exactly.
Every document carries a ``schema`` tag and a ``kind``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .intervals import IntervalSet
from .step_wavelet import StepFunction

SCHEMA = "h2wavelets/1"


class FormatError(ValueError):
    """Input document is malformed or of the wrong kind."""


def interval_set_doc(s: IntervalSet, **extra) -> dict:
    return {"schema": SCHEMA, "kind": "interval_set", "pieces": s.to_json(), **extra}


def step_function_doc(f: StepFunction, **extra) -> dict:
    return {"schema": SCHEMA, "kind": "step_function", "pieces": f.to_json(), **extra}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_doc(path: str | Path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict) or "kind" not in doc or "pieces" not in doc:
        raise FormatError(f"{path}: expected an object with 'kind' and 'pieces'")
    if doc.get("schema", SCHEMA) != SCHEMA:
        raise FormatError(f"{path}: unsupported schema {doc.get('schema')!r}")
    return doc


def parse_interval_set(doc: dict) -> IntervalSet:
    if doc.get("kind") != "interval_set":
        raise FormatError(f"expected an interval_set document, got {doc.get('kind')!r}")
    try:
        return IntervalSet.from_json(doc["pieces"])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad interval list: {exc}") from exc


def parse_step_function(doc: dict) -> StepFunction:
    """Read a step function; an interval set is read as its indicator."""
    kind = doc.get("kind")
    try:
        if kind == "step_function":
            return StepFunction.from_json(doc["pieces"])
        if kind == "interval_set":
            return StepFunction.indicator(IntervalSet.from_json(doc["pieces"]))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad step function: {exc}") from exc
    raise FormatError(f"expected a step_function document, got {kind!r}")
