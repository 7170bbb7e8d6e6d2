"""JSON documents for games, certificates and representations.

Every document carries ``"schema": "csg/1"``. Rationals are strings
``"p/q"`` in lowest terms (plain integers when the denominator is 1).
Canonical output uses sorted keys, two-space indentation, one line per
flat list and a trailing newline, so parse-then-dump is byte-identical
on canonical input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .core import TypeComposition
from .game import CompleteSimpleGame, validate
from .weightedness import COMPONENTWISE, SHIFT, Certificate, WeightedRepresentation

SCHEMA = "csg/1"


class DocumentError(ValueError):
    """A document that cannot be read; ``field`` names the offending key."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field


def _format(value, depth: int) -> str:
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {_format(value[k], depth + 1)}" for k in sorted(value)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            return "[" + ", ".join(json.dumps(v, ensure_ascii=False) for v in value) + "]"
        return "[\n" + ",\n".join(inner + _format(v, depth + 1) for v in value) + "\n" + pad + "]"
    return json.dumps(value, ensure_ascii=False)


def dumps(doc: dict) -> str:
    """Canonical text: sorted keys, flat lists on one line, trailing newline."""
    return _format(doc, 0) + "\n"


def loads(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"expected {SCHEMA!r}, got {doc.get('schema')!r}", "schema")
    return doc


def read(path) -> dict:
    try:
        return loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None


def fraction_to_text(v: Fraction):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def fraction_from_text(v, field: str) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise DocumentError(f"expected an integer or 'p/q' string, got {v!r}", field)
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"not a rational: {v!r}", field) from None


def _int_list(value, field: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in value):
        raise DocumentError(f"expected a list of integers, got {value!r}", field)
    return tuple(value)


def _rows(value, field: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list):
        raise DocumentError(f"expected a list of rows, got {value!r}", field)
    return tuple(_int_list(r, f"{field}[{i}]") for i, r in enumerate(value))


def _require(doc: dict, key: str, kind: str | None = None):
    if kind is not None and doc.get("kind", kind) != kind:
        raise DocumentError(f"expected kind {kind!r}, got {doc.get('kind')!r}", "kind")
    if key not in doc:
        raise DocumentError("missing", key)
    return doc[key]


def game_to_doc(game: CompleteSimpleGame, name: str | None = None, source: str | None = None) -> dict:
    doc: dict[str, Any] = {
        "schema": SCHEMA,
        "kind": "game",
        "composition": list(game.composition.parts),
        "smw": [list(r) for r in game.smw],
    }
    if name is not None:
        doc["name"] = name
    if source is not None:
        doc["source"] = source
    return doc


def game_from_doc(doc: dict) -> CompleteSimpleGame:
    """Build the game; validation errors propagate unchanged."""
    comp = _int_list(_require(doc, "composition", "game"), "composition")
    smw = _rows(_require(doc, "smw"), "smw")
    try:
        composition = TypeComposition(comp)
    except ValueError as exc:
        raise DocumentError(str(exc), "composition") from None
    return validate(composition, smw)


def certificate_to_doc(cert: Certificate) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "certificate",
        "mode": cert.mode,
        "winning": [list(r) for r in cert.winning_rows],
        "losing": [list(r) for r in cert.losing_rows],
        "x": [fraction_to_text(v) for v in cert.x],
        "y": [fraction_to_text(v) for v in cert.y],
    }


def certificate_from_doc(doc: dict) -> Certificate:
    mode = doc.get("mode", COMPONENTWISE)
    if mode not in (COMPONENTWISE, SHIFT):
        raise DocumentError(f"unknown mode {mode!r}", "mode")
    winning = _rows(_require(doc, "winning", "certificate"), "winning")
    losing = _rows(_require(doc, "losing"), "losing")
    x = _require(doc, "x")
    y = _require(doc, "y")
    if not isinstance(x, list) or not isinstance(y, list):
        raise DocumentError("multipliers must be lists", "x" if not isinstance(x, list) else "y")
    xs = tuple(fraction_from_text(v, f"x[{i}]") for i, v in enumerate(x))
    ys = tuple(fraction_from_text(v, f"y[{i}]") for i, v in enumerate(y))
    return Certificate(winning, losing, xs, ys, mode)


def representation_to_doc(rep: WeightedRepresentation) -> dict:
    return {
        "schema": SCHEMA,
        "kind": "representation",
        "quota": fraction_to_text(rep.quota),
        "weights": [fraction_to_text(w) for w in rep.weights],
    }


def representation_from_doc(doc: dict) -> WeightedRepresentation:
    quota = fraction_from_text(_require(doc, "quota", "representation"), "quota")
    weights = _require(doc, "weights")
    if not isinstance(weights, list):
        raise DocumentError("expected a list", "weights")
    ws = tuple(fraction_from_text(v, f"weights[{i}]") for i, v in enumerate(weights))
    try:
        return WeightedRepresentation(quota, ws)
    except ValueError as exc:
        raise DocumentError(str(exc), "weights") from None
