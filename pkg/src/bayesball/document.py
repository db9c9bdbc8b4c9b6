"""JSON network documents.

A document is one JSON object::

    {
      "format_version": 1,
      "nodes": [{"id": "Coin1", "kind": "chance"}, ...],
      "arcs": [["Coin1", "WinPrize"], ...],
      "decision_order": ["Design", "Act"],      # optional, marks a diagram
      "evidence": ["History"],                   # diagrams only
      "value_aggregation": "sum"                 # diagrams only
    }
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Union

import jsonschema

from .decision import DiagramError, InfluenceDiagram
from .graph import GraphError, Network, ValidationReport, sorted_ids, validate

FORMAT_VERSION = 1

Model = Union[Network, InfluenceDiagram]

SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["format_version", "nodes", "arcs"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["id", "kind"],
                "properties": {
                    "id": {"type": "string", "minLength": 1},
                    "kind": {"enum": ["chance", "deterministic", "decision", "value"]},
                },
            },
        },
        "arcs": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "string"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
        "decision_order": {"type": "array", "items": {"type": "string"}},
        "evidence": {"type": "array", "items": {"type": "string"}},
        "value_aggregation": {"enum": ["sum", "product"]},
    },
    "dependentRequired": {
        "evidence": ["decision_order"],
        "value_aggregation": ["decision_order"],
    },
}


class DocumentError(ValueError):
    """Malformed text or a schema violation."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class NetworkValidationError(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(str(report))


def parse_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg}", exc.lineno, exc.colno) from None
    errors = sorted(jsonschema.Draft202012Validator(SCHEMA).iter_errors(doc), key=lambda e: list(e.path))
    if errors:
        err = errors[0]
        location = "/".join(str(p) for p in err.path) or "<root>"
        raise DocumentError(f"schema violation at {location}: {err.message}")
    return doc


def from_document(doc: dict) -> Model:
    try:
        net = Network([(n["id"], n["kind"]) for n in doc["nodes"]], [tuple(a) for a in doc["arcs"]])
    except GraphError as exc:
        raise DocumentError(str(exc)) from None
    if "decision_order" not in doc:
        report = validate(net, "belief-network")
        if not report.ok:
            raise NetworkValidationError(report)
        return net
    report = validate(net, "influence-diagram", doc["decision_order"])
    if not report.ok:
        raise NetworkValidationError(report)
    try:
        return InfluenceDiagram(
            net,
            doc["decision_order"],
            doc.get("evidence", ()),
            doc.get("value_aggregation", "sum"),
        )
    except (DiagramError, GraphError) as exc:
        raise DocumentError(str(exc)) from None


def parse_network(text: str) -> Model:
    """Parse and validate; a diagram is returned iff ``decision_order`` is present."""
    return from_document(parse_document(text))


def load(path: str | Path) -> Model:
    return parse_network(Path(path).read_text())


def to_document(model: Model) -> dict:
    net = model.net if isinstance(model, InfluenceDiagram) else model
    doc = {
        "format_version": FORMAT_VERSION,
        "nodes": [{"id": n, "kind": net.kind(n).value} for n in net.nodes],
        "arcs": [list(a) for a in net.arcs],
    }
    if isinstance(model, InfluenceDiagram):
        doc["decision_order"] = list(model.decision_order)
        doc["evidence"] = sorted_ids(model.evidence)
        doc["value_aggregation"] = model.value_aggregation
    return doc


def serialize(model: Model) -> str:
    """Canonical text: one node or arc per line."""
    doc = to_document(model)
    lines = ["{", f'  "format_version": {doc["format_version"]},']

    def block(key, items, last):
        body = ",\n".join("    " + json.dumps(item) for item in items)
        inner = f"[\n{body}\n  ]" if items else "[]"
        lines.append(f'  "{key}": {inner}' + ("" if last else ","))

    keys = [k for k in ("nodes", "arcs", "decision_order", "evidence") if k in doc]
    tail = "value_aggregation" in doc
    for i, key in enumerate(keys):
        if key in ("nodes", "arcs"):
            block(key, doc[key], last=(i == len(keys) - 1 and not tail))
        else:
            lines.append(f'  "{key}": {json.dumps(doc[key])},')
    if tail:
        lines.append(f'  "value_aggregation": {json.dumps(doc["value_aggregation"])}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump(model: Model, path: str | Path) -> None:
    Path(path).write_text(serialize(model))
