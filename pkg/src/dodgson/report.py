"""Structured run documents and their JSON Schema.

Every CLI run produces one document::

    {"schema": "dodgson-run/1", "command": ..., "argv": [...],
     "input_digest": "sha256:...", "timestamp": ..., "result": {...}}

``timestamp`` and every ``*_seconds`` field are timings; everything else
is deterministic for identical inputs, flags and seed.
"""

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

SCHEMA_ID = "dodgson-run/1"

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}
_SECONDS = {"type": "number", "minimum": 0}
_STRATEGY = {"enum": ["condensation-strict", "condensation-fallback", "bareiss", "laplace"]}
_ALGORITHM = {"enum": ["condensation", "condensation_with_fallback", "bareiss", "laplace"]}
_RANGE = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

_DET_RESULT = {
    "type": "object",
    "required": ["n", "strategy", "value", "algorithm", "fallback_events", "elapsed_seconds"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "strategy": _STRATEGY,
        "value": _RATIONAL,
        "algorithm": _ALGORITHM,
        "fallback_events": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["layer", "position"],
                "additionalProperties": False,
                "properties": {
                    "layer": {"type": "integer", "minimum": 1},
                    "position": {"type": "array", "items": {"type": "integer", "minimum": 1},
                                 "minItems": 2, "maxItems": 2},
                },
            },
        },
        "elapsed_seconds": _SECONDS,
    },
}

_PARAMS = {
    "type": "object",
    "required": ["n", "a", "b"],
    "additionalProperties": False,
    "properties": {k: {"type": "integer", "minimum": 0} for k in "nab"},
}

_MACMAHON_RESULT = {
    "type": "object",
    "required": ["params", "closed_form", "determinant", "algorithm", "equal"],
    "additionalProperties": False,
    "properties": {
        "params": _PARAMS,
        "closed_form": _RATIONAL,
        "determinant": _RATIONAL,
        "algorithm": _ALGORITHM,
        "equal": {"type": "boolean"},
    },
}

_VERIFY_RESULT = {
    "type": "object",
    "required": ["kind", "grid", "grid_size", "cases_checked", "ok", "counterexample", "elapsed_seconds"],
    "additionalProperties": False,
    "properties": {
        "kind": {"enum": ["identity", "recurrence-L", "recurrence-R", "bhp"]},
        "grid": {"type": "object", "additionalProperties": _RANGE},
        "grid_size": {"type": "integer", "minimum": 0},
        "cases_checked": {"type": "integer", "minimum": 0},
        "ok": {"type": "boolean"},
        "counterexample": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["params", "lhs", "rhs"],
                    "additionalProperties": False,
                    "properties": {"params": _PARAMS, "lhs": _RATIONAL, "rhs": _RATIONAL},
                },
            ]
        },
        "elapsed_seconds": _SECONDS,
    },
}

_BENCH_RESULT = {
    "type": "object",
    "required": ["config", "rows", "agree", "disagreements"],
    "additionalProperties": False,
    "properties": {
        "config": {
            "type": "object",
            "required": ["sizes", "entry_range", "seed", "strategies", "repetitions", "threads"],
            "additionalProperties": False,
            "properties": {
                "sizes": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
                "entry_range": _RANGE,
                "seed": {"type": "integer", "minimum": 0},
                "strategies": {"type": "array", "items": _STRATEGY, "minItems": 1},
                "repetitions": {"type": "integer", "minimum": 1},
                "threads": {"type": "integer", "minimum": 1},
            },
        },
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["size", "strategy", "median_seconds", "fallback_count", "values"],
                "additionalProperties": False,
                "properties": {
                    "size": {"type": "integer", "minimum": 0},
                    "strategy": _STRATEGY,
                    "median_seconds": _SECONDS,
                    "fallback_count": {"type": "integer", "minimum": 0},
                    "values": {"type": "array", "items": _RATIONAL},
                },
            },
        },
        "agree": {"type": "boolean"},
        "disagreements": {"type": "array"},
    },
}


def _command_branch(name, result):
    return {
        "if": {"properties": {"command": {"const": name}}},
        "then": {"properties": {"result": result}},
    }


RUN_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": SCHEMA_ID,
    "type": "object",
    "required": ["schema", "command", "argv", "input_digest", "timestamp", "result"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": SCHEMA_ID},
        "command": {"enum": ["det", "macmahon", "verify", "bench"]},
        "argv": {"type": "array", "items": {"type": "string"}},
        "input_digest": {"type": "string", "pattern": "^sha256:[0-9a-f]{64}$"},
        "timestamp": {"type": "string"},
        "result": {"type": "object"},
    },
    "allOf": [
        _command_branch("det", _DET_RESULT),
        _command_branch("macmahon", _MACMAHON_RESULT),
        _command_branch("verify", _VERIFY_RESULT),
        _command_branch("bench", _BENCH_RESULT),
    ],
}


def digest(data):
    if isinstance(data, str):
        data = data.encode()
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclass
class RunRecord:
    command: str
    argv: list
    input_digest: str
    result: dict
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def to_document(self):
        return {
            "schema": SCHEMA_ID,
            "command": self.command,
            "argv": list(self.argv),
            "input_digest": self.input_digest,
            "timestamp": self.timestamp,
            "result": self.result,
        }

    def to_json(self):
        return json.dumps(self.to_document(), indent=2) + "\n"
