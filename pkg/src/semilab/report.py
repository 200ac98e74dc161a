"""JSON documents emitted by the command line tool.

Field order is fixed by construction, so equal inputs serialise to equal
bytes.  Only the ``timings`` member varies between runs.
"""

from __future__ import annotations

import time
from typing import Any

from .cayley import CayleyTable, idempotents
from .classify import FLAG_NAMES, classify
from .green import green_profile
from .pattern import verify_main_theorem_finite

ANALYSIS_SCHEMA_VERSION = "semilab.analysis/1"
CENSUS_RECORD_VERSION = "semilab.census-record/1"
CENSUS_SUMMARY_VERSION = "semilab.census-summary/1"

_partition = {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1}}
_map = {"anyOf": [{"type": "null"}, {"type": "array", "items": {"type": "integer", "minimum": 0}}]}

ANALYSIS_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "semilab analysis report",
    "type": "object",
    "required": ["schema", "input", "order", "table", "idempotents", "partitions", "maps",
                 "flags", "witnesses", "embedding", "main_theorem", "timings"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": ANALYSIS_SCHEMA_VERSION},
        "input": {
            "type": "object",
            "required": ["path", "name"],
            "properties": {"path": {"type": ["string", "null"]}, "name": {"type": ["string", "null"]}},
        },
        "order": {"type": "integer", "minimum": 1},
        "table": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        "idempotents": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "partitions": {
            "type": "object",
            "required": ["L", "R", "L*", "R*", "L~", "R~"],
            "additionalProperties": False,
            "properties": {k: _partition for k in ["L", "R", "L*", "R*", "L~", "R~"]},
        },
        "maps": {
            "type": "object",
            "required": ["ell", "r"],
            "properties": {"ell": _map, "r": _map},
        },
        "flags": {
            "type": "object",
            "required": list(FLAG_NAMES),
            "additionalProperties": False,
            "properties": {k: {"type": "boolean"} for k in FLAG_NAMES},
        },
        "witnesses": {"type": "object", "propertyNames": {"enum": list(FLAG_NAMES)}},
        "embedding": _map,
        "main_theorem": {
            "anyOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["adequate", "contains_M", "avoids_F", "consistent"],
                    "properties": {k: {"type": "boolean"} for k in ["adequate", "contains_M", "avoids_F", "consistent"]},
                },
            ]
        },
        "timings": {"type": "object", "additionalProperties": {"type": "number"}},
    },
}


def analysis_report(table: CayleyTable, path: str | None = None) -> dict[str, Any]:
    start = time.perf_counter()
    profile = green_profile(table)
    t_green = time.perf_counter()
    report = classify(table, profile)
    main = None
    if report.amiable:
        check = verify_main_theorem_finite(table, profile)
        main = {
            "adequate": check.adequate,
            "contains_M": check.contains_M,
            "avoids_F": check.avoids_F,
            "consistent": check.consistent,
        }
    t_done = time.perf_counter()
    return {
        "schema": ANALYSIS_SCHEMA_VERSION,
        "input": {"path": path, "name": table.name},
        "order": table.order,
        "table": table.rows(),
        "idempotents": list(idempotents(table)),
        "partitions": {
            "L": profile.L.as_lists(),
            "R": profile.R.as_lists(),
            "L*": profile.Lstar.as_lists(),
            "R*": profile.Rstar.as_lists(),
            "L~": profile.Ltilde.as_lists(),
            "R~": profile.Rtilde.as_lists(),
        },
        "maps": {
            "ell": None if profile.ell is None else list(profile.ell),
            "r": None if profile.r is None else list(profile.r),
        },
        "flags": report.flags(),
        "witnesses": report.witnesses,
        "embedding": None if report.embedding is None else list(report.embedding.map),
        "main_theorem": main,
        "timings": {"green_s": t_green - start, "total_s": t_done - start},
    }


def census_record(table: CayleyTable, index: int, flags: dict[str, bool] | None) -> dict[str, Any]:
    rec: dict[str, Any] = {"schema": CENSUS_RECORD_VERSION, "index": index, "order": table.order, "table": table.rows()}
    if flags is not None:
        rec["flags"] = flags
    return rec
