"""Canonical file formats: parsing and rendering of systems, studies, results.

JSON is the canonical representation.  Comparison vectors are stored as
label-keyed maps so documents stay readable and order independent; parsing
validates against a JSON schema first (field-precise messages), then
delegates to the core validators.  A minimal CSV import covers single
comparison systems for spreadsheet users.
"""

from __future__ import annotations

import csv
import io as _stdio
import json
from importlib import resources
from typing import Mapping

import jsonschema

from .aggregate import AggregationResult, GroupStudy
from .core import (
    SAATY_SCALE_MAX,
    AnalyticalSolution,
    EpsilonTable,
    InputError,
    PairwiseComparisonSystem,
    Pivot,
    validate_pcs,
)

PCS_SCHEMA = {
    "type": "object",
    "required": ["criteria", "best", "worst", "best_to_others", "others_to_worst"],
    "additionalProperties": False,
    "properties": {
        "criteria": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "best": {"type": "string"},
        "worst": {"type": "string"},
        "best_to_others": {"type": "object", "additionalProperties": {"type": "number"}},
        "others_to_worst": {"type": "object", "additionalProperties": {"type": "number"}},
        "scale_max": {"type": "integer", "minimum": 1},
    },
}

_BLOCK_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "oneOf": [{"required": ["pcs"]}, {"required": ["weights"]}],
    "properties": {
        "pcs": PCS_SCHEMA,
        "weights": {"type": "object", "additionalProperties": {"type": "number"}},
    },
}

STUDY_SCHEMA = {
    "type": "object",
    "required": ["categories", "drivers", "experts", "category_input", "driver_input"],
    "additionalProperties": False,
    "properties": {
        "categories": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "drivers": {
            "type": "object",
            "additionalProperties": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        },
        "experts": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "category_input": {"type": "object", "additionalProperties": _BLOCK_SCHEMA},
        "driver_input": {
            "type": "object",
            "additionalProperties": {"type": "object", "additionalProperties": _BLOCK_SCHEMA},
        },
        "meta": {"type": "object"},
    },
}


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            "MalformedJson", f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        )


def _check_schema(instance, schema, kind: str) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(instance), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        path = ".".join(str(p) for p in err.absolute_path) or "(root)"
        raise InputError("SchemaViolation", f"{kind} field {path}: {err.message}", path)


def _vector_from_map(values: Mapping[str, float], criteria, name: str) -> list[float]:
    missing = [c for c in criteria if c not in values]
    if missing:
        raise InputError(
            "SchemaViolation", f"{name} lacks entries for: {', '.join(missing)}", name
        )
    extra = sorted(set(values) - set(criteria))
    if extra:
        raise InputError(
            "SchemaViolation", f"{name} names unknown criteria: {', '.join(extra)}", name
        )
    return [float(values[c]) for c in criteria]


def pcs_from_document(doc: Mapping, default_scale_max: int = SAATY_SCALE_MAX) -> PairwiseComparisonSystem:
    """Validate a parsed comparison-system document into a core system."""
    _check_schema(doc, PCS_SCHEMA, "comparison system")
    criteria = list(doc["criteria"])
    for key in ("best", "worst"):
        if doc[key] not in criteria:
            raise InputError(
                "SchemaViolation", f"{key} {doc[key]!r} is not in criteria", key
            )
    record = {
        "criteria": criteria,
        "best": doc["best"],
        "worst": doc["worst"],
        "best_to_others": _vector_from_map(doc["best_to_others"], criteria, "best_to_others"),
        "others_to_worst": _vector_from_map(doc["others_to_worst"], criteria, "others_to_worst"),
        "scale_max": doc.get("scale_max", default_scale_max),
    }
    return validate_pcs(record)


def parse_pcs(text: str, default_scale_max: int = SAATY_SCALE_MAX) -> PairwiseComparisonSystem:
    """Parse a UTF-8 JSON comparison-system document."""
    return pcs_from_document(_load_json(text), default_scale_max)


def pcs_to_document(pcs: PairwiseComparisonSystem) -> dict:
    return {
        "criteria": list(pcs.criteria),
        "best": pcs.criteria[pcs.best],
        "worst": pcs.criteria[pcs.worst],
        "best_to_others": dict(zip(pcs.criteria, pcs.best_to_others)),
        "others_to_worst": dict(zip(pcs.criteria, pcs.others_to_worst)),
        "scale_max": pcs.scale_max,
    }


def render_pcs(pcs: PairwiseComparisonSystem) -> str:
    return json.dumps(pcs_to_document(pcs), indent=2) + "\n"


def parse_pcs_csv(text: str, default_scale_max: int = SAATY_SCALE_MAX) -> PairwiseComparisonSystem:
    """Parse the spreadsheet-friendly CSV layout of a single system.

    Columns: ``criterion``, ``best_to_others``, ``others_to_worst`` and an
    optional ``role`` column marking one row ``best`` and one ``worst``.
    """
    reader = csv.DictReader(_stdio.StringIO(text))
    required = {"criterion", "best_to_others", "others_to_worst"}
    if reader.fieldnames is None or not required <= set(reader.fieldnames):
        raise InputError(
            "SchemaViolation",
            "CSV header must contain columns: criterion, best_to_others, others_to_worst",
            "header",
        )
    criteria, ab, aw = [], [], []
    best = worst = None
    for row in reader:
        label = (row.get("criterion") or "").strip()
        if not label:
            continue
        criteria.append(label)
        try:
            ab.append(float(row["best_to_others"]))
            aw.append(float(row["others_to_worst"]))
        except (TypeError, ValueError):
            raise InputError(
                "SchemaViolation", f"non-numeric comparison for criterion {label!r}", label
            )
        role = (row.get("role") or "").strip().lower()
        if role == "best":
            best = label
        elif role == "worst":
            worst = label
    if best is None or worst is None:
        raise InputError(
            "SchemaViolation", "role column must mark exactly one best and one worst row", "role"
        )
    return validate_pcs(
        {
            "criteria": criteria,
            "best": best,
            "worst": worst,
            "best_to_others": ab,
            "others_to_worst": aw,
            "scale_max": default_scale_max,
        }
    )


def _block_from_document(block: Mapping, default_scale_max: int):
    if "pcs" in block:
        return pcs_from_document(block["pcs"], default_scale_max)
    return {str(k): float(v) for k, v in block["weights"].items()}


def study_from_document(doc: Mapping, default_scale_max: int = SAATY_SCALE_MAX) -> GroupStudy:
    _check_schema(doc, STUDY_SCHEMA, "study")
    categories = tuple(doc["categories"])
    missing = [c for c in categories if c not in doc["drivers"]]
    if missing:
        raise InputError(
            "SchemaViolation", f"drivers lacks entries for categories: {', '.join(missing)}", "drivers"
        )
    drivers = {c: tuple(doc["drivers"][c]) for c in categories}
    experts = tuple(doc["experts"])
    category_input = {
        e: _block_from_document(b, default_scale_max) for e, b in doc["category_input"].items()
    }
    driver_input = {
        e: {c: _block_from_document(b, default_scale_max) for c, b in blocks.items()}
        for e, blocks in doc["driver_input"].items()
    }
    return GroupStudy(
        categories=categories,
        drivers=drivers,
        experts=experts,
        category_input=category_input,
        driver_input=driver_input,
    )


def parse_study(text: str, default_scale_max: int = SAATY_SCALE_MAX) -> GroupStudy:
    """Parse a UTF-8 JSON study document."""
    return study_from_document(_load_json(text), default_scale_max)


def _block_to_document(block) -> dict:
    if isinstance(block, PairwiseComparisonSystem):
        return {"pcs": pcs_to_document(block)}
    return {"weights": dict(block)}


def study_to_document(study: GroupStudy) -> dict:
    return {
        "categories": list(study.categories),
        "drivers": {c: list(ds) for c, ds in study.drivers.items()},
        "experts": list(study.experts),
        "category_input": {e: _block_to_document(b) for e, b in study.category_input.items()},
        "driver_input": {
            e: {c: _block_to_document(b) for c, b in blocks.items()}
            for e, blocks in study.driver_input.items()
        },
    }


def render_study(study: GroupStudy) -> str:
    return json.dumps(study_to_document(study), indent=2) + "\n"


def pivot_to_document(pivot: Pivot, criteria) -> dict:
    return {
        "kind": pivot.kind,
        "i": None if pivot.i is None else criteria[pivot.i],
        "j": None if pivot.j is None else criteria[pivot.j],
        "label": pivot.describe(criteria),
    }


def epsilon_table_to_document(table: EpsilonTable, criteria) -> dict:
    return {
        "d1": [criteria[i] for i in table.d1],
        "d2": [criteria[i] for i in table.d2],
        "d3": [criteria[i] for i in table.d3],
        "eps_single": {criteria[i]: v for i, v in sorted(table.eps_single.items())},
        "eps_pair": [
            {"i": criteria[i], "j": criteria[j], "value": v}
            for (i, j), v in sorted(table.eps_pair.items())
        ],
        "eta": table.eta,
        "pivot": pivot_to_document(table.pivot, criteria),
    }


def solution_to_document(sol: AnalyticalSolution) -> dict:
    return {
        "criteria": list(sol.criteria),
        "weights": dict(zip(sol.criteria, sol.weights)),
        "sigma": sol.sigma,
        "epsilon_star": sol.epsilon_star,
        "case": pivot_to_document(sol.pivot, sol.criteria),
        "ci": sol.ci,
        "cr": sol.cr,
    }


def _fmt4(value: float | None) -> str:
    return "undefined" if value is None else f"{value:.4f}"


def render_solution(sol: AnalyticalSolution, fmt: str = "json") -> str:
    """Render a solution as full-precision JSON or a 4-decimal table/CSV."""
    if fmt == "json":
        return json.dumps(solution_to_document(sol), indent=2) + "\n"

    summary = [
        ("case", sol.pivot.describe(sol.criteria)),
        ("sigma", _fmt4(sol.sigma)),
        ("epsilon*", _fmt4(sol.epsilon_star)),
        ("CI", _fmt4(sol.ci)),
        ("CR", _fmt4(sol.cr)),
    ]
    if fmt == "csv":
        out = ["criterion,weight"]
        out += [f"{c},{w:.4f}" for c, w in zip(sol.criteria, sol.weights)]
        out += [f"{k},{v}" for k, v in summary]
        return "\n".join(out) + "\n"
    if fmt == "table":
        width = max(len("criterion"), *(len(c) for c in sol.criteria), *(len(k) for k, _ in summary))
        lines = [f"{'criterion':<{width}}  weight"]
        lines += [f"{c:<{width}}  {w:.4f}" for c, w in zip(sol.criteria, sol.weights)]
        lines.append("")
        lines += [f"{k:<{width}}  {v}" for k, v in summary]
        return "\n".join(lines) + "\n"
    raise InputError("SchemaViolation", f"unknown format {fmt!r}", "format")


def aggregation_to_document(study: GroupStudy, result: AggregationResult) -> dict:
    order = study.driver_order()
    return {
        "categories": list(study.categories),
        "experts": list(study.experts),
        "drivers": {c: list(ds) for c, ds in study.drivers.items()},
        "driver_order": list(order),
        "category_weights": {e: dict(result.category_weights[e]) for e in study.experts},
        "local_weights": {e: dict(result.local_weights[e]) for e in study.experts},
        "global_weights": {e: dict(result.global_weights[e]) for e in study.experts},
        "final_weights": dict(result.final_weights),
        "ranking": list(result.ranking),
        "blocks": [
            {
                "expert": r.expert,
                "category": r.category,
                "epsilon_star": r.epsilon_star,
                "ci": r.ci,
                "cr": r.cr,
            }
            for r in result.block_reports
        ],
    }


def render_aggregation(study: GroupStudy, result: AggregationResult, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(aggregation_to_document(study, result), indent=2) + "\n"
    if fmt == "table":
        order = study.driver_order()
        width = max(len("driver"), *(len(d) for d in order))
        position = {d: k + 1 for k, d in enumerate(result.ranking)}
        lines = [f"{'driver':<{width}}  final weight  rank"]
        for d in order:
            lines.append(f"{d:<{width}}  {result.final_weights[d]:>12.4f}  {position[d]:>4}")
        return "\n".join(lines) + "\n"
    raise InputError("SchemaViolation", f"unknown format {fmt!r}", "format")


def fixture_path(name: str):
    """Path to a bundled example document (e.g. ``example1.json``)."""
    return resources.files("linbwm") / "fixtures" / name


def load_fixture_text(name: str) -> str:
    return fixture_path(name).read_text(encoding="utf-8")
