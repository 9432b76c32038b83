"""Stateless HTTP JSON API exposing the solver, sensitivity and aggregation.

Every response is an envelope: ``{"ok": true, "result": ...}`` or
``{"ok": false, "error": {"code", "message", "field"?}}``.  Malformed JSON
bodies get 400, validation failures 422; request handling is pure, so
concurrent requests need no coordination and identical bodies always
produce identical responses.
"""

from __future__ import annotations

import json
import warnings

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse

from . import io as bwmio
from .aggregate import solve_study
from .core import DominanceWarning, InputError, compute_epsilons, consistency_index, solve_analytical
from .sensitivity import MODES, EquivalenceQuery, enumerate_equivalent, grid_size

#: Refuse interactive enumerations scanning more raw candidates than this.
MAX_CANDIDATE_GRID = 10**6


def _ok(result, status: int = 200) -> JSONResponse:
    return JSONResponse({"ok": True, "result": result}, status_code=status)


def _error(code: str, message: str, field: str | None = None, status: int = 422) -> JSONResponse:
    error = {"code": code, "message": message}
    if field:
        error["field"] = field
    return JSONResponse({"ok": False, "error": error}, status_code=status)


def _input_error_response(exc: InputError) -> JSONResponse:
    status = 400 if exc.code == "MalformedJson" else 422
    return _error(exc.code, str(exc), exc.field, status)


async def _body_json(request: Request):
    raw = await request.body()
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError("MalformedJson", f"request body is not valid JSON: {exc}")


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="linbwm", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    async def on_request_validation(_request: Request, exc: RequestValidationError) -> JSONResponse:
        # Keep the envelope contract even for query/path coercion failures.
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ()))
        return _error("SchemaViolation", f"{where}: {first.get('msg', 'invalid value')}", where)

    @app.get("/healthz")
    async def healthz() -> PlainTextResponse:
        return PlainTextResponse("ok")

    @app.post("/api/solve")
    async def solve(request: Request) -> JSONResponse:
        try:
            doc = await _body_json(request)
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always", DominanceWarning)
                pcs = bwmio.pcs_from_document(doc)
                solution = solve_analytical(pcs)
                table = compute_epsilons(pcs)
        except InputError as exc:
            return _input_error_response(exc)
        result = {
            "solution": bwmio.solution_to_document(solution),
            "epsilons": bwmio.epsilon_table_to_document(table, pcs.criteria),
            "warnings": [str(w.message) for w in caught],
        }
        return _ok(result)

    @app.post("/api/sensitivity")
    async def sensitivity(request: Request) -> JSONResponse:
        try:
            body = await _body_json(request)
            if not isinstance(body, dict) or "pcs" not in body:
                raise InputError("SchemaViolation", 'body must be {"pcs": ..., "mode": ...}', "pcs")
            mode = body.get("mode", "worst")
            if mode not in MODES:
                raise InputError("SchemaViolation", f"mode must be one of {MODES}", "mode")
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DominanceWarning)
                pcs = bwmio.pcs_from_document(body["pcs"])
                query = EquivalenceQuery(base=pcs, mode=mode)
                if grid_size(query) > MAX_CANDIDATE_GRID:
                    return _error(
                        "SearchSpaceTooLarge",
                        f"candidate grid exceeds {MAX_CANDIDATE_GRID} entries",
                        status=413,
                    )
                family = enumerate_equivalent(query)
        except InputError as exc:
            return _input_error_response(exc)
        result = {"mode": family.mode, "count": family.count}
        if not body.get("count_only"):
            result["members"] = [bwmio.pcs_to_document(m) for m in family.members]
        return _ok(result)

    @app.post("/api/aggregate")
    async def aggregate(request: Request) -> JSONResponse:
        try:
            doc = await _body_json(request)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DominanceWarning)
                study = bwmio.study_from_document(doc)
                outcome = solve_study(study)
        except InputError as exc:
            return _input_error_response(exc)
        return _ok(bwmio.aggregation_to_document(study, outcome))

    @app.get("/api/ci")
    async def ci(n: int, abw: float) -> JSONResponse:
        try:
            value = consistency_index(n, abw)
        except InputError as exc:
            return _input_error_response(exc)
        return _ok(value)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


app = create_app()
