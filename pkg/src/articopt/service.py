"""HTTP API over a read-only agreement store.

The store loads once at startup; every handler is a pure function of the
store and the request body, so concurrent requests are safe and repeated
requests yield identical bodies. Infeasible planning problems map to 422
(the request itself is well-formed); malformed bodies and unknown ids map
to 400. Every non-2xx body is ``{"error": code, "detail": text, ...}``.
"""

from __future__ import annotations

from decimal import Decimal
from typing import Any

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field
from starlette.exceptions import HTTPException as StarletteHTTPException

from .errors import ExplosionError, InfeasibleError, ValidationError
from .evaluate import score_plan, unit_cap_check
from .ingest import AgreementStore, resolve_plan, serialize_catalog, validate_selection
from .model import Constraints, Selection
from .report import render_json, synthesize_rows
from .solver import solve

_STATUS_CODES = {
    400: "bad_request",
    404: "not_found",
    405: "method_not_allowed",
    422: "unprocessable",
    500: "internal_error",
}


class SolveRequest(BaseModel):
    agreement_ids: list[str] = Field(min_length=1)
    pins: list[str] = []
    excludes: list[str] = []
    unit_cap: float = 60.0


class ScoreRequest(BaseModel):
    agreement_ids: list[str] = Field(min_length=1)
    plan: list[str]


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


def _selection(store: AgreementStore, agreement_ids: list[str]) -> Selection:
    try:
        return validate_selection(agreement_ids, store)
    except ValidationError as exc:
        raise _bad_request(exc) from exc


def create_app(store: AgreementStore) -> FastAPI:
    app = FastAPI(title="articopt", docs_url=None, redoc_url=None)
    # the browser UI is served statically from another origin
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(RequestValidationError)
    async def on_invalid_body(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "bad_request", "detail": str(exc.errors())},
        )

    @app.exception_handler(StarletteHTTPException)
    async def on_http_error(request: Request, exc: StarletteHTTPException):
        if isinstance(exc.detail, dict):
            body: dict[str, Any] = exc.detail
        else:
            body = {
                "error": _STATUS_CODES.get(exc.status_code, "error"),
                "detail": str(exc.detail),
            }
        return JSONResponse(status_code=exc.status_code, content=body)

    @app.get("/api/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.get("/api/catalog")
    def catalog() -> dict[str, Any]:
        return serialize_catalog(store.catalog)

    @app.get("/api/agreements")
    def agreements() -> list[dict[str, str]]:
        return [
            {
                "id": a.store_id,
                "institution": a.institution,
                "major": a.major,
                "year": a.year,
                "kind": a.kind,
            }
            for a in store.agreements
        ]

    @app.post("/api/solve")
    def solve_endpoint(body: SolveRequest) -> dict[str, Any]:
        selection = _selection(store, body.agreement_ids)
        try:
            constraints = Constraints(
                pinned=resolve_plan(body.pins, store.catalog),
                excluded=resolve_plan(body.excludes, store.catalog),
            )
        except ValidationError as exc:
            raise _bad_request(exc) from exc
        try:
            solution = solve(selection, constraints)
        except InfeasibleError as exc:
            raise HTTPException(
                status_code=422,
                detail={
                    "error": "INFEASIBLE",
                    "detail": str(exc),
                    "unsatisfiable": exc.unsatisfiable,
                },
            ) from exc
        except ExplosionError as exc:
            raise HTTPException(
                status_code=422,
                detail={"error": "EXPLOSION", "detail": str(exc)},
            ) from exc
        report = synthesize_rows(solution, selection)
        cap_check = unit_cap_check(
            solution.canonical_plan,
            store.catalog,
            Decimal(str(body.unit_cap)),
        )
        warning = None
        if not cap_check.passed:
            warning = {
                "total_units": float(cap_check.total_units),
                "cap": float(cap_check.cap),
            }
        return {
            "opt_size": solution.opt_size,
            "forced": sorted(solution.forced),
            "canonical_plan": sorted(solution.canonical_plan),
            "all_optima": sorted(sorted(plan) for plan in solution.all_optima),
            "report": render_json(report),
            "unit_cap_warning": warning,
        }

    @app.post("/api/score")
    def score_endpoint(body: ScoreRequest) -> dict[str, Any]:
        selection = _selection(store, body.agreement_ids)
        try:
            candidate = resolve_plan(body.plan, store.catalog)
        except ValidationError as exc:
            raise _bad_request(exc) from exc
        try:
            report = score_plan(candidate, selection)
        except InfeasibleError as exc:
            raise HTTPException(
                status_code=422,
                detail={
                    "error": "INFEASIBLE",
                    "detail": str(exc),
                    "unsatisfiable": exc.unsatisfiable,
                },
            ) from exc
        return {
            "missing": report.missing,
            "excess": report.excess,
            "total": report.total,
            "nearest_optimum": sorted(report.nearest_optimum),
            "unfulfilled": [list(pair) for pair in report.unfulfilled],
        }

    return app
