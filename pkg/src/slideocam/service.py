"""Stateless HTTP front end.

POST /api/v1/evaluate    design config in, full analysis out
POST /api/v1/synthesize  load case in, sized design out
GET  /api/v1/health      liveness probe

Bodies are parsed by hand so a malformed payload yields 400 instead of
the framework's default.  Schema violations and geometry-gate failures
yield 422 (the latter carrying the constraint ledger); designs that only
break a strength or pressure-angle rule evaluate to 200 with their
ledger entries flagged, so a client can show the curves next to the red
cells.  An exhausted synthesis search yields 409.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__, analysis, config as config_mod
from .errors import Infeasible, SlideocamError
from .synthesis import synthesize


def _error(status: int, error: str, message: str, **extra) -> JSONResponse:
    detail = {"error": error, "message": message}
    detail.update(extra)
    return JSONResponse(status_code=status, content={"detail": detail})


async def _parse_body(request: Request):
    raw = await request.body()
    try:
        return json.loads(raw)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValueError(f"request body is not valid JSON: {exc}") from exc


def create_app() -> FastAPI:
    app = FastAPI(title="slideocam", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/v1/health")
    async def health():
        return {"status": "ok"}

    @app.post("/api/v1/evaluate")
    async def evaluate(request: Request):
        try:
            doc = await _parse_body(request)
        except ValueError as exc:
            return _error(400, "malformed-json", str(exc))
        try:
            params, options = config_mod.design_from_config(doc)
        except (config_mod.ConfigError, ValueError) as exc:
            return _error(422, "invalid-config", str(exc))
        try:
            payload = analysis.evaluate_design(params, options)
        except analysis.DesignRejected as exc:
            return _error(
                422,
                "constraints-violated",
                str(exc),
                constraints=analysis.constraints_payload(exc.report),
            )
        except SlideocamError as exc:
            return _error(422, "invalid-design", str(exc))
        return JSONResponse(payload)

    @app.post("/api/v1/synthesize")
    async def do_synthesize(request: Request):
        try:
            doc = await _parse_body(request)
        except ValueError as exc:
            return _error(400, "malformed-json", str(exc))
        try:
            req = config_mod.request_from_config(doc)
        except (config_mod.ConfigError, ValueError) as exc:
            return _error(422, "invalid-config", str(exc))
        try:
            outcome = synthesize(req)
        except Infeasible as exc:
            return _error(
                409,
                "infeasible",
                "no feasible design within the search limits",
                trace=analysis.trace_payload(exc.trace),
            )
        return JSONResponse(analysis.synthesize_payload(outcome))

    return app
