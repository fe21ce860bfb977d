"""HTTP service wrapping the refinement pipeline.

POST /api/subdivide runs one refinement request and returns the full run
report; GET /api/health reports liveness and the package version.  When a
UI directory is configured its static files are served from the root path.

The pipeline is deterministic and stateless, so identical request bodies
produce byte-identical responses.  Error responses carry a JSON body
``{"error": {"code", "message", "index"?}}``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from . import __version__
from .errors import (
    ClothoidError,
    ParseError,
    ResourceLimit,
    SequenceTooShort,
    ValidationError,
)
from .fit import FitOptions
from .formats import build_scheme, document_from_dict, run_refinement, serialize_report
from .geometry import QuadratureConfig
from .subdivision import DEFAULT_OMEGA, FourPointOuter

# Request guards: documents stay small enough for interactive use.
MAX_REQUEST_BYTES = 2 * 1024 * 1024
MAX_REQUEST_COUPLES = 512
MAX_REQUEST_LEVELS = 10


def _json_response(payload: dict[str, Any], status: int = 200) -> Response:
    return Response(
        content=json.dumps(payload, sort_keys=True, separators=(",", ":")),
        status_code=status,
        media_type="application/json",
    )


def _error(status: int, code: str, message: str, index: int | None = None) -> Response:
    body: dict[str, Any] = {"error": {"code": code, "message": message}}
    if index is not None:
        body["error"]["index"] = index
    return _json_response(body, status=status)


def _pick_int(data: dict[str, Any], key: str, fallback: int) -> int:
    value = data.get(key, fallback)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"'{key}' must be an integer", code=key)
    return value


def _pick_float(data: dict[str, Any], key: str, fallback: float) -> float:
    value = data.get(key, fallback)
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"'{key}' must be a number", code=key)
    return float(value)


def create_app(ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="clothoidal", version=__version__, docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    def health() -> Response:
        return _json_response({"status": "ok", "version": __version__})

    @app.post("/api/subdivide")
    async def subdivide_endpoint(request: Request) -> Response:
        raw = await request.body()
        if len(raw) > MAX_REQUEST_BYTES:
            return _error(413, "request_too_large", "request body exceeds 2 MiB")
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            return _error(
                400, "parse_error", f"invalid JSON: {exc.msg} at line {exc.lineno}"
            )
        if not isinstance(data, dict):
            return _error(400, "not_object", "request body must be a JSON object")

        raw_input = data.get("input")
        if not isinstance(raw_input, dict):
            return _error(400, "input", "request needs an 'input' document object")
        raw_couples = raw_input.get("couples")
        if isinstance(raw_couples, list) and len(raw_couples) > MAX_REQUEST_COUPLES:
            return _error(
                413,
                "too_many_couples",
                f"at most {MAX_REQUEST_COUPLES} couples per request, "
                f"got {len(raw_couples)}",
            )

        try:
            levels = _pick_int(data, "levels", 5)
            if not 0 <= levels <= MAX_REQUEST_LEVELS:
                return _error(
                    400,
                    "levels_out_of_range",
                    f"levels must be in [0, {MAX_REQUEST_LEVELS}], got {levels}",
                )
            document = document_from_dict(raw_input)
            scheme_name = data.get("scheme", "lr1")
            if not isinstance(scheme_name, str):
                return _error(400, "scheme", "'scheme' must be a string")
            outer_name = data.get("fourpoint_outer", "average")
            outer = (
                FourPointOuter.COMPONENTWISE_MEAN
                if outer_name == "mean"
                else FourPointOuter.CLOTHOID_AVERAGE
            )
            scheme = build_scheme(
                scheme_name,
                omega=_pick_float(data, "omega", DEFAULT_OMEGA),
                fit=FitOptions(
                    newton_steps=_pick_int(data, "newton_steps", 0),
                    quad=QuadratureConfig(
                        nodes_per_interval=_pick_int(data, "quad_nodes", 3),
                        subintervals=_pick_int(data, "quad_panels", 1),
                    ),
                ),
                outer=outer,
            )
        except ValidationError as exc:
            if exc.code == "coincident_points":
                # Coincident couples are a fit impossibility, not a shape
                # problem with the request.
                return _error(422, exc.code, str(exc), index=exc.index)
            return _error(400, exc.code, str(exc), index=exc.index)
        except ParseError as exc:
            return _error(400, "parse_error", str(exc))

        want_curvature = data.get("want_curvature", True)
        if not isinstance(want_curvature, bool):
            return _error(400, "want_curvature", "'want_curvature' must be a boolean")
        try:
            report = run_refinement(
                document.to_sequence(), scheme, levels, want_curvature=want_curvature
            )
        except ResourceLimit as exc:
            return _error(413, "resource_limit", str(exc))
        except (ValidationError, SequenceTooShort) as exc:
            code = exc.code if isinstance(exc, ValidationError) else "sequence_too_short"
            return _error(400, code, str(exc), index=getattr(exc, "index", None))
        except ClothoidError as exc:
            return _error(
                422,
                type(exc).__name__.lower(),
                str(exc),
                index=getattr(exc, "index", None),
            )
        return Response(
            content=serialize_report(report), media_type="application/json"
        )

    if ui_dir is not None:
        root = Path(ui_dir)
        if root.is_dir():
            app.mount("/", StaticFiles(directory=root, html=True), name="ui")
            return app

    @app.get("/")
    def missing_ui() -> Response:
        return _error(
            404,
            "ui_missing",
            "no UI bundle configured; build frontend/ and pass --ui-dir",
        )

    return app
