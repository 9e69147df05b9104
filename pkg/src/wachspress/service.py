"""Stateless JSON-over-HTTP evaluation service for coordinates and deformation.

Endpoints: POST /v1/coordinates, POST /v1/deform, GET/HEAD /v1/health.
Errors use {"error": string} with 400 for malformed JSON, 404 for unknown
routes, and 422 for well-formed requests that fail validation.
"""

from __future__ import annotations

import math

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, model_validator
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import __version__
from .coordinates import beta_matrix, deform


class ServiceError(Exception):
    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


class CoordinatesRequest(BaseModel):
    polygon: list[tuple[float, float]]
    points: list[tuple[float, float]]

    @model_validator(mode="after")
    def _finite(self):
        for pair in list(self.polygon) + list(self.points):
            if not all(math.isfinite(v) for v in pair):
                raise ValueError("coordinates must be finite numbers")
        return self


class DeformRequest(BaseModel):
    source: list[tuple[float, float]]
    target: list[tuple[float, float]]
    points: list[tuple[float, float]]

    @model_validator(mode="after")
    def _finite(self):
        for pair in list(self.source) + list(self.target) + list(self.points):
            if not all(math.isfinite(v) for v in pair):
                raise ValueError("coordinates must be finite numbers")
        return self


def _check_polygon(polygon: list[tuple[float, float]]) -> str | None:
    """422 on degenerate input; a non-convex polygon only draws a warning."""
    d = len(polygon)
    if d < 3:
        raise ServiceError(422, "polygon needs at least 3 vertices")
    for i in range(d):
        for j in range(i + 1, d):
            if (
                abs(polygon[i][0] - polygon[j][0]) <= 1e-12
                and abs(polygon[i][1] - polygon[j][1]) <= 1e-12
            ):
                raise ServiceError(422, f"vertices {i + 1} and {j + 1} coincide")
    signs = set()
    for i in range(d):
        ax, ay = polygon[i]
        bx, by = polygon[(i + 1) % d]
        cx, cy = polygon[(i + 2) % d]
        cross = (bx - ax) * (cy - by) - (by - ay) * (cx - bx)
        if abs(cross) > 1e-9:
            signs.add(cross > 0)
    if len(signs) != 1:
        return "non-convex polygon"
    return None


def _sanitize(rows, warnings, width):
    for idx, row in enumerate(rows):
        if not all(math.isfinite(v) for v in row):
            rows[idx] = [0.0] * width
            warnings[idx] = warnings[idx] or "non-finite"
    return rows, warnings


def create_app() -> FastAPI:
    app = FastAPI(title="wachspress evaluation service", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ServiceError)
    async def service_error(request, exc: ServiceError):
        return JSONResponse({"error": exc.message}, status_code=exc.status)

    @app.exception_handler(RequestValidationError)
    async def validation_error(request, exc: RequestValidationError):
        errors = exc.errors()
        if any(str(e.get("type", "")).startswith("json") for e in errors):
            return JSONResponse({"error": "malformed JSON body"}, status_code=400)
        first = errors[0] if errors else {}
        loc = ".".join(str(p) for p in first.get("loc", ()))
        msg = first.get("msg", "invalid request")
        return JSONResponse({"error": f"{loc}: {msg}".strip(": ")}, status_code=422)

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request, exc: StarletteHTTPException):
        return JSONResponse({"error": str(exc.detail)}, status_code=exc.status_code)

    @app.api_route("/v1/health", methods=["GET", "HEAD"])
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/v1/coordinates")
    async def coordinates(req: CoordinatesRequest):
        polygon_warning = _check_polygon(req.polygon)
        rows, warnings = beta_matrix(req.polygon, req.points)
        rows, warnings = _sanitize(rows, warnings, len(req.polygon))
        return {
            "coords": rows,
            "warnings": warnings,
            "polygon_warning": polygon_warning,
        }

    @app.post("/v1/deform")
    async def deform_points(req: DeformRequest):
        polygon_warning = _check_polygon(req.source)
        if len(req.target) != len(req.source):
            raise ServiceError(
                422,
                f"target has {len(req.target)} vertices, source has {len(req.source)}",
            )
        out, warnings = deform(req.source, req.target, req.points)
        rows = [list(p) for p in out]
        rows, warnings = _sanitize(rows, warnings, 2)
        return {
            "points": rows,
            "warnings": warnings,
            "polygon_warning": polygon_warning,
        }

    return app


def serve(host: str = "127.0.0.1", port: int = 8787):
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port, log_level="warning")
