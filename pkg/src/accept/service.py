"""JSON HTTP service: POST /api/v1/analyze plus health and version probes.

Configuration via environment variables:
  ACCEPT_MAX_REQUEST_BYTES  request size cap (default 65536)
  ACCEPT_REQUEST_TIMEOUT    per-request analysis timeout in seconds (default 60)
"""

from __future__ import annotations

import asyncio
import json
import os

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from fastapi.staticfiles import StaticFiles

from . import __version__
from .bundle import bundle_to_json, parse_request, run_analyze
from .curve import AcceptabilityCurve, PercentileMarkers
from .errors import AcceptError, NotConverged, TooManyCurves, ValidationError
from .report import PlotSpec, render_curve_svg

MAX_REQUEST_BYTES = int(os.environ.get("ACCEPT_MAX_REQUEST_BYTES", str(64 * 1024)))
REQUEST_TIMEOUT = float(os.environ.get("ACCEPT_REQUEST_TIMEOUT", "60"))

app = FastAPI(title="accept", version=__version__, docs_url=None, redoc_url=None)


def _error_response(status: int, code: str, message: str,
                    field_path: str | None = None) -> JSONResponse:
    body = {"code": code, "message": message}
    if field_path is not None:
        body["field_path"] = field_path
    return JSONResponse(body, status_code=status)


def _embed_svg(bundle: dict) -> None:
    for trial in bundle["trials"]:
        for mode in ("freq", "bayes"):
            if mode not in trial:
                continue
            side = trial[mode]
            curve = AcceptabilityCurve(
                trial_name=trial["name"],
                points=tuple((t, v) for t, v in side["curve"]["points"]),
                source=side["curve"]["source"])
            m = side["markers"]
            markers = PercentileMarkers(lower=tuple(m["lower"]),
                                        median=tuple(m["median"]),
                                        upper=tuple(m["upper"]))
            side["svg"] = render_curve_svg(PlotSpec(curves=(curve,), markers=(markers,)))


@app.post("/api/v1/analyze")
async def analyze(request: Request, svg: bool = False):
    body = await request.body()
    if len(body) > MAX_REQUEST_BYTES:
        return _error_response(413, "request_too_large",
                               f"request exceeds {MAX_REQUEST_BYTES} bytes")
    try:
        obj = json.loads(body)
    except json.JSONDecodeError as exc:
        return _error_response(400, "bad_json", str(exc))

    try:
        req = parse_request(obj)
    except TooManyCurves as exc:
        return _error_response(413, exc.code, exc.message, exc.field_path)
    except ValidationError as exc:
        return _error_response(400, exc.code, exc.message, exc.field_path)

    try:
        bundle = await asyncio.wait_for(asyncio.to_thread(run_analyze, req),
                                        timeout=REQUEST_TIMEOUT)
    except asyncio.TimeoutError:
        return _error_response(504, "timeout",
                               f"analysis exceeded {REQUEST_TIMEOUT} s")
    except NotConverged as exc:
        return _error_response(422, exc.code, exc.message)
    except AcceptError as exc:
        return _error_response(400, exc.code, exc.message, exc.field_path)

    if svg:
        _embed_svg(bundle)
    return Response(bundle_to_json(bundle), media_type="application/json")


@app.get("/api/v1/health")
async def health():
    return {"status": "ok"}


@app.get("/api/v1/version")
async def version():
    return {"version": __version__}


_STATIC_DIR = os.environ.get("ACCEPT_STATIC_DIR")
if _STATIC_DIR and os.path.isdir(_STATIC_DIR):
    app.mount("/", StaticFiles(directory=_STATIC_DIR, html=True), name="ui")
