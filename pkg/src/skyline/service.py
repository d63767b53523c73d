"""Stateless HTTP/JSON facade over the catalog and analysis layers.

Every handler calls only pure functions over the immutable preset store
loaded at startup, so requests can run concurrently and any request order
yields identical responses. Response bodies are rendered with sorted keys
and 12-significant-digit floats: identical requests get identical bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import __version__
from .analysis import analyze, roofline_series, sweep
from .catalog import ConfigError, PresetStore, builtin_presets, resolve_config, store_document
from .physics import CannotClimbError
from .reports import analysis_report, round_floats, series_report, sweep_report

MODEL_VERSION = __version__
DEFAULT_ADDR = "127.0.0.1"
DEFAULT_PORT = 8045


def _json_response(payload: dict, status_code: int = 200, headers: "dict | None" = None) -> Response:
    body = json.dumps(round_floats(payload), sort_keys=True, separators=(",", ":"))
    return Response(
        content=body,
        status_code=status_code,
        media_type="application/json",
        headers=headers,
    )


def _envelope(request_echo, **payload) -> dict:
    return {"model_version": MODEL_VERSION, "request_echo": request_echo, **payload}


def _error_response(request_echo, status_code: int, path: str, message: str, **extra) -> Response:
    return _json_response(
        _envelope(request_echo, error={"path": path, "message": message, **extra}),
        status_code=status_code,
    )


async def _read_body(request: Request):
    raw = await request.body()
    if not raw:
        raise ConfigError("", "empty request body")
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"body is not valid JSON: {exc}") from None


def _finite_number(body: dict, key: str) -> float:
    value = body.get(key)
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(float(value)):
        raise ConfigError(key, f"expected a finite number, got {value!r}")
    return float(value)


def create_app(store: "PresetStore | None" = None, cors_origins: "tuple[str, ...]" = ("*",)) -> FastAPI:
    if store is None:
        store = builtin_presets()
    app = FastAPI(title="skyline", version=MODEL_VERSION, docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(cors_origins),
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
    )

    presets_payload = _envelope(None, presets=store_document(store))
    presets_body = json.dumps(round_floats(presets_payload), sort_keys=True, separators=(",", ":"))
    presets_etag = hashlib.sha256(presets_body.encode()).hexdigest()

    @app.get("/api/health")
    async def health() -> Response:
        return _json_response({"status": "ok"})

    @app.get("/api/presets")
    async def presets() -> Response:
        return Response(
            content=presets_body,
            media_type="application/json",
            headers={"ETag": presets_etag},
        )

    @app.post("/api/analyze")
    async def analyze_endpoint(request: Request) -> Response:
        body = None
        try:
            body = await _read_body(request)
            config = resolve_config(body, store)
            report = analysis_report(analyze(config), config)
        except ConfigError as exc:
            return _error_response(body, 400, exc.path, exc.reason)
        except CannotClimbError as exc:
            return _error_response(body, 422, "", str(exc), thrust_to_weight=exc.thrust_to_weight)
        return _json_response(_envelope(body, analysis=report))

    @app.post("/api/curve")
    async def curve_endpoint(request: Request) -> Response:
        body = None
        try:
            body = await _read_body(request)
            if not isinstance(body.get("config"), dict):
                raise ConfigError("config", "required section is missing")
            config = resolve_config(body["config"], store)
            f_min = _finite_number(body, "f_min_hz")
            f_max = _finite_number(body, "f_max_hz")
            samples = body.get("samples", 200)
            if not isinstance(samples, int) or isinstance(samples, bool) or samples < 2:
                raise ConfigError("samples", f"expected an integer >= 2, got {samples!r}")
            scale = body.get("scale", "log")
            if scale not in ("log", "linear"):
                raise ConfigError("scale", f"expected 'log' or 'linear', got {scale!r}")
            if not (0.0 < f_min < f_max):
                raise ConfigError("f_min_hz", f"need 0 < f_min < f_max, got ({f_min}, {f_max})")
            series = roofline_series(config, (f_min, f_max), samples, scale)
        except ConfigError as exc:
            return _error_response(body, 400, exc.path, exc.reason)
        except CannotClimbError as exc:
            return _error_response(body, 422, "", str(exc), thrust_to_weight=exc.thrust_to_weight)
        return _json_response(_envelope(body, series=series_report(series)))

    @app.post("/api/sweep")
    async def sweep_endpoint(request: Request) -> Response:
        body = None
        try:
            body = await _read_body(request)
            if not isinstance(body.get("config"), dict):
                raise ConfigError("config", "required section is missing")
            config = resolve_config(body["config"], store)
            knob = body.get("knob")
            values = body.get("values")
            if not isinstance(knob, str):
                raise ConfigError("knob", f"expected a knob name, got {knob!r}")
            if not isinstance(values, list):
                raise ConfigError("values", f"expected a list, got {values!r}")
            points = sweep(config, knob, values, store)
        except ConfigError as exc:
            return _error_response(body, 400, exc.path, exc.reason)
        except ValueError as exc:
            return _error_response(body, 400, "knob", str(exc))
        except CannotClimbError as exc:
            return _error_response(body, 422, "", str(exc), thrust_to_weight=exc.thrust_to_weight)
        return _json_response(_envelope(body, sweep=sweep_report(points)))

    return app


app = create_app()


def main(argv=None) -> int:
    import uvicorn

    parser = argparse.ArgumentParser(prog="skyline-service")
    parser.add_argument("--addr", default=DEFAULT_ADDR)
    parser.add_argument("--port", type=int, default=DEFAULT_PORT)
    parser.add_argument(
        "--cors-origin",
        action="append",
        default=None,
        help="allowed CORS origin (repeatable; default: any)",
    )
    args = parser.parse_args(argv)
    origins = tuple(args.cors_origin) if args.cors_origin else ("*",)
    uvicorn.run(create_app(cors_origins=origins), host=args.addr, port=args.port, log_level="warning")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
