"""Local HTTP service backing the playground UI.

Stateless JSON-over-POST endpoints; every polygon in a request or response
body is a canonical polygon document object. Binds to loopback by default:
this service exists to back the local playground, not to be a public API.
"""

from __future__ import annotations

import json
import os
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import alternating
from .document import (DocumentError, PolygonDocument,
                       classification_to_jsonable, document_from_jsonable,
                       document_to_jsonable, dumps_canonical,
                       pockets_to_jsonable)
from .polygon import classify
from .svg import render_svg
from .transforms import HairpinError, find_pockets, pocket_flip, pop, popturn
from .geom import GeometryError

DEFAULT_PORT = 8765


def resolve_port(port=None) -> int:
    """Explicit argument wins, then POPKIT_PORT, then the default."""
    if port is not None:
        return int(port)
    env = os.environ.get("POPKIT_PORT")
    return int(env) if env else DEFAULT_PORT


def _need(body: dict, key: str):
    if key not in body:
        raise DocumentError(f"missing field {key!r}", key)
    return body[key]


def _get_polygon(body: dict):
    return document_from_jsonable(_need(body, "polygon"), field="polygon")


def _get_int(body: dict, key: str) -> int:
    value = _need(body, key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(f"{key}: expected an integer", key)
    return value


def _get_str(body: dict, key: str) -> str:
    value = _need(body, key)
    if not isinstance(value, str):
        raise DocumentError(f"{key}: expected a string", key)
    return value


def _handle_pop(body):
    doc = _get_polygon(body)
    vertex = _get_int(body, "vertex")
    result = pop(doc.polygon, vertex)
    return {"polygon": document_to_jsonable(doc.with_polygon(result))}


def _handle_popturn(body):
    doc = _get_polygon(body)
    vertex = _get_int(body, "vertex")
    result = popturn(doc.polygon, vertex)
    return {"polygon": document_to_jsonable(doc.with_polygon(result))}


def _handle_check(body):
    doc = _get_polygon(body)
    return classification_to_jsonable(classify(doc.polygon))


def _handle_pockets(body):
    doc = _get_polygon(body)
    return pockets_to_jsonable(find_pockets(doc.polygon))


def _handle_flip(body):
    doc = _get_polygon(body)
    index = _get_int(body, "pocket_index")
    pockets = find_pockets(doc.polygon)
    if not 0 <= index < len(pockets):
        raise DocumentError(
            f"pocket_index: {index} out of range, polygon has {len(pockets)} pockets",
            "pocket_index")
    result = pocket_flip(doc.polygon, pockets[index])
    return {"polygon": document_to_jsonable(doc.with_polygon(result))}


def _handle_build(body):
    spec = alternating.AlternatingSpec(
        alternating.parse_vector(_get_str(body, "x")),
        alternating.parse_vector(_get_str(body, "y")),
        alternating.parse_sigma(_get_str(body, "sigma")),
    )
    return {"polygon": document_to_jsonable(PolygonDocument(alternating.build(spec)))}


def _handle_render(body):
    doc = _get_polygon(body)
    options = body.get("options", {})
    if not isinstance(options, dict):
        raise DocumentError("options: expected an object", "options")
    return render_svg(
        doc.polygon,
        show_axes=bool(options.get("show_axes", True)),
        label_vertices=bool(options.get("label_vertices", True)),
        canvas_size=int(options.get("canvas_size", 600)),
    )


_ROUTES = {
    "/polygon/pop": _handle_pop,
    "/polygon/popturn": _handle_popturn,
    "/polygon/check": _handle_check,
    "/polygon/pockets": _handle_pockets,
    "/polygon/flip": _handle_flip,
    "/alternating/build": _handle_build,
    "/render": _handle_render,
}


class PlaygroundHandler(BaseHTTPRequestHandler):
    server_version = "popkit"
    protocol_version = "HTTP/1.1"

    def log_message(self, format, *args):  # keep test and CLI output quiet
        pass

    def _send(self, status: int, payload: bytes, content_type: str = "application/json"):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self):
        if self.path == "/health":
            self._send(200, dumps_canonical({"status": "ok"}))
        else:
            self._send(404, dumps_canonical({"error": "not found"}))

    def do_POST(self):
        handler = _ROUTES.get(self.path)
        if handler is None:
            self._send(404, dumps_canonical({"error": "not found"}))
            return
        try:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length)
            body = json.loads(raw.decode("utf-8"))
            if not isinstance(body, dict):
                raise DocumentError("request body must be a JSON object")
        except (json.JSONDecodeError, UnicodeDecodeError, ValueError) as exc:
            if isinstance(exc, DocumentError):
                self._send(400, _error_payload(exc))
            else:
                self._send(400, dumps_canonical({"error": f"invalid JSON body: {exc}"}))
            return
        try:
            result = handler(body)
        except HairpinError:
            self._send(422, dumps_canonical({"error": "hairpin"}))
            return
        except DocumentError as exc:
            self._send(400, _error_payload(exc))
            return
        except GeometryError as exc:
            self._send(400, dumps_canonical({"error": str(exc)}))
            return
        if isinstance(result, bytes):
            self._send(200, result, content_type="image/svg+xml")
        else:
            self._send(200, dumps_canonical(result))


def _error_payload(exc: DocumentError) -> bytes:
    obj = {"error": str(exc)}
    if exc.field:
        obj["field"] = exc.field
    return dumps_canonical(obj)


def make_server(port=None, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, resolve_port(port)), PlaygroundHandler)


def serve_http(port=None, host: str = "127.0.0.1") -> None:
    """Run the service until interrupted."""
    server = make_server(port, host)
    try:
        server.serve_forever()
    finally:
        server.server_close()
