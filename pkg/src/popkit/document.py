"""Polygon document persistence and JSON views of the report types.

The document format is a small JSON object with rational-string vertices:

    {"format_version":"1","vertices":[["2","0"],["0","3"],...],
     "metadata":{"name":"...","provenance":"..."}}

Encoding is canonical -- fixed key order, compact separators, UTF-8 without
ASCII escaping, trailing newline -- so equal polygons produce identical
bytes and decode/encode is a bit-exact roundtrip.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from fractions import Fraction

from .alternating import format_sigma, format_vector
from .polygon import ClassificationReport, Polygon, PolygonError
from .search import FamilyReport, SearchOutcome
from .transforms import Pocket

FORMAT_VERSION = "1"

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


class DocumentError(ValueError):
    """Malformed or invalid polygon document."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


@dataclass(frozen=True)
class PolygonDocument:
    polygon: Polygon
    name: str | None = None
    provenance: str | None = None

    def with_polygon(self, polygon: Polygon) -> "PolygonDocument":
        return replace(self, polygon=polygon)


def dumps_canonical(obj) -> bytes:
    """Canonical JSON bytes: insertion key order, compact separators,
    un-escaped UTF-8, trailing newline."""
    return (json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


def parse_rational(text, field: str) -> Fraction:
    if not isinstance(text, str):
        raise DocumentError(f"{field}: rational must be a string, got {type(text).__name__}", field)
    if not _RATIONAL_RE.match(text):
        raise DocumentError(f"{field}: malformed rational {text!r}", field)
    return Fraction(text)


def document_to_jsonable(doc: PolygonDocument) -> dict:
    obj = {
        "format_version": FORMAT_VERSION,
        "vertices": [[str(p.x), str(p.y)] for p in doc.polygon.vertices],
    }
    meta = {}
    if doc.name is not None:
        meta["name"] = doc.name
    if doc.provenance is not None:
        meta["provenance"] = doc.provenance
    if meta:
        obj["metadata"] = meta
    return obj


def document_from_jsonable(obj, field: str = "") -> PolygonDocument:
    prefix = field + "." if field else ""
    if not isinstance(obj, dict):
        raise DocumentError(f"{field or 'document'}: expected a JSON object", field or None)
    unknown = set(obj) - {"format_version", "vertices", "metadata"}
    if unknown:
        raise DocumentError(f"unknown document keys: {', '.join(sorted(unknown))}")
    version = obj.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise DocumentError(f"{prefix}format_version: unsupported version {version!r}",
                            prefix + "format_version")
    raw = obj.get("vertices")
    if not isinstance(raw, list):
        raise DocumentError(f"{prefix}vertices: expected a list", prefix + "vertices")
    if len(raw) < 3:
        raise DocumentError(f"{prefix}vertices: polygon needs at least 3 vertices, got {len(raw)}",
                            prefix + "vertices")
    points = []
    for i, entry in enumerate(raw):
        where = f"{prefix}vertices[{i}]"
        if not isinstance(entry, list) or len(entry) != 2:
            raise DocumentError(f"{where}: expected a [x, y] pair", where)
        x = parse_rational(entry[0], f"{where}[0]")
        y = parse_rational(entry[1], f"{where}[1]")
        points.append((x, y))
    try:
        polygon = Polygon(points)
    except PolygonError as exc:
        raise DocumentError(f"{prefix}vertices: {exc}", prefix + "vertices") from None
    name = provenance = None
    meta = obj.get("metadata")
    if meta is not None:
        if not isinstance(meta, dict):
            raise DocumentError(f"{prefix}metadata: expected an object", prefix + "metadata")
        unknown = set(meta) - {"name", "provenance"}
        if unknown:
            raise DocumentError(f"{prefix}metadata: unknown keys: {', '.join(sorted(unknown))}",
                                prefix + "metadata")
        for key in ("name", "provenance"):
            if key in meta and not isinstance(meta[key], str):
                raise DocumentError(f"{prefix}metadata.{key}: expected a string",
                                    f"{prefix}metadata.{key}")
        name = meta.get("name")
        provenance = meta.get("provenance")
    return PolygonDocument(polygon, name=name, provenance=provenance)


def encode(doc) -> bytes:
    """Canonical document bytes for a PolygonDocument or bare Polygon."""
    if isinstance(doc, Polygon):
        doc = PolygonDocument(doc)
    return dumps_canonical(document_to_jsonable(doc))


def decode(data) -> PolygonDocument:
    """Parse document bytes (or str); raises DocumentError with the
    offending field path on malformed input."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"document is not valid UTF-8: {exc}") from None
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"document is not valid JSON: {exc}") from None
    return document_from_jsonable(obj)


# -- JSON views of report types --------------------------------------------

def classification_to_jsonable(report: ClassificationReport) -> dict:
    return {
        "simple": report.simple,
        "convex": report.convex,
        "strictly_convex": report.strictly_convex,
        "scalene": report.scalene,
        "weakly_scalene": report.weakly_scalene,
        "hairpin_indices": list(report.hairpin_indices),
    }


def pockets_to_jsonable(pockets: list[Pocket]) -> dict:
    return {"pockets": [{"lid": list(pk.lid), "chain": list(pk.chain)} for pk in pockets]}


def outcome_to_jsonable(outcome: SearchOutcome) -> dict:
    return {
        "status": outcome.status,
        "sequence": list(outcome.sequence) if outcome.sequence is not None else None,
        "states_explored": outcome.states_explored,
        "max_depth_reached": outcome.max_depth_reached,
    }


def family_report_to_jsonable(report: FamilyReport) -> dict:
    return {
        "k": report.k,
        "x": format_vector(report.x),
        "y": format_vector(report.y),
        "total_states": report.total_states,
        "convex_states": [format_sigma(s) for s in report.convex_states],
        "simple_states": report.simple_states,
        "self_intersecting_states": report.self_intersecting_states,
    }
