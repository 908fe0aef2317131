"""Polygon documents: JSON objects with a ``kind`` and a ``vertices`` array.

Example::

    {"kind": "quad", "label": "figure 1", "vertices": [[0, 0], [1, 0], [2, 1], [0.5, 2]]}
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import GeometryError, ParseError, ValidationError
from .extensions import Hexagon, Triangle
from .quads import Quadrilateral

VERTEX_COUNTS = {"quad": 4, "parallelogram": 4, "triangle": 3, "hexagon": 6}


@dataclass(frozen=True)
class PolygonDocument:
    kind: str
    vertices: tuple
    label: str = ""

    def to_domain(self):
        """Build the domain object; a parallelogram document yields a plain quadrilateral."""
        if self.kind in ("quad", "parallelogram"):
            return Quadrilateral(self.vertices)
        if self.kind == "triangle":
            return Triangle(self.vertices)
        return Hexagon(self.vertices)


def parse_polygon(text: str) -> PolygonDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object", 1, 1)
    kind = data.get("kind")
    if kind not in VERTEX_COUNTS:
        raise ValidationError(f"kind must be one of {sorted(VERTEX_COUNTS)}, got {kind!r}")
    raw = data.get("vertices")
    if not isinstance(raw, list):
        raise ValidationError("'vertices' must be an array of [x, y] pairs")
    verts = []
    for idx, v in enumerate(raw):
        if (
            not isinstance(v, list)
            or len(v) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)
            or not all(math.isfinite(c) for c in v)
        ):
            raise ValidationError(f"vertex {idx + 1} is not a finite [x, y] pair: {v!r}")
        verts.append(complex(float(v[0]), float(v[1])))
    if len(verts) != VERTEX_COUNTS[kind]:
        raise ValidationError(
            f"kind {kind!r} needs {VERTEX_COUNTS[kind]} vertices, got {len(verts)}"
        )
    label = data.get("label", "")
    if not isinstance(label, str):
        raise ValidationError("'label' must be a string")
    doc = PolygonDocument(kind, tuple(verts), label)
    try:
        doc.to_domain()
    except GeometryError as exc:
        raise ValidationError(f"invalid {kind}: {exc}") from None
    return doc


def load_polygon(path) -> PolygonDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_polygon(fh.read())


def dump_polygon(doc: PolygonDocument) -> str:
    return json.dumps(
        {"kind": doc.kind, "label": doc.label, "vertices": [[z.real, z.imag] for z in doc.vertices]}
    )
