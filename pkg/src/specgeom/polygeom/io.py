"""Polygon and cell-complex JSON files."""

from __future__ import annotations

import json
from pathlib import Path

from specgeom.polygeom.complexes import CellComplex, ComplexError
from specgeom.polygeom.polygon import Polygon, PolygonError


class GeometryFileError(ValueError):
    pass


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise GeometryFileError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from None
    except OSError as exc:
        raise GeometryFileError(f"{path}: {exc.strerror}") from None


def parse_polygon(obj) -> Polygon:
    if not isinstance(obj, list):
        raise GeometryFileError("polygon file must hold a JSON array of [x, y] pairs")
    for i, v in enumerate(obj):
        if not (isinstance(v, list) and len(v) == 2):
            raise GeometryFileError(f"vertex {i} must be a pair [x, y], got {v!r}")
        for c in v:
            if isinstance(c, bool) or not isinstance(c, (int, float, str)):
                raise GeometryFileError(f"vertex {i} has a non-numeric coordinate {c!r}")
    try:
        return Polygon(obj)
    except PolygonError as exc:
        raise GeometryFileError(str(exc)) from None


def load_polygon(path) -> Polygon:
    return parse_polygon(_read_json(path))


def dump_polygon(polygon: Polygon, path) -> None:
    Path(path).write_text(json.dumps(polygon.to_list()) + "\n", encoding="utf-8")


def load_complex(path) -> CellComplex:
    try:
        return CellComplex.from_json(_read_json(path))
    except ComplexError as exc:
        raise GeometryFileError(f"{path}: {exc}") from None
