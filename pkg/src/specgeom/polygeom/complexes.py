"""Cell complexes by counts, Euler characteristic and hole counts."""

from __future__ import annotations

from dataclasses import dataclass


class ComplexError(ValueError):
    pass


def _count(name, value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ComplexError(f"field {name!r} must be an integer, got {value!r}")
    if value < 0:
        raise ComplexError(f"field {name!r} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class CellComplex:
    V: int
    E: int
    F: int
    vertices: tuple | None = None
    edges: tuple | None = None
    faces: tuple | None = None

    def __post_init__(self):
        for name in ("V", "E", "F"):
            _count(name, getattr(self, name))
        for name, key in (("vertices", "V"), ("edges", "E"), ("faces", "F")):
            items = getattr(self, name)
            if items is None:
                continue
            items = tuple(items)
            object.__setattr__(self, name, items)
            if len(items) != getattr(self, key):
                raise ComplexError(f"{key} = {getattr(self, key)} but {len(items)} {name} listed")

    @classmethod
    def from_json(cls, obj) -> "CellComplex":
        if not isinstance(obj, dict):
            raise ComplexError("cell complex must be a JSON object with keys V, E, F")
        missing = [k for k in ("V", "E", "F") if k not in obj]
        if missing:
            raise ComplexError(f"missing field {missing[0]!r}")
        return cls(obj["V"], obj["E"], obj["F"], obj.get("vertices"), obj.get("edges"), obj.get("faces"))

    def to_json(self) -> dict:
        return {"V": self.V, "E": self.E, "F": self.F}


def euler_characteristic(c: CellComplex) -> int:
    return c.V - c.E + c.F


def holes_from_chi(chi: int) -> int:
    """Holes of a connected planar domain with Euler characteristic ``chi``."""
    if chi > 1:
        raise ComplexError(f"a connected planar domain has chi <= 1, got {chi}")
    return 1 - chi


def polygon_complex(n: int) -> CellComplex:
    return CellComplex(n, n, 1)


def square_annulus() -> CellComplex:
    """Square with a square hole cut into four quadrilaterals."""
    return CellComplex(8, 12, 4)


def two_hole_complex() -> CellComplex:
    """A 5 x 3 grid of unit squares with the cells (1, 1) and (3, 1) removed."""
    return CellComplex(24, 38, 13)
