"""Simple planar polygons: validation, shoelace area, perimeter, interior angles."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

EPS = 1e-12


class PolygonError(ValueError):
    pass


class DegenerateVertexError(PolygonError):
    """Three consecutive vertices are collinear."""


def _coord(x):
    if isinstance(x, bool):
        raise PolygonError("coordinates must be numbers, got a boolean")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except ValueError:
            pass
    try:
        v = float(x)
    except (TypeError, ValueError):
        raise PolygonError(f"coordinate {x!r} is not a number") from None
    if not math.isfinite(v):
        raise PolygonError(f"coordinate {x!r} is not finite")
    return v


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


class _Predicates:
    """Orientation tests, exact for rational input and 1e-12-tolerant for floats."""

    def __init__(self, exact: bool, scale: float):
        self.exact = exact
        self.tol = 0 if exact else EPS * scale * scale

    def orient(self, o, a, b) -> int:
        c = _cross(o, a, b)
        if c > self.tol:
            return 1
        if c < -self.tol:
            return -1
        return 0

    @staticmethod
    def on_segment(p, a, b) -> bool:
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])

    def intersect(self, a, b, c, d) -> bool:
        o1, o2 = self.orient(a, b, c), self.orient(a, b, d)
        o3, o4 = self.orient(c, d, a), self.orient(c, d, b)
        if o1 * o2 < 0 and o3 * o4 < 0:
            return True
        return (
            (o1 == 0 and self.on_segment(c, a, b))
            or (o2 == 0 and self.on_segment(d, a, b))
            or (o3 == 0 and self.on_segment(a, c, d))
            or (o4 == 0 and self.on_segment(b, c, d))
        )


def _signed_double_area(pts) -> float | Fraction:
    n = len(pts)
    terms = [pts[i][0] * pts[(i + 1) % n][1] - pts[(i + 1) % n][0] * pts[i][1] for i in range(n)]
    if all(isinstance(t, Fraction) for t in terms):
        return sum(terms, Fraction(0))
    return math.fsum(float(t) for t in terms)


class Polygon:
    """A simple polygon, stored counterclockwise.

    Rational coordinates are kept as Fractions so area and simplicity are
    decided exactly.
    """

    __slots__ = ("vertices", "exact")

    def __init__(self, vertices: Iterable[Sequence]):
        pts = []
        for i, v in enumerate(vertices):
            try:
                x, y = v
            except (TypeError, ValueError):
                raise PolygonError(f"vertex {i} must be a pair [x, y], got {v!r}") from None
            pts.append((_coord(x), _coord(y)))
        if len(pts) < 3:
            raise PolygonError(f"a polygon needs at least 3 vertices, got {len(pts)}")
        exact = all(isinstance(c, Fraction) for p in pts for c in p)
        if not exact:
            pts = [(float(x), float(y)) for x, y in pts]
        a2 = _signed_double_area(pts)
        if a2 == 0 or (not exact and abs(a2) <= EPS):
            raise PolygonError("polygon has zero area")
        if a2 < 0:
            pts.reverse()
        self.vertices = tuple(pts)
        self.exact = exact
        self._check_simple()

    def _check_simple(self) -> None:
        pts = self.vertices
        n = len(pts)
        if len(set(pts)) != n:
            raise PolygonError("polygon has repeated vertices")
        scale = max(max(abs(float(c)) for p in pts for c in p), 1.0)
        pred = _Predicates(self.exact, scale)
        edges = [(pts[i], pts[(i + 1) % n]) for i in range(n)]
        for i in range(n):
            a, b = edges[i]
            # adjacent edges may only share their common endpoint
            c = edges[(i + 1) % n][1]
            if pred.orient(a, b, c) == 0 and _dot_sign(a, b, c) > 0:
                raise PolygonError(f"edges {i} and {(i + 1) % n} fold back on each other")
        # every pair is considered; bounding boxes only skip pairs that cannot meet
        xy = np.array([[float(x), float(y)] for x, y in pts])
        nxt = np.roll(xy, -1, axis=0)
        pad = 1e-9 * scale
        lo = np.minimum(xy, nxt) - pad
        hi = np.maximum(xy, nxt) + pad
        overlap = np.all((lo[:, None, :] <= hi[None, :, :]) & (lo[None, :, :] <= hi[:, None, :]), axis=-1)
        for i, j in zip(*np.nonzero(np.triu(overlap, 2))):
            i, j = int(i), int(j)
            if i == 0 and j == n - 1:
                continue
            if pred.intersect(*edges[i], *edges[j]):
                raise PolygonError(f"polygon is not simple: edges {i} and {j} intersect")

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Polygon({len(self)} vertices)"

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def area(self):
        return _signed_double_area(self.vertices) / 2

    def edge_lengths(self) -> list[float]:
        return [math.hypot(float(b[0] - a[0]), float(b[1] - a[1])) for a, b in self.edges()]

    def perimeter(self) -> float:
        return math.fsum(self.edge_lengths())

    def interior_angles(self) -> list[float]:
        """Angle inside the polygon at each vertex, in (0, 2 pi)."""
        pts = self.vertices
        n = len(pts)
        scale = max(max(abs(float(c)) for p in pts for c in p), 1.0)
        pred = _Predicates(self.exact, scale)
        out = []
        for i in range(n):
            a, o, b = pts[i - 1], pts[i], pts[(i + 1) % n]
            if pred.orient(a, o, b) == 0:
                raise DegenerateVertexError(f"vertices {(i - 1) % n}, {i}, {(i + 1) % n} are collinear")
            e1 = (float(o[0] - a[0]), float(o[1] - a[1]))
            e2 = (float(b[0] - o[0]), float(b[1] - o[1]))
            turn = math.atan2(e1[0] * e2[1] - e1[1] * e2[0], e1[0] * e2[0] + e1[1] * e2[1])
            out.append(math.pi - turn)
        return out

    def min_interior_angle(self) -> float:
        return min(self.interior_angles())

    def is_convex(self) -> bool:
        pts = self.vertices
        n = len(pts)
        scale = max(max(abs(float(c)) for p in pts for c in p), 1.0)
        pred = _Predicates(self.exact, scale)
        return all(pred.orient(pts[i - 1], pts[i], pts[(i + 1) % n]) >= 0 for i in range(n))

    def transformed(self, angle: float, shift=(0.0, 0.0)) -> "Polygon":
        c, s = math.cos(angle), math.sin(angle)
        return Polygon(
            (c * float(x) - s * float(y) + shift[0], s * float(x) + c * float(y) + shift[1]) for x, y in self.vertices
        )

    def to_list(self) -> list[list]:
        return [[_jsonable(x), _jsonable(y)] for x, y in self.vertices]


def _dot_sign(a, b, c):
    # sign of (b - a) . (b - c): positive when c doubles back toward a
    return (b[0] - a[0]) * (b[0] - c[0]) + (b[1] - a[1]) * (b[1] - c[1])


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def area(p: Polygon):
    return p.area()


def perimeter(p: Polygon) -> float:
    return p.perimeter()


def interior_angles(p: Polygon) -> list[float]:
    return p.interior_angles()


def min_interior_angle(p: Polygon) -> float:
    return p.min_interior_angle()
