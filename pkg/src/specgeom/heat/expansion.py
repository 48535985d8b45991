"""Small-time heat-trace expansions of convex polygons with obtuse corners."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from specgeom.heat.corner import AngleDomainError, corner_coefficient
from specgeom.heat.quadrature import DEFAULT, QuadratureConfig


class NonConvexError(ValueError):
    pass


@dataclass(frozen=True)
class HeatExpansion:
    area: float
    perimeter: float
    corner_constant: float

    def __post_init__(self):
        if not (self.area > 0 and self.perimeter > 0):
            raise ValueError("area and perimeter must be positive")

    def area_term(self, t: float) -> float:
        return self.area / (4 * math.pi * t)

    def boundary_term(self, t: float) -> float:
        return -self.perimeter / (8 * math.sqrt(math.pi * t))

    def __call__(self, t: float) -> float:
        if not t > 0:
            raise ValueError(f"time must be positive, got {t!r}")
        return self.area_term(t) + self.boundary_term(t) + self.corner_constant


def polygon_heat_expansion(polygon, cfg: QuadratureConfig = DEFAULT) -> HeatExpansion:
    """Area, perimeter and summed corner coefficients of a convex polygon.

    Every interior angle has to lie strictly between pi/2 and pi.
    """
    angles = polygon.interior_angles()
    if not polygon.is_convex():
        raise NonConvexError("polygon is not convex")
    for i, a in enumerate(angles):
        if not (0.5 * math.pi < a < math.pi):
            raise AngleDomainError(f"interior angle {a!r} at vertex {i} outside the open interval (pi/2, pi)")
    corner = math.fsum(corner_coefficient(a, cfg) for a in angles)
    return HeatExpansion(float(polygon.area()), float(polygon.perimeter()), corner)


def corner_sum_regular_ngon(n: int, cfg: QuadratureConfig = DEFAULT) -> float:
    """``n * c(pi (n - 2) / n)``; tends to 1/6 as n grows."""
    if isinstance(n, bool) or int(n) != n or n < 5:
        raise ValueError(f"need an integer n >= 5 so that every angle exceeds pi/2, got {n!r}")
    n = int(n)
    return n * corner_coefficient(math.pi * (n - 2) / n, cfg)


def a0_predictor(holes: int) -> Fraction:
    """Constant heat-trace term ``(1 - h) / 6`` of a smooth domain with ``h`` holes."""
    if isinstance(holes, bool) or int(holes) != holes or holes < 0:
        raise ValueError(f"number of holes must be a nonnegative integer, got {holes!r}")
    return Fraction(1 - int(holes), 6)
