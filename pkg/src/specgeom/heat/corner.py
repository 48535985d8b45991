"""The corner integral and the t-independent heat-trace contribution of a corner."""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from specgeom.heat.quadrature import DEFAULT, QuadratureConfig, integrate, integrate_recursive, tail_cutoff

HALF_PI = 0.5 * math.pi


class AngleDomainError(ValueError):
    """Opening angle outside (pi/2, pi]."""


def check_corner_angle(theta: float) -> None:
    if not (HALF_PI < theta <= math.pi):
        raise AngleDomainError(
            f"opening angle {theta!r} outside the valid interval (pi/2, pi] = (1.5707963267948966, 3.141592653589793]"
        )


def carslaw_integrand(theta: float):
    """``1 / ((1 + cosh s)(cosh(pi s / theta) - cos(pi^2 / theta)))`` in a cancellation-free form."""
    alpha = math.pi / theta
    gap = 2.0 * math.sin(0.5 * alpha * math.pi) ** 2  # 1 - cos(pi^2/theta)

    def f(s):
        s = np.asarray(s, dtype=float)
        return 1.0 / (2.0 * np.cosh(0.5 * s) ** 2 * (2.0 * np.sinh(0.5 * alpha * s) ** 2 + gap))

    return f


def _breakpoints(f, peak_width: float, cfg: QuadratureConfig) -> list[float]:
    end = tail_cutoff(f, 0.0, cfg.abs_tol / 10)
    pts = {0.0, end}
    if peak_width < 1.0:
        pts.update(p for p in (peak_width, 2 * peak_width) if p < end)
    pts.update(p for p in (1.0, 4.0) if p < end)
    return sorted(pts)


def carslaw_integral(theta: float, cfg: QuadratureConfig = DEFAULT, *, scheme: str = "global") -> float:
    """Integral over the real line of :func:`carslaw_integrand`, for theta in (pi/2, pi].

    Computed as twice the half-line integral, truncated where the integrand
    drops below ``abs_tol / 10``. The peak at ``s = 0`` narrows to width
    ``1 - cos(pi^2/theta)`` as theta approaches pi/2, so the first panels
    are placed at that scale.
    """
    check_corner_angle(theta)
    f = carslaw_integrand(theta)
    width = 1.0 - math.cos(math.pi**2 / theta)
    pts = _breakpoints(f, width, cfg)
    half_cfg = QuadratureConfig(cfg.abs_tol / 2, cfg.rel_tol, cfg.max_subdivisions)
    quad = integrate if scheme == "global" else integrate_recursive
    value, _ = quad(f, pts, half_cfg)
    return 2.0 * value


def corner_coefficient(theta: float, cfg: QuadratureConfig = DEFAULT) -> float:
    """``-sin(pi^2/theta) / (8 pi) * carslaw_integral(theta)``; zero at theta = pi."""
    check_corner_angle(theta)
    if theta == math.pi:
        return 0.0
    return -math.sin(math.pi**2 / theta) / (8 * math.pi) * carslaw_integral(theta, cfg)


def corner_coefficient_closed_form(theta: float) -> float:
    """``(pi^2 - theta^2) / (24 pi theta)``, the known closed form for a Dirichlet corner."""
    return (math.pi**2 - theta**2) / (24 * math.pi * theta)


def bound_integrand(s):
    """``1 / ((1 + cosh s)(cosh(4s/3) - 1/2))``, the proposed dominating function."""
    s = np.asarray(s, dtype=float)
    return 1.0 / ((1.0 + np.cosh(s)) * (np.cosh(4.0 * s / 3.0) - 0.5))


def auxiliary_bound_integral(cfg: QuadratureConfig = DEFAULT) -> float:
    """Half-line integral of :func:`bound_integrand`."""
    pts = _breakpoints(bound_integrand, 1.0, cfg)
    value, _ = integrate(bound_integrand, pts, cfg)
    return value


def dominated_bound_check(theta: float, grid: Iterable[float]) -> list[tuple[float, float, float, bool]]:
    """Rows ``(s, integrand, bound, integrand <= bound)`` on ``grid``."""
    f = carslaw_integrand(theta)
    out = []
    for s in grid:
        a = float(f(np.array([s]))[0])
        b = float(bound_integrand(np.array([s]))[0])
        out.append((float(s), a, b, a <= b))
    return out
