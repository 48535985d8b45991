"""Polygon sequences approximating the unit disk."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import shapely

from specgeom.polygeom.polygon import Polygon, PolygonError


def inscribed_regular_ngon(n: int) -> Polygon:
    """Regular n-gon on the unit circle with its first vertex at angle 0."""
    if isinstance(n, bool) or int(n) != n or n < 3:
        raise PolygonError(f"need an integer n >= 3, got {n!r}")
    n = int(n)
    return Polygon((math.cos(2 * math.pi * j / n), math.sin(2 * math.pi * j / n)) for j in range(n))


def staircase_polygon(k: int) -> Polygon:
    """``2^k``-gon with every edge of length ``1/k`` and every other vertex on the unit circle.

    The ``2^(k-1)`` circle vertices are equally spaced. Between two of them
    sits a spike vertex on the perpendicular bisector of their chord,
    pushed toward the centre until both incident edges have length ``1/k``.
    """
    if isinstance(k, bool) or int(k) != k or k < 2:
        raise PolygonError(f"need an integer k >= 2, got {k!r}")
    k = int(k)
    m = 2 ** (k - 1)
    half = math.pi / m
    half_chord = math.sin(half)
    edge = 1.0 / k
    if half_chord >= edge:
        raise PolygonError(f"k = {k} is infeasible: chord {2 * half_chord:.6g} is not below 2/k = {2 * edge:.6g}")
    depth = math.sqrt((edge - half_chord) * (edge + half_chord))
    r_spike = math.cos(half) - depth
    if r_spike <= 0:
        raise PolygonError(f"k = {k} is infeasible: spikes would cross the centre")
    pts = []
    for j in range(m):
        a = 2 * j * half
        pts.append((math.cos(a), math.sin(a)))
        b = a + half
        pts.append((r_spike * math.cos(b), r_spike * math.sin(b)))
    return Polygon(pts)


def disk_samples(n_radial: int = 64, n_angular: int = 4096) -> np.ndarray:
    """Polar grid on the closed unit disk, including the centre and the circle."""
    r = np.linspace(0.0, 1.0, n_radial + 1)[1:]
    a = 2 * math.pi * np.arange(n_angular) / n_angular
    grid = (r[:, None, None] * np.stack([np.cos(a), np.sin(a)], axis=-1)[None, :, :]).reshape(-1, 2)
    return np.vstack([[0.0, 0.0], grid])


def hausdorff_to_disk(polygon: Polygon, samples: np.ndarray | None = None) -> float:
    """Hausdorff distance between the polygon region and the closed unit disk.

    The disk side is sampled; the polygon side is exact because a point of
    the polygon is at most ``max(|v| - 1, 0)`` from the disk, maximized over
    vertices since the disk is convex.
    """
    if samples is None:
        samples = disk_samples(n_angular=max(4096, 8 * len(polygon)))
    region = shapely.Polygon([(float(x), float(y)) for x, y in polygon.vertices])
    shapely.prepare(region)
    # samples inside the polygon are at distance 0; only the rest need a distance query
    outside = samples[~shapely.contains_xy(region, samples[:, 0], samples[:, 1])]
    disk_side = float(np.max(shapely.distance(region, shapely.points(outside)))) if len(outside) else 0.0
    poly_side = max(max(math.hypot(float(x), float(y)) for x, y in polygon.vertices) - 1.0, 0.0)
    return max(disk_side, poly_side)


@dataclass(frozen=True)
class StaircaseReport:
    k: int
    sides: int
    perimeter: float
    hausdorff_to_disk: float
    max_spike_angle: float
    max_edge_error: float


def staircase_report(k: int) -> StaircaseReport:
    """Side count, perimeter, distance to the disk and sharpest-tooth data for one ``k``."""
    p = staircase_polygon(k)
    angles = p.interior_angles()
    # teeth are the circle vertices, at even positions
    tips = angles[0::2]
    err = max(abs(e - 1.0 / k) for e in p.edge_lengths())
    return StaircaseReport(k, len(p), p.perimeter(), hausdorff_to_disk(p), max(tips), err)
