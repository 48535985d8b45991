"""Hausdorff distance between finite point clouds."""

from __future__ import annotations

import numpy as np

_ROWS = 2048


class PointCloud:
    __slots__ = ("points",)

    def __init__(self, points):
        arr = np.asarray(points, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"point cloud must be an array of shape (m, 2), got {arr.shape}")
        if len(arr) == 0:
            raise ValueError("point cloud is empty")
        if not np.all(np.isfinite(arr)):
            raise ValueError("point cloud has non-finite coordinates")
        self.points = arr

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def of_polygon(cls, polygon) -> "PointCloud":
        return cls([[float(x), float(y)] for x, y in polygon.vertices])


def directed_hausdorff(a: PointCloud, b: PointCloud) -> float:
    """``max over a of min over b`` by a full scan, ``_ROWS`` rows of ``a`` at a time."""
    best = 0.0
    B = b.points
    for lo in range(0, len(a), _ROWS):
        A = a.points[lo:lo + _ROWS]
        d2 = ((A[:, None, :] - B[None, :, :]) ** 2).sum(axis=-1)
        best = max(best, float(d2.min(axis=1).max()))
    return float(np.sqrt(best))


def hausdorff_distance(a: PointCloud, b: PointCloud) -> float:
    if not isinstance(a, PointCloud):
        a = PointCloud(a)
    if not isinstance(b, PointCloud):
        b = PointCloud(b)
    return max(directed_hausdorff(a, b), directed_hausdorff(b, a))
