"""Dirichlet heat kernels on R^n, the half-plane and an infinite sector (diagonal)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from specgeom.heat.corner import AngleDomainError
from specgeom.heat.quadrature import DEFAULT, QuadratureConfig, QuadratureError, integrate, tail_cutoff


def _check_time(t: float) -> None:
    if not t > 0:
        raise ValueError(f"time must be positive, got {t!r}")


def free_kernel(x, y, t: float, n: int | None = None) -> float:
    """``(4 pi t)^(-n/2) exp(-|x - y|^2 / 4t)``."""
    _check_time(t)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    n = x.shape[-1] if n is None else n
    d2 = np.sum((x - y) ** 2, axis=-1)
    return (4 * math.pi * t) ** (-n / 2) * np.exp(-d2 / (4 * t))


def halfspace_kernel(x, y, t: float) -> float:
    """Dirichlet kernel of the upper half-plane by the method of images."""
    _check_time(t)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x[..., 1] < 0) or np.any(y[..., 1] < 0):
        raise ValueError("points must lie in the closed upper half-plane")
    ybar = y * np.array([1.0, -1.0])
    d2 = np.sum((x - y) ** 2, axis=-1)
    d2bar = np.sum((x - ybar) ** 2, axis=-1)
    return (np.exp(-d2 / (4 * t)) - np.exp(-d2bar / (4 * t))) / (4 * math.pi * t)


@dataclass(frozen=True)
class SectorTerms:
    images: float
    straight_integral: float
    shifted_integral: float
    shifted_imaginary: float
    value: float


def _check_sector(r, phi, theta, t):
    _check_time(t)
    if not (0.5 * math.pi < theta < math.pi):
        raise AngleDomainError(f"sector opening {theta!r} outside (pi/2, pi)")
    if not (0 < phi < theta):
        raise ValueError(f"polar angle {phi!r} outside (0, theta)")
    if not r > 0:
        raise ValueError("radius must be positive")


def sector_kernel_terms(r: float, phi: float, theta: float, t: float, cfg: QuadratureConfig = DEFAULT) -> SectorTerms:
    """Diagonal value of the Dirichlet heat kernel of the infinite sector, with its parts.

    The branch is picked by the range of ``phi``; at the boundaries
    ``phi = theta - pi/2`` and ``phi = pi/2`` the left branch is used.
    """
    _check_sector(r, phi, theta, t)
    alpha = math.pi / theta
    b = 2 * alpha * phi
    c = alpha * math.pi
    a2 = r * r / (2 * t)
    gap = 2.0 * math.sin(0.5 * c) ** 2  # 1 - cos(c)
    # D(0) = cos b - cos c, written as a product
    d0 = -2.0 * math.sin(0.5 * (b + c)) * math.sin(0.5 * (b - c))
    if d0 == 0.0:
        # exactly on a branch boundary; take the limit from the left
        return sector_kernel_terms(r, phi - 1e-12 * theta, theta, t, cfg)

    def weight(s):
        return np.exp(-a2 * (1.0 + np.cosh(s)))

    def straight(s):
        return weight(s) / (2.0 * np.sinh(0.5 * alpha * s) ** 2 + gap)

    def shifted_parts(s):
        sh = np.sinh(0.5 * alpha * s)
        re = 2.0 * sh * sh * math.cos(b) + d0
        im = np.sinh(alpha * s) * math.sin(b)
        den = re * re + im * im
        return weight(s) * re / den, -weight(s) * im / den

    def shifted_re(s):
        return shifted_parts(s)[0]

    def shifted_im_pos(s):
        return shifted_parts(s)[1]

    def shifted_im_neg(s):
        return shifted_parts(-np.asarray(s))[1]

    threshold = cfg.abs_tol / 10
    end = max(tail_cutoff(weight, 0.0, threshold * gap), 1.0)
    pts = sorted({0.0, end} | {p for p in (0.25, 1.0) if p < end})
    i_straight = 2 * integrate(straight, pts, cfg)[0]

    # near a branch boundary the shifted integrand is a Lorentzian of this width
    width = abs(d0) / (alpha * abs(math.sin(b)) + 1e-300)
    spts = set(pts)
    w = width
    while w < end:
        spts.add(w)
        w *= 4
    spts = sorted(spts)
    i_shift = 2 * integrate(shifted_re, spts, cfg)[0]
    im = integrate(shifted_im_pos, spts, cfg)[0] + integrate(shifted_im_neg, spts, cfg)[0]
    if abs(im) > 1e-10:
        raise QuadratureError(f"imaginary part of the shifted integral is {im:.3g}, expected 0")

    images = 1.0
    if phi <= theta - 0.5 * math.pi:
        images -= math.exp(-a2 * 2 * math.sin(phi) ** 2)
    elif phi <= 0.5 * math.pi:
        images -= math.exp(-a2 * 2 * math.sin(phi) ** 2) + math.exp(-a2 * 2 * math.sin(theta - phi) ** 2)
    else:
        images -= math.exp(-a2 * 2 * math.sin(theta - phi) ** 2)
    images /= 4 * math.pi * t
    pref = math.sin(c) / (8 * math.pi * theta * t)
    value = images - pref * i_straight + pref * i_shift
    return SectorTerms(images, i_straight, i_shift, im, value)


def sector_kernel_diag(r: float, phi: float, theta: float, t: float, cfg: QuadratureConfig = DEFAULT) -> float:
    return sector_kernel_terms(r, phi, theta, t, cfg).value
