import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import HALFPLANE_D1_T1
from specgeom.heat import AngleDomainError, free_kernel, halfspace_kernel, sector_kernel_diag, sector_kernel_terms
from specgeom.heat.quadrature import integrate

coords = st.floats(-2, 2)
times = st.floats(0.1, 2.0)


def test_free_kernel_diagonal_and_symmetry():
    assert free_kernel([0.3, -1.0], [0.3, -1.0], 0.5) == pytest.approx(1 / (4 * math.pi * 0.5))
    x, y = [0.1, 0.7], [-0.4, 1.3]
    assert free_kernel(x, y, 0.3) == free_kernel(y, x, 0.3)


def test_free_kernel_integrates_to_one():
    t = 0.37
    radial = lambda r: 2 * math.pi * r * free_kernel(np.zeros((len(r), 2)), np.stack([r, 0 * r], axis=1), t, n=2)
    v, _ = integrate(radial, [0.0, math.sqrt(t), 10 * math.sqrt(t)])
    assert abs(v - 1) <= 1e-8


def test_time_must_be_positive():
    for t in (0.0, -1.0):
        with pytest.raises(ValueError):
            free_kernel([0, 0], [0, 0], t)
        with pytest.raises(ValueError):
            halfspace_kernel([0, 1], [0, 1], t)


def test_halfspace_examples():
    assert halfspace_kernel([0.3, 0.5], [1.0, 0.0], 0.2) == 0.0
    d, t = 0.7, 0.3
    assert halfspace_kernel([0, d], [0, d], t) == pytest.approx((1 - math.exp(-d * d / t)) / (4 * math.pi * t), rel=1e-14)
    assert halfspace_kernel([0, 1], [0, 1], 1.0) == pytest.approx(HALFPLANE_D1_T1, rel=1e-14)


def test_halfspace_rejects_lower_points():
    with pytest.raises(ValueError):
        halfspace_kernel([0, -1], [0, 1], 1.0)


def _residual(kernel, x, y, t):
    h = 1e-4 * math.sqrt(t)
    dt = 1e-4 * t
    x = np.asarray(x, float)
    lap = 0.0
    for e in np.eye(2):
        lap += (kernel(x + h * e, y, t) - 2 * kernel(x, y, t) + kernel(x - h * e, y, t)) / (h * h)
    dtk = (kernel(x, y, t + dt) - kernel(x, y, t - dt)) / (2 * dt)
    return abs(dtk - lap)


@given(coords, coords, coords, coords, times)
def test_free_kernel_heat_equation(a, b, c, d, t):
    assert _residual(free_kernel, [a, b], np.array([c, d]), t) <= 1e-5


@given(coords, st.floats(0.2, 2), coords, st.floats(0.2, 2), times)
def test_halfspace_kernel_heat_equation(a, b, c, d, t):
    assert _residual(halfspace_kernel, [a, b], np.array([c, d]), t) <= 1e-5


@given(coords, st.floats(0, 3), coords, st.floats(0, 3), times)
def test_halfspace_below_free(a, b, c, d, t):
    assert halfspace_kernel([a, b], [c, d], t) <= free_kernel([a, b], [c, d], t)


def test_halfspace_approaches_free_far_from_boundary():
    x = [0.2, 40.0]
    assert halfspace_kernel(x, x, 1.0) == pytest.approx(free_kernel(x, x, 1.0), rel=1e-15)


# -- sector ----------------------------------------------------------------------


def test_sector_vanishes_at_boundary():
    assert abs(sector_kernel_diag(1.0, 1e-10, 0.75 * math.pi, 0.1)) <= 1e-8
    theta = 0.75 * math.pi
    assert abs(sector_kernel_diag(1.0, theta - 1e-10, theta, 0.1)) <= 1e-8


@pytest.mark.parametrize("edge", ["theta-pi/2", "pi/2"])
def test_sector_branch_continuity(edge):
    theta = 0.75 * math.pi
    phi0 = theta - math.pi / 2 if edge == "theta-pi/2" else math.pi / 2
    lo = sector_kernel_diag(1.0, phi0 - 1e-9, theta, 0.1)
    hi = sector_kernel_diag(1.0, phi0 + 1e-9, theta, 0.1)
    at = sector_kernel_diag(1.0, phi0, theta, 0.1)
    assert abs(lo - hi) <= 1e-6
    assert abs(at - lo) <= 1e-6


def test_sector_near_straight_angle_is_halfplane():
    theta, r, phi, t = math.pi - 1e-6, 1.0, math.pi / 4, 0.1
    d = r * math.sin(phi)
    assert abs(sector_kernel_diag(r, phi, theta, t) - halfspace_kernel([0, d], [0, d], t)) <= 1e-5


def test_sector_imaginary_part_vanishes():
    terms = sector_kernel_terms(0.8, 1.1, 0.7 * math.pi, 0.05)
    assert abs(terms.shifted_imaginary) <= 1e-10


def test_sector_between_zero_and_free():
    for phi in np.linspace(0.05, 0.7 * math.pi - 0.05, 9):
        v = sector_kernel_diag(0.5, float(phi), 0.7 * math.pi, 0.2)
        assert 0 <= v <= 1 / (4 * math.pi * 0.2)


def test_sector_symmetric_about_bisector():
    theta = 0.8 * math.pi
    a = sector_kernel_diag(0.6, 0.3, theta, 0.1)
    b = sector_kernel_diag(0.6, theta - 0.3, theta, 0.1)
    assert a == pytest.approx(b, abs=1e-10)


@pytest.mark.parametrize(
    "args, exc",
    [
        ((1.0, 0.5, math.pi / 2, 0.1), AngleDomainError),
        ((1.0, 0.5, math.pi, 0.1), AngleDomainError),
        ((1.0, 0.0, 2.5, 0.1), ValueError),
        ((1.0, 2.5, 2.5, 0.1), ValueError),
        ((1.0, 0.5, 2.5, 0.0), ValueError),
        ((0.0, 0.5, 2.5, 0.1), ValueError),
    ],
)
def test_sector_domain_errors(args, exc):
    with pytest.raises(exc):
        sector_kernel_diag(*args)
