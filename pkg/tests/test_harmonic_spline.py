"""Harmonic interpolation splines: fitting, reproduction, sharpness.

The interpolant is piecewise harmonic in each annular segment and
matches the data at every partition sphere.  Harmonic polynomial fields
up to the truncation degree must be reproduced to rounding, and for
F = |x|^2 the error is exactly -2 dim times the torsion function of
each segment, which these tests check pointwise.
"""

import math

import numpy as np
import pytest

from annular_splines import (
    AnnularPartition,
    Annulus,
    ModeIndex,
    coordinate_field,
    fit_harmonic_mode,
    interpolate_harmonic,
    mode_laplacian_fd,
    solid_harmonic_field,
    squared_norm_field,
    sup_norm_error,
    torsion_function,
)

PARTITION = AnnularPartition((1.0, 1.4, 2.0))


def unit_directions(angles, dim):
    if dim == 2:
        return np.column_stack([np.cos(angles), np.sin(angles)])
    return np.column_stack(
        [
            np.sin(angles) * np.cos(2.0 * angles),
            np.sin(angles) * np.sin(2.0 * angles),
            np.cos(angles),
        ]
    )


def polar_points(radii, angles, dim):
    thetas = unit_directions(angles, dim)
    return (radii[:, None, None] * thetas[None, :, :]).reshape(-1, dim)


@pytest.mark.parametrize("dim", [2, 3])
@pytest.mark.parametrize("k", [0, 1, 2, 5])
def test_node_reproduction(dim, k):
    rng = np.random.default_rng(42 + 10 * k + dim)
    values = rng.standard_normal(PARTITION.n_nodes)
    spline = fit_harmonic_mode(values, k, dim, PARTITION)
    nodes = np.array(PARTITION.radii)
    assert spline.value(nodes) == pytest.approx(values, rel=1e-12, abs=1e-12)
    assert spline.mode == ModeIndex(k, 1)


@pytest.mark.parametrize("dim", [2, 3])
def test_constant_data_stays_constant(dim):
    spline = fit_harmonic_mode(np.full(PARTITION.n_nodes, 3.5), 0, dim, PARTITION)
    r = np.linspace(1.0, 2.0, 50)
    assert spline.value(r) == pytest.approx(np.full(50, 3.5), rel=1e-13)


def test_degree_two_power_is_exact_in_3d():
    # r^2 lies in the span {r^2, r^-3} of the k = 2 basis for dim = 3
    nodes = np.array(PARTITION.radii)
    spline = fit_harmonic_mode(nodes**2, 2, 3, PARTITION)
    r = np.linspace(1.0, 2.0, 101)
    assert spline.value(r) == pytest.approx(r**2, rel=1e-12)


@pytest.mark.parametrize("dim", [2, 3])
@pytest.mark.parametrize("k", [0, 1, 3])
def test_piecewise_annihilation(dim, k):
    """The fitted radial factor is killed by the mode operator M_k."""
    rng = np.random.default_rng(5 + k + dim)
    values = rng.standard_normal(PARTITION.n_nodes)
    spline = fit_harmonic_mode(values, k, dim, PARTITION)
    scale = float(np.max(np.abs(values)))
    for seg in PARTITION.segments():
        interior = np.linspace(seg.r_lo, seg.r_hi, 9)[1:-1]
        exact = spline.mode_laplacian_at(interior)
        assert np.max(np.abs(exact)) < 1e-10 * scale
    # independent finite-difference cross-check at one point
    mid = 0.5 * (PARTITION.inner + PARTITION.outer)
    fd = mode_laplacian_fd(lambda r: float(spline.value(r)), k, dim, mid)
    assert abs(fd) < 1e-8 * max(1.0, scale)


@pytest.mark.parametrize("dim", [2, 3])
def test_reproduces_coordinate_field(dim):
    field = coordinate_field(dim)
    approx = interpolate_harmonic(field, PARTITION, dim)
    assert sup_norm_error(field, approx) < 1e-9


@pytest.mark.parametrize("dim", [2, 3])
def test_reproduces_solid_harmonics(dim):
    for k in (1, 2):
        field = solid_harmonic_field(k, 1, dim)
        approx = interpolate_harmonic(field, PARTITION, dim)
        assert sup_norm_error(field, approx) < 1e-9, field.name


@pytest.mark.parametrize("dim", [2, 3])
def test_error_is_scaled_torsion_function(dim):
    """F = |x|^2: the interpolation error equals -2 dim T0 per segment."""
    field = squared_norm_field(dim)
    approx = interpolate_harmonic(field, PARTITION, dim, truncation=0)
    angles = np.linspace(0.0, 2.0 * math.pi, 7)[:-1]
    thetas = unit_directions(angles, dim)
    for seg in PARTITION.segments():
        ann = Annulus(seg.r_lo, seg.r_hi, dim)
        r = np.linspace(seg.r_lo, seg.r_hi, 401)
        values = field.value(polar_points(r, angles, dim)).reshape(r.size, -1)
        diff = values - approx.evaluate_polar(r, thetas)
        expected = -2.0 * dim * torsion_function(r, ann)
        for col in range(diff.shape[1]):
            assert diff[:, col] == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("dim", [2, 3])
def test_linearity(dim):
    f = coordinate_field(dim)
    g = solid_harmonic_field(2, 1, dim)
    combo = lambda p: 2.0 * f.value(p) - 0.5 * g.value(p)
    a = interpolate_harmonic(combo, PARTITION, dim)
    af = interpolate_harmonic(f, PARTITION, dim)
    ag = interpolate_harmonic(g, PARTITION, dim)
    rng = np.random.default_rng(8)
    radii = rng.uniform(1.0, 2.0, 40)
    direc = rng.standard_normal((40, dim))
    pts = radii[:, None] * direc / np.linalg.norm(direc, axis=1)[:, None]
    assert a.evaluate(pts) == pytest.approx(
        2.0 * af.evaluate(pts) - 0.5 * ag.evaluate(pts), rel=1e-11, abs=1e-11
    )


def test_evaluate_rejects_points_outside_domain():
    field = coordinate_field(2)
    approx = interpolate_harmonic(field, PARTITION, 2)
    with pytest.raises(ValueError):
        approx.evaluate(np.array([[2.5, 0.0]]))
    with pytest.raises(ValueError):
        approx.evaluate(np.array([[0.1, 0.0]]))


def test_high_degree_fit_is_stable():
    # the scaled radial basis keeps k = 60 fits well conditioned
    rng = np.random.default_rng(60)
    values = rng.standard_normal(PARTITION.n_nodes)
    spline = fit_harmonic_mode(values, 60, 2, PARTITION)
    nodes = np.array(PARTITION.radii)
    assert spline.value(nodes) == pytest.approx(values, rel=1e-8, abs=1e-8)


@pytest.mark.parametrize("dim", [2, 3])
def test_polar_and_cartesian_evaluation_agree(dim):
    field = solid_harmonic_field(2, 1, dim)
    approx = interpolate_harmonic(field, PARTITION, dim)
    r = np.linspace(1.05, 1.95, 8)
    angles = np.linspace(0.2, 5.0, 5)
    thetas = unit_directions(angles, dim)
    polar = approx.evaluate_polar(r, thetas)
    pts = (r[:, None, None] * thetas[None, :, :]).reshape(-1, dim)
    cart = approx.evaluate(pts).reshape(r.size, len(angles))
    assert polar == pytest.approx(cart, rel=1e-12, abs=1e-12)
