"""Biharmonic interpolation splines: C2 gluing and reproduction.

These interpolants match values on every partition sphere plus the
radial derivative on the two outermost ones, and glue segments with C1
and C2 continuity.  Fields annihilated by the squared Laplacian must be
reproduced to rounding.
"""

import numpy as np
import pytest

from annular_splines import (
    AnnularPartition,
    coordinate_field,
    cubic_coordinate_field,
    fit_biharmonic_mode,
    interpolate_biharmonic,
    solid_harmonic_field,
    squared_norm_field,
    sup_norm_error,
)

PARTITION = AnnularPartition((1.0, 1.4, 2.0))


@pytest.mark.parametrize("dim", [2, 3])
@pytest.mark.parametrize("k", [0, 1, 2, 4])
def test_node_and_slope_reproduction(dim, k):
    rng = np.random.default_rng(17 + k + dim)
    values = rng.standard_normal(PARTITION.n_nodes)
    slopes = rng.standard_normal(2)
    spline = fit_biharmonic_mode(values, tuple(slopes), k, dim, PARTITION)
    nodes = np.array(PARTITION.radii)
    assert spline.value(nodes) == pytest.approx(values, rel=1e-9, abs=1e-9)
    ends = np.array([PARTITION.inner, PARTITION.outer])
    assert spline.value(ends, deriv=1) == pytest.approx(slopes, rel=1e-9, abs=1e-9)


def test_quadratic_data_is_exact():
    # r^2 lies in the k = 0 biharmonic span for every dimension
    nodes = np.array(PARTITION.radii)
    for dim in (2, 3):
        spline = fit_biharmonic_mode(nodes**2, (2.0, 4.0), 0, dim, PARTITION)
        r = np.linspace(1.0, 2.0, 101)
        assert spline.value(r) == pytest.approx(r**2, rel=1e-11)


def test_two_sphere_partition_solves_square_system():
    # N = 2 gives a single 4x4 system: 2 values + 2 end slopes
    part = AnnularPartition((1.0, 2.0))
    rng = np.random.default_rng(23)
    values = rng.standard_normal(2)
    slopes = rng.standard_normal(2)
    spline = fit_biharmonic_mode(values, tuple(slopes), 1, 3, part)
    assert spline.value(np.array([1.0, 2.0])) == pytest.approx(values, rel=1e-10, abs=1e-10)
    assert spline.value(np.array([1.0, 2.0]), deriv=1) == pytest.approx(
        slopes, rel=1e-10, abs=1e-10
    )


@pytest.mark.parametrize("dim", [2, 3])
def test_c2_continuity_at_interior_spheres(dim):
    # r^4 data is outside the k = 0 span, so the glue rows really bind
    nodes = np.array(PARTITION.radii)
    spline = fit_biharmonic_mode(nodes**4, (4.0, 32.0), 0, dim, PARTITION)
    for node in PARTITION.radii[1:-1]:
        left = np.nextafter(node, PARTITION.inner)
        right = np.nextafter(node, PARTITION.outer)
        for deriv in (0, 1, 2):
            a = float(spline.value(left, deriv=deriv))
            b = float(spline.value(right, deriv=deriv))
            scale = max(1.0, abs(a))
            assert abs(a - b) < 1e-6 * scale, (deriv, a, b)


@pytest.mark.parametrize("dim", [2, 3])
def test_reproduces_biharmonic_suite_fields(dim):
    fields = [
        squared_norm_field(dim),
        coordinate_field(dim),
        cubic_coordinate_field(dim),
        solid_harmonic_field(2, 1, dim),
    ]
    for field in fields:
        approx = interpolate_biharmonic(field, PARTITION, dim)
        assert sup_norm_error(field, approx) < 1e-8, field.name


@pytest.mark.parametrize("dim", [2, 3])
def test_boundary_radial_derivative_is_matched(dim):
    field = cubic_coordinate_field(dim)
    approx = interpolate_biharmonic(field, PARTITION, dim)
    h = 1e-6
    e1 = np.zeros(dim)
    e1[0] = 1.0
    for r0, inward in ((PARTITION.inner, 1.0), (PARTITION.outer, -1.0)):
        # one-sided stencil pointing into the annulus
        p0 = r0 * e1[None, :]
        p1 = (r0 + inward * h) * e1[None, :]
        p2 = (r0 + 2.0 * inward * h) * e1[None, :]
        fd = inward * (
            -3.0 * approx.evaluate(p0) + 4.0 * approx.evaluate(p1) - approx.evaluate(p2)
        ) / (2.0 * h)
        want = field.radial_derivative(p0)
        assert fd == pytest.approx(want, rel=1e-5, abs=1e-5)


def test_high_degree_fit_is_stable():
    rng = np.random.default_rng(50)
    values = rng.standard_normal(PARTITION.n_nodes)
    spline = fit_biharmonic_mode(values, (0.3, -0.1), 50, 2, PARTITION)
    nodes = np.array(PARTITION.radii)
    assert spline.value(nodes) == pytest.approx(values, rel=1e-7, abs=1e-7)


@pytest.mark.parametrize("dim", [2, 3])
def test_truncation_controls_mode_count(dim):
    field = cubic_coordinate_field(dim)
    small = interpolate_biharmonic(field, PARTITION, dim, truncation=1)
    large = interpolate_biharmonic(field, PARTITION, dim, truncation=3)
    assert small.truncation == 1
    assert large.truncation == 3
    assert len(small.modes) < len(large.modes)
