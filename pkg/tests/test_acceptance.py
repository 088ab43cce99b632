"""Acceptance suite: one test per top-level claim of the package.

Each test prints one line (see the terminal summary) of the form

    ACCEPTANCE  n <name>: PASS/FAIL (elapsed, limit)

and asserts both the mathematical check and the runtime budget.  The
checks cross modules on purpose: closed-form constants against grid
maximization, interpolation errors against torsion functions, observed
convergence orders against the proved exponents.
"""

import time

import numpy as np

from annular_splines import (
    AnnularPartition,
    Annulus,
    annulus_shape_factor,
    bound_certificate,
    classify_shape_factor,
    convergence_study,
    cubic_coordinate_field,
    fit_radial_profile,
    interpolate_harmonic,
    mode_laplacian_consistency,
    modes_up_to,
    orthogonality_check,
    quartic_norm_field,
    radial_profile_coefficient,
    sphere_quadrature,
    squared_norm_field,
    standard_suite,
    sup_norm_error,
    torsion_constant,
    torsion_function,
)
from annular_splines.harness import _polar_values, _radial_grid


def test_criterion_01_exact_constant_in_dim_four(acceptance):
    start = time.perf_counter()
    rng = np.random.default_rng(0xA5F1)
    worst = 0.0
    for _ in range(20):
        inner = rng.uniform(0.1, 5.0)
        outer = inner + rng.uniform(0.1, 4.0)
        c = torsion_constant(Annulus(inner, outer, 4)).c_value
        exact = (outer - inner) ** 2 / 8.0
        worst = max(worst, abs(c - exact) / exact)
    elapsed = time.perf_counter() - start
    acceptance(
        1, "exact-constant-dim4", worst <= 1e-10, elapsed, 1.0,
        f"max rel dev {worst:.2e}",
    )


def test_criterion_02_constant_matches_grid_maximization(acceptance):
    start = time.perf_counter()
    worst = 0.0
    for dim in (2, 3, 5, 6):
        for rho in (0.1, 0.5, 0.9):
            ann = Annulus(rho, 1.0, dim)
            c = torsion_constant(ann).c_value
            grid = np.linspace(rho, 1.0, 10**6)
            grid_max = float(np.max(torsion_function(grid, ann)))
            worst = max(worst, abs(c - grid_max) / c)
    elapsed = time.perf_counter() - start
    acceptance(
        2, "torsion-grid-oracle", worst <= 1e-6, elapsed, 5.0,
        f"max rel dev {worst:.2e}",
    )


def test_criterion_03_shape_factor_limits_and_monotonicity(acceptance):
    start = time.perf_counter()
    ok = True
    notes = []
    near_one = 1.0 - 1e-8
    checks = [
        (abs(annulus_shape_factor(0.0, 3) - 1.0), "H3(0)"),
        (abs(annulus_shape_factor(near_one, 3) - 0.75), "H3(1-)"),
        (abs(annulus_shape_factor(0.0, 2) - 1.0), "H2(0)"),
        (abs(annulus_shape_factor(near_one, 2) - 0.5), "H2(1-)"),
    ]
    for dim in range(3, 9):
        big_d = 0.5 * (dim - 2)
        dev = abs(radial_profile_coefficient(near_one, dim) - 1.0 / big_d)
        checks.append((dev, f"B{dim}(1-)"))
    for dev, label in checks:
        if dev > 1e-6:
            ok = False
            notes.append(f"{label} off by {dev:.2e}")
    wanted = {2: "decreasing", 3: "decreasing", 4: "constant"}
    wanted.update({dim: "increasing" for dim in range(5, 11)})
    for dim, expected in wanted.items():
        got = classify_shape_factor(dim, grid_size=1000).classification
        if got != expected:
            ok = False
            notes.append(f"dim {dim}: {got} != {expected}")
    elapsed = time.perf_counter() - start
    acceptance(
        3, "limits-and-monotonicity", ok, elapsed, 2.0, "; ".join(notes)
    )


def test_criterion_04_two_sided_bracket(acceptance):
    start = time.perf_counter()
    ok = True
    for dim in range(2, 11):
        for rho in np.linspace(0.005, 0.995, 100):
            report = torsion_constant(Annulus(float(rho), 1.0, dim))
            if not (
                report.lower_bound - 1e-12
                <= report.c_value
                <= report.upper_bound + 1e-12
            ):
                ok = False
    elapsed = time.perf_counter() - start
    acceptance(4, "two-sided-bracket", ok, elapsed, 2.0)


def test_criterion_05_reproduction_invariants(acceptance):
    from annular_splines import interpolate_biharmonic

    start = time.perf_counter()
    partition = AnnularPartition((1.0, 1.4, 2.0))
    worst = 0.0
    label = ""
    for dim in (2, 3):
        for field in standard_suite(dim):
            if field.harmonic:
                err = sup_norm_error(
                    field, interpolate_harmonic(field, partition, dim, truncation=3)
                )
                if err > worst:
                    worst, label = err, f"I2 {field.name} d{dim}"
            if field.biharmonic:
                err = sup_norm_error(
                    field, interpolate_biharmonic(field, partition, dim, truncation=3)
                )
                if err > worst:
                    worst, label = err, f"I4 {field.name} d{dim}"
    elapsed = time.perf_counter() - start
    acceptance(
        5, "reproduction-invariants", worst < 1e-8, elapsed, 30.0,
        f"worst {worst:.2e} ({label})",
    )


def test_criterion_06_sharpness_identity(acceptance):
    start = time.perf_counter()
    partition = AnnularPartition((1.0, 2.0))
    ok = True
    notes = []
    for dim in (2, 3, 4):
        field = squared_norm_field(dim)
        ann = Annulus(1.0, 2.0, dim)
        c = torsion_constant(ann).c_value
        r = _radial_grid(partition, 4001)
        torsion = torsion_function(r, ann)
        if dim <= 3:
            approx = interpolate_harmonic(field, partition, dim, truncation=2)
            thetas = sphere_quadrature(dim, 8).nodes
            diff = _polar_values(field.value, r, thetas) - approx.evaluate_polar(
                r, thetas
            )
            pointwise = np.max(np.abs(diff - (-2.0 * dim * torsion)[:, None]))
            sup = float(np.max(np.abs(diff)))
        else:
            spline = fit_radial_profile(field, partition, dim)
            diff = r**2 - spline.value(r)
            pointwise = np.max(np.abs(diff - (-2.0 * dim * torsion)))
            sup = float(np.max(np.abs(diff)))
        sup_dev = abs(sup - 2.0 * dim * c) / (2.0 * dim * c)
        if sup_dev > 1e-6:
            ok = False
            notes.append(f"d{dim} sup dev {sup_dev:.2e}")
        if pointwise > 1e-7:
            ok = False
            notes.append(f"d{dim} pointwise dev {pointwise:.2e}")
    elapsed = time.perf_counter() - start
    acceptance(6, "sharpness-identity", ok, elapsed, 10.0, "; ".join(notes))


def test_criterion_07_convergence_rates(acceptance):
    start = time.perf_counter()
    base = AnnularPartition((1.0, 2.0))
    ok = True
    notes = []
    for dim in (2, 3):
        rows = convergence_study(
            squared_norm_field(dim), base, 4, "harmonic_sup", dim, truncation=2
        )
        for row in rows[1:]:
            if abs(row.observed_rate - 2.0) > 0.05:
                ok = False
                notes.append(f"sup rate d{dim} level {row.level}: {row.observed_rate:.3f}")
        rows = convergence_study(
            quartic_norm_field(dim), base, 4, "biharmonic_l2", dim, truncation=2
        )
        terminal = rows[-1].observed_rate
        if not 3.7 <= terminal <= 4.5:
            ok = False
            notes.append(f"L2 rate d{dim}: {terminal:.3f}")
        else:
            notes.append(f"d{dim} rates ok, terminal {terminal:.2f}")
    elapsed = time.perf_counter() - start
    acceptance(7, "convergence-rates", ok, elapsed, 60.0, "; ".join(notes))


def test_criterion_08_bound_certificates(acceptance):
    start = time.perf_counter()
    partitions = [
        AnnularPartition((1.0, 2.0)),
        AnnularPartition((1.0, 1.5, 2.0)),
        AnnularPartition((1.0, 1.25, 1.5, 1.75, 2.0)),
    ]
    worst_ratio = 0.0
    failures = []
    count = 0
    for dim in (2, 3):
        for field in standard_suite(dim):
            for partition in partitions:
                for which in ("harmonic_sup", "biharmonic_l2"):
                    cert = bound_certificate(
                        field, partition, dim, which, truncation=3
                    )
                    count += 1
                    worst_ratio = max(worst_ratio, cert.ratio)
                    if cert.ratio > 1.01:
                        failures.append(
                            f"{which} {field.name} d{dim} N{partition.n_nodes}"
                            f" ratio {cert.ratio:.4f}"
                        )
    elapsed = time.perf_counter() - start
    acceptance(
        8, "bound-certificates", not failures, elapsed, 60.0,
        f"{count} certificates, worst ratio {worst_ratio:.4f}"
        + ("; " + "; ".join(failures[:4]) if failures else ""),
    )


def test_criterion_09_orthogonality(acceptance):
    start = time.perf_counter()
    partition = AnnularPartition((1.0, 1.5, 2.0))
    worst = 0.0
    for dim in (2, 3):
        probes = modes_up_to(4, dim)
        for field in (quartic_norm_field(dim), cubic_coordinate_field(dim)):
            worst = max(
                worst, orthogonality_check(field, partition, dim, probes)
            )
    elapsed = time.perf_counter() - start
    acceptance(
        9, "laplacian-orthogonality", worst <= 1e-8, elapsed, 30.0,
        f"max normalized residual {worst:.2e}",
    )


def test_criterion_10_mode_laplacian_consistency(acceptance):
    start = time.perf_counter()
    samples = [1.2, 1.5, 1.8]
    worst = 0.0
    label = ""
    for dim in (2, 3):
        for field in standard_suite(dim):
            for mode in modes_up_to(3, dim):
                dev = mode_laplacian_consistency(field, mode, samples, dim)
                if dev > worst:
                    worst, label = dev, f"{field.name} d{dim} k{mode.k}l{mode.ell}"
    elapsed = time.perf_counter() - start
    acceptance(
        10, "mode-laplacian-consistency", worst <= 1e-5, elapsed, 10.0,
        f"max rel dev {worst:.2e} ({label})",
    )
