"""Harmonic interpolation on an annular partition, and why it is sharp.

A harmonic spline matches a field on every partition sphere and is
harmonic in between; it is the several-variables analogue of a
piecewise linear interpolant.  For F = |x|^2 the interpolation error
is exactly -2d times the torsion function of each segment, which makes
the sup error bound an identity rather than an estimate.

Run:  python3 demos/harmonic_interpolation.py
"""

import numpy as np

from annular_splines import (
    AnnularPartition,
    Annulus,
    coordinate_field,
    interpolate_harmonic,
    solid_harmonic_field,
    squared_norm_field,
    sup_norm_error,
    torsion_constant,
    torsion_function,
)

dim = 3
partition = AnnularPartition((1.0, 1.5, 2.0))

# harmonic polynomials pass through unchanged
print("Reproduction of harmonic fields on", partition.radii)
for field in (coordinate_field(dim), solid_harmonic_field(2, 1, dim)):
    approx = interpolate_harmonic(field, partition, dim)
    print(f"  {field.name:<10} sup error {sup_norm_error(field, approx):.2e}")

# the sharp example: F = |x|^2
field = squared_norm_field(dim)
approx = interpolate_harmonic(field, partition, dim)
print()
print("F = |x|^2 is not harmonic; the error is a stack of torsion bumps.")
r = np.linspace(1.0, 2.0, 13)
e1 = np.zeros((r.size, dim))
e1[:, 0] = r
err = field.value(e1) - approx.evaluate(e1)
for radius, e in zip(r, err):
    bar = "#" * int(round(-e * 400))
    print(f"  r = {radius:.3f}  error {e:+.6f}  {bar}")

print()
print("Per segment the error equals -2 d T0 of that segment's annulus:")
for seg in partition.segments():
    ann = Annulus(seg.r_lo, seg.r_hi, dim)
    rr = np.linspace(seg.r_lo, seg.r_hi, 2001)
    pts = np.zeros((rr.size, dim))
    pts[:, 0] = rr
    e = field.value(pts) - approx.evaluate(pts)
    dev = np.max(np.abs(e + 2.0 * dim * torsion_function(rr, ann)))
    c = torsion_constant(ann).c_value
    print(
        f"  [{seg.r_lo}, {seg.r_hi}]: max |error + 2d T0| = {dev:.2e},"
        f"  sup |error| = {np.max(np.abs(e)):.8f} = 2 d c = {2 * dim * c:.8f}"
    )
