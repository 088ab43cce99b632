"""Biharmonic (polyspline) interpolation: C2 across spheres.

The fourth-order interpolant matches values on every sphere of the
partition and the radial derivative on the two outermost ones, and its
pieces glue with two continuous derivatives, like a cubic spline in
one variable.  Run: python3 demos/biharmonic_interpolation.py
"""

import numpy as np

from annular_splines import (
    AnnularPartition,
    cubic_coordinate_field,
    exp_radial_field,
    interpolate_biharmonic,
    interpolate_harmonic,
    l2_error,
    quartic_norm_field,
    sup_norm_error,
)

dim = 2
partition = AnnularPartition((1.0, 1.25, 1.5, 1.75, 2.0))

print("Biharmonic fields reproduce exactly:")
field = cubic_coordinate_field(dim)
approx = interpolate_biharmonic(field, partition, dim)
print(f"  {field.name}: sup error {sup_norm_error(field, approx):.2e}")

print()
print("Fields with nonzero bilaplacian do not, but the error is small")
print("and the fourth-order interpolant beats the second-order one:")
for field in (quartic_norm_field(dim), exp_radial_field(dim)):
    i2 = interpolate_harmonic(field, partition, dim)
    i4 = interpolate_biharmonic(field, partition, dim)
    print(
        f"  {field.name:<11} L2 error: harmonic {l2_error(field, i2):.3e}"
        f"   biharmonic {l2_error(field, i4):.3e}"
    )

# look at smoothness across an interior sphere along a fixed ray
field = quartic_norm_field(dim)
approx = interpolate_biharmonic(field, partition, dim)
node = 1.5
h = 1e-5
print()
print(f"Second differences of the interpolant across the sphere r = {node}")
print("(a jump in the second derivative would show up as a spike):")
for radius in (node - 2 * h, node - h, node, node + h, node + 2 * h):
    rr = np.array([radius - h, radius, radius + h])
    pts = np.zeros((3, dim))
    pts[:, 0] = rr
    vals = approx.evaluate(pts)
    second = (vals[0] - 2 * vals[1] + vals[2]) / h**2
    print(f"  r = {radius:.6f}   d2/dr2 ~ {second:.6f}")
