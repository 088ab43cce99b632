"""Smooth scalar fields with analytic derivatives for error studies.

Every field evaluates on (n, dim) point arrays and carries its exact
Laplacian, bilaplacian and radial derivative, so error bounds and
orthogonality identities can be checked without numerical
differentiation.  The standard suite mixes radial polynomials, solid
harmonics up to degree 2, a cubic with a nontrivial biharmonic mode and
a non-polynomial radial exponential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .harmonics import ModeIndex, basis_dimension, harmonic_values

__all__ = [
    "TestField",
    "squared_norm_field",
    "quartic_norm_field",
    "coordinate_field",
    "cubic_coordinate_field",
    "exp_radial_field",
    "solid_harmonic_field",
    "standard_suite",
    "field_by_name",
    "field_names",
]

PointFunc = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class TestField:
    """Scalar field on R^dim bundled with exact derivative evaluators.

    harmonic / biharmonic flags record whether the Laplacian or
    bilaplacian vanishes identically; radial marks dependence on |x|
    alone (which unlocks interpolation paths for dim > 3).
    """

    name: str
    dim: int
    value: PointFunc
    laplacian: PointFunc
    bilaplacian: PointFunc
    radial_derivative: PointFunc
    harmonic: bool = False
    biharmonic: bool = False
    radial: bool = False

    def __call__(self, points: np.ndarray) -> np.ndarray:
        return self.value(points)


def _radii(points: np.ndarray) -> np.ndarray:
    return np.linalg.norm(np.atleast_2d(points), axis=1)


def squared_norm_field(dim: int) -> TestField:
    """F = |x|^2, the sharpness witness: Delta F = 2 dim, bilaplacian 0."""
    return TestField(
        name="norm2",
        dim=dim,
        value=lambda p: _radii(p) ** 2,
        laplacian=lambda p: np.full(_radii(p).shape, 2.0 * dim),
        bilaplacian=lambda p: np.zeros(_radii(p).shape),
        radial_derivative=lambda p: 2.0 * _radii(p),
        biharmonic=True,
        radial=True,
    )


def quartic_norm_field(dim: int) -> TestField:
    """F = |x|^4 with Delta F = 4(dim+2)|x|^2 and constant bilaplacian."""
    return TestField(
        name="norm4",
        dim=dim,
        value=lambda p: _radii(p) ** 4,
        laplacian=lambda p: 4.0 * (dim + 2.0) * _radii(p) ** 2,
        bilaplacian=lambda p: np.full(_radii(p).shape, 8.0 * dim * (dim + 2.0)),
        radial_derivative=lambda p: 4.0 * _radii(p) ** 3,
        radial=True,
    )


def coordinate_field(dim: int) -> TestField:
    """F = x_1, harmonic."""
    return TestField(
        name="x1",
        dim=dim,
        value=lambda p: np.atleast_2d(p)[:, 0].astype(float),
        laplacian=lambda p: np.zeros(_radii(p).shape),
        bilaplacian=lambda p: np.zeros(_radii(p).shape),
        radial_derivative=lambda p: np.atleast_2d(p)[:, 0] / _radii(p),
        harmonic=True,
        biharmonic=True,
    )


def cubic_coordinate_field(dim: int) -> TestField:
    """F = |x|^2 x_1, biharmonic but not harmonic: Delta F = (2 dim + 4) x_1."""
    return TestField(
        name="norm2_x1",
        dim=dim,
        value=lambda p: _radii(p) ** 2 * np.atleast_2d(p)[:, 0],
        laplacian=lambda p: (2.0 * dim + 4.0) * np.atleast_2d(p)[:, 0],
        bilaplacian=lambda p: np.zeros(_radii(p).shape),
        radial_derivative=lambda p: 3.0 * _radii(p) * np.atleast_2d(p)[:, 0],
        biharmonic=True,
    )


def exp_radial_field(dim: int) -> TestField:
    """F = exp(-|x|), radial and neither harmonic nor biharmonic."""

    def lap(p):
        r = _radii(p)
        return np.exp(-r) * (1.0 - (dim - 1.0) / r)

    def bilap(p):
        r = _radii(p)
        c = (dim - 1.0) * (dim - 3.0)
        return np.exp(-r) * (1.0 - 2.0 * (dim - 1.0) / r + c / r**2 + c / r**3)

    return TestField(
        name="exp_radial",
        dim=dim,
        value=lambda p: np.exp(-_radii(p)),
        laplacian=lap,
        bilaplacian=bilap,
        radial_derivative=lambda p: -np.exp(-_radii(p)),
        radial=True,
    )


def solid_harmonic_field(k: int, ell: int, dim: int) -> TestField:
    """F = |x|^k Y_{k,ell}(x/|x|), a harmonic polynomial of degree k."""
    if ell < 1 or ell > basis_dimension(k, dim):
        raise ValueError(f"ell = {ell} out of range for degree {k} in dim {dim}")
    mode = ModeIndex(k, ell)

    def angular(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        p = np.atleast_2d(np.asarray(p, dtype=float))
        r = np.linalg.norm(p, axis=1)
        if np.any(r <= 0.0):
            raise ValueError("solid harmonic fields need points away from the origin")
        y = harmonic_values([mode], p / r[:, None], dim)[0]
        return r, y

    def value(p):
        r, y = angular(p)
        return r**k * y

    def radial_derivative(p):
        r, y = angular(p)
        return k * r ** (k - 1.0) * y

    return TestField(
        name=f"solid_{k}_{ell}",
        dim=dim,
        value=value,
        laplacian=lambda p: np.zeros(_radii(p).shape),
        bilaplacian=lambda p: np.zeros(_radii(p).shape),
        radial_derivative=radial_derivative,
        harmonic=True,
        biharmonic=True,
        radial=(k == 0),
    )


def standard_suite(dim: int) -> tuple[TestField, ...]:
    """The default field collection for certificates and consistency runs."""
    fields = [
        squared_norm_field(dim),
        quartic_norm_field(dim),
        coordinate_field(dim),
    ]
    for k in range(3):
        for ell in range(1, basis_dimension(k, dim) + 1):
            fields.append(solid_harmonic_field(k, ell, dim))
    fields.append(cubic_coordinate_field(dim))
    fields.append(exp_radial_field(dim))
    return tuple(fields)


_BUILDERS: dict[str, Callable[[int], TestField]] = {
    "norm2": squared_norm_field,
    "norm4": quartic_norm_field,
    "x1": coordinate_field,
    "norm2_x1": cubic_coordinate_field,
    "exp_radial": exp_radial_field,
}


def field_names(dim: int) -> tuple[str, ...]:
    """Names accepted by field_by_name for the given dimension."""
    named = list(_BUILDERS)
    for k in range(3):
        for ell in range(1, basis_dimension(k, dim) + 1):
            named.append(f"solid_{k}_{ell}")
    return tuple(named)


def field_by_name(name: str, dim: int) -> TestField:
    """Look up a suite field by name, e.g. 'norm4' or 'solid_2_1'."""
    if name in _BUILDERS:
        return _BUILDERS[name](dim)
    if name.startswith("solid_"):
        parts = name.split("_")
        if len(parts) == 3:
            try:
                k, ell = int(parts[1]), int(parts[2])
            except ValueError:
                pass
            else:
                return solid_harmonic_field(k, ell, dim)
    raise ValueError(
        f"unknown field '{name}'; known fields: {', '.join(field_names(dim))}"
    )
