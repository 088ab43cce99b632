"""Real orthonormal spherical harmonics on the unit circle and sphere.

Basis convention (orthonormal under the unweighted surface measure):

* dim = 2: ``Y_0 = 1/sqrt(2 pi)`` and for degree k >= 1 the pair
  ``cos(k phi)/sqrt(pi)`` (ell = 1), ``sin(k phi)/sqrt(pi)`` (ell = 2).
* dim = 3: fully normalized associated Legendre functions with
  ``sqrt(2) cos/sin`` azimuthal factors.  Within degree k the ell index
  runs 1..2k+1 with ell = 1 the zonal (m = 0) harmonic, even ell the
  cosine harmonic of order m = ell/2, odd ell >= 3 the sine harmonic of
  order m = (ell - 1)/2.

Degrees are exact: each basis element restricted from a homogeneous
harmonic polynomial of degree k, so ``r^k Y_k`` is harmonic in R^dim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "ModeIndex",
    "SphereQuadrature",
    "basis_dimension",
    "modes_up_to",
    "eval_harmonic",
    "harmonic_values",
    "sphere_quadrature",
    "fourier_laplace_coefficient",
    "coefficient_table",
]

_UNIT_TOL = 1e-12


@dataclass(frozen=True)
class ModeIndex:
    """Degree k >= 0 and within-degree index ell, 1-based."""

    k: int
    ell: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"degree must be >= 0, got {self.k}")
        if self.ell < 1:
            raise ValueError(f"ell is 1-based, got {self.ell}")


def basis_dimension(k: int, dim: int) -> int:
    """Number of linearly independent spherical harmonics of degree k."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    if dim == 2:
        return 1 if k == 0 else 2
    if dim == 3:
        return 2 * k + 1
    raise ValueError(f"spherical harmonics implemented for dim 2 and 3, got {dim}")


def modes_up_to(max_degree: int, dim: int) -> tuple[ModeIndex, ...]:
    """All modes with k <= max_degree, ordered by (k, ell)."""
    if max_degree < 0:
        raise ValueError(f"max_degree must be >= 0, got {max_degree}")
    out = []
    for k in range(max_degree + 1):
        for ell in range(1, basis_dimension(k, dim) + 1):
            out.append(ModeIndex(k, ell))
    return tuple(out)


def _check_mode(mode: ModeIndex, dim: int) -> None:
    if mode.ell > basis_dimension(mode.k, dim):
        raise ValueError(
            f"ell = {mode.ell} out of range for degree {mode.k} in dim {dim}"
        )


def _legendre_table(max_degree: int, t: np.ndarray) -> np.ndarray:
    """Fully normalized associated Legendre values P[k, m] at t = cos(theta).

    Normalization: int_{-1}^{1} P[k, m]^2 dt = 1/(2 pi), so that the
    assembled harmonics are orthonormal over the sphere.  Standard stable
    three-term recurrence in k for each order m.
    """
    K = max_degree
    table = np.zeros((K + 1, K + 1) + t.shape)
    sin_t = np.sqrt(np.clip(1.0 - t * t, 0.0, None))
    table[0, 0] = 1.0 / math.sqrt(4.0 * math.pi)
    for m in range(1, K + 1):
        table[m, m] = math.sqrt((2 * m + 1) / (2.0 * m)) * sin_t * table[m - 1, m - 1]
    for m in range(K):
        table[m + 1, m] = math.sqrt(2 * m + 3.0) * t * table[m, m]
    for m in range(K + 1):
        for k in range(m + 2, K + 1):
            a = math.sqrt((4.0 * k * k - 1.0) / (k * k - m * m))
            b = math.sqrt(((k - 1.0) ** 2 - m * m) / (4.0 * (k - 1.0) ** 2 - 1.0))
            table[k, m] = a * (t * table[k - 1, m] - b * table[k - 2, m])
    return table


def harmonic_values(
    modes: Sequence[ModeIndex], thetas: np.ndarray, dim: int
) -> np.ndarray:
    """Matrix of Y values, shape (len(modes), n_points).

    thetas is an (n_points, dim) array of unit vectors; no renormalization
    is applied here, callers own the validation.
    """
    thetas = np.atleast_2d(np.asarray(thetas, dtype=float))
    if thetas.shape[1] != dim:
        raise ValueError(f"expected points of dimension {dim}, got {thetas.shape[1]}")
    for mode in modes:
        _check_mode(mode, dim)
    n = thetas.shape[0]
    out = np.empty((len(modes), n))
    phi = np.arctan2(thetas[:, 1], thetas[:, 0])
    if dim == 2:
        inv_sqrt_2pi = 1.0 / math.sqrt(2.0 * math.pi)
        inv_sqrt_pi = 1.0 / math.sqrt(math.pi)
        for i, mode in enumerate(modes):
            if mode.k == 0:
                out[i] = inv_sqrt_2pi
            elif mode.ell == 1:
                out[i] = np.cos(mode.k * phi) * inv_sqrt_pi
            else:
                out[i] = np.sin(mode.k * phi) * inv_sqrt_pi
        return out
    if dim != 3:
        raise ValueError(f"spherical harmonics implemented for dim 2 and 3, got {dim}")
    max_k = max((m.k for m in modes), default=0)
    table = _legendre_table(max_k, thetas[:, 2])
    sqrt2 = math.sqrt(2.0)
    for i, mode in enumerate(modes):
        if mode.ell == 1:
            out[i] = table[mode.k, 0]
        elif mode.ell % 2 == 0:
            m = mode.ell // 2
            out[i] = sqrt2 * table[mode.k, m] * np.cos(m * phi)
        else:
            m = (mode.ell - 1) // 2
            out[i] = sqrt2 * table[mode.k, m] * np.sin(m * phi)
    return out


def eval_harmonic(mode: ModeIndex, theta: Sequence[float], dim: int) -> float:
    """Value of one harmonic at a unit vector theta.

    theta must be unit up to 1e-12 relative tolerance; it is renormalized
    before evaluation.  Larger deviations raise ValueError.
    """
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (dim,):
        raise ValueError(f"expected a vector of shape ({dim},), got {theta.shape}")
    norm = float(np.linalg.norm(theta))
    if abs(norm - 1.0) > _UNIT_TOL:
        raise ValueError(
            f"|theta| - 1 = {norm - 1.0:.3e} exceeds the 1e-12 unit tolerance"
        )
    return float(harmonic_values([mode], theta / norm, dim)[0, 0])


@dataclass(frozen=True)
class SphereQuadrature:
    """Positive-weight quadrature on the unit sphere S^{dim-1}."""

    dim: int
    nodes: np.ndarray  # (n, dim) unit vectors
    weights: np.ndarray  # (n,)
    exactness: int

    @property
    def n_nodes(self) -> int:
        return self.nodes.shape[0]


def sphere_quadrature(dim: int, exactness: int) -> SphereQuadrature:
    """Quadrature integrating all harmonics products up to the given degree.

    dim = 2 uses n = exactness + 2 equispaced angles with equal weights
    2 pi / n (trapezoid rule, exact for trig degree <= n - 1).  dim = 3
    uses a Gauss-Legendre grid in cos(theta) crossed with equispaced
    azimuth.  Weights are positive and sum to the sphere surface area.
    """
    if exactness < 0:
        raise ValueError(f"exactness must be >= 0, got {exactness}")
    if dim == 2:
        n = exactness + 2
        phi = 2.0 * math.pi * np.arange(n) / n
        nodes = np.column_stack([np.cos(phi), np.sin(phi)])
        weights = np.full(n, 2.0 * math.pi / n)
        return SphereQuadrature(dim=2, nodes=nodes, weights=weights, exactness=exactness)
    if dim == 3:
        n_t = exactness // 2 + 1
        n_phi = exactness + 2
        t, wt = np.polynomial.legendre.leggauss(n_t)
        phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
        sin_t = np.sqrt(1.0 - t * t)
        cos_p, sin_p = np.cos(phi), np.sin(phi)
        nodes = np.empty((n_t * n_phi, 3))
        nodes[:, 0] = np.outer(sin_t, cos_p).ravel()
        nodes[:, 1] = np.outer(sin_t, sin_p).ravel()
        nodes[:, 2] = np.repeat(t, n_phi)
        weights = np.repeat(wt, n_phi) * (2.0 * math.pi / n_phi)
        return SphereQuadrature(dim=3, nodes=nodes, weights=weights, exactness=exactness)
    raise ValueError(f"sphere quadrature implemented for dim 2 and 3, got {dim}")


def fourier_laplace_coefficient(
    field: Callable[[np.ndarray], np.ndarray],
    mode: ModeIndex,
    radius: float,
    quad: SphereQuadrature,
) -> float:
    """Coefficient int_{S^{dim-1}} F(r theta) Y(theta) d theta by quadrature.

    field maps an (n, dim) array of points to n values.
    """
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    y = harmonic_values([mode], quad.nodes, quad.dim)[0]
    vals = np.asarray(field(radius * quad.nodes), dtype=float)
    return float(np.dot(quad.weights * y, vals))


def coefficient_table(
    field: Callable[[np.ndarray], np.ndarray],
    modes: Sequence[ModeIndex],
    radii: Sequence[float],
    quad: SphereQuadrature,
) -> np.ndarray:
    """Coefficients for several modes and radii at once, shape (n_modes, n_radii)."""
    radii = np.asarray(radii, dtype=float)
    if np.any(radii <= 0.0):
        raise ValueError("radii must be positive")
    yw = harmonic_values(modes, quad.nodes, quad.dim) * quad.weights  # (M, nq)
    points = radii[:, None, None] * quad.nodes[None, :, :]  # (nr, nq, dim)
    vals = np.asarray(
        field(points.reshape(-1, quad.dim)), dtype=float
    ).reshape(len(radii), quad.n_nodes)
    return yw @ vals.T
