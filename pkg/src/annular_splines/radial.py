"""Per-mode radial operators and their closed-form null spaces.

Expanding a function on an annulus of R^dim in spherical harmonics turns
the Laplacian into a family of ordinary differential operators acting on
the radial coefficient of each degree-k mode:

    M_k u = u'' + (dim - 1)/r u' - k (k + dim - 2)/r^2 u

The null space of M_k is spanned by two power functions (with a log
replacing a duplicated power), and the null space of M_k^2 by four.
This module builds those bases, scaled per segment so every basis value
stays O(1) for arbitrarily large degree, and evaluates M_k and M_k^2
both analytically and by finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .geometry import Segment

__all__ = [
    "RadialBasisFunction",
    "harmonic_radial_basis",
    "biharmonic_radial_basis",
    "mode_laplacian",
    "mode_bilaplacian",
    "mode_bilaplacian_terms",
    "mode_laplacian_fd",
]


def _check_mode_dims(k: int, dim: int) -> None:
    if int(dim) != dim or dim < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {dim}")
    if int(k) != k or k < 0:
        raise ValueError(f"degree must be an integer >= 0, got {k}")


@dataclass(frozen=True)
class RadialBasisFunction:
    """One function (r/s)^e * log(r/s)^p with p in {0, 1}.

    The scale radius s is a segment endpoint chosen so the plain power
    part never exceeds 1 in magnitude on the segment; the log factor is
    bounded by log(r_hi/r_lo).
    """

    exponent: float
    log_power: int
    scale_radius: float

    def __post_init__(self) -> None:
        if self.log_power not in (0, 1):
            raise ValueError(f"log_power must be 0 or 1, got {self.log_power}")
        if self.scale_radius <= 0.0:
            raise ValueError("scale_radius must be positive")

    @property
    def kind(self) -> str:
        return "power_log" if self.log_power else "power"

    def __call__(self, r, deriv: int = 0):
        """Value or an exact derivative of order deriv <= 4 at radii r."""
        if deriv < 0 or deriv > 4:
            raise ValueError(f"derivative order must be in 0..4, got {deriv}")
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0.0):
            raise ValueError("radii must be positive")
        e = self.exponent
        x = r / self.scale_radius
        power = x**e
        if self.log_power == 0:
            coef = 1.0
            for i in range(deriv):
                coef *= e - i
            return power * coef * r ** (-float(deriv)) if deriv else power
        # d^n/dr^n [x^e log x] = x^e (a_n log x + b_n) r^{-n} with
        # a_0 = 1, b_0 = 0, a_{n+1} = (e - n) a_n, b_{n+1} = (e - n) b_n + a_n
        a, b = 1.0, 0.0
        for n in range(deriv):
            a, b = (e - n) * a, (e - n) * b + a
        log_x = np.log(x)
        out = power * (a * log_x + b)
        return out * r ** (-float(deriv)) if deriv else out

    def derivatives(self, r, up_to: int) -> np.ndarray:
        """Stacked derivatives of orders 0..up_to, shape (up_to + 1,) + r.shape."""
        r = np.asarray(r, dtype=float)
        return np.stack([self(r, deriv=n) for n in range(up_to + 1)])


def _scaled(exponent: float, log_power: int, segment: Segment) -> RadialBasisFunction:
    scale = segment.r_hi if exponent >= 0 else segment.r_lo
    return RadialBasisFunction(exponent=float(exponent), log_power=log_power, scale_radius=scale)


def _basis_from_exponents(exponents: Sequence[int], segment: Segment) -> tuple[RadialBasisFunction, ...]:
    # a duplicated exponent contributes its second copy with a log factor;
    # multiplicities above 2 cannot occur for these exponent sets
    out: list[RadialBasisFunction] = []
    seen: list[int] = []
    for e in exponents:
        if e in seen:
            out.append(_scaled(e, 1, segment))
        else:
            out.append(_scaled(e, 0, segment))
            seen.append(e)
    return tuple(out)


def harmonic_radial_basis(k: int, dim: int, segment: Segment) -> tuple[RadialBasisFunction, ...]:
    """Two functions spanning the null space of M_k on the segment.

    Exponents are k and 2 - dim - k; for dim = 2, k = 0 they coincide and
    the basis is {1, log(r/r_hi)}.
    """
    _check_mode_dims(k, dim)
    return _basis_from_exponents([k, 2 - dim - k], segment)


def biharmonic_radial_basis(k: int, dim: int, segment: Segment) -> tuple[RadialBasisFunction, ...]:
    """Four functions spanning the null space of M_k^2 on the segment.

    Exponents are {k, 2 - dim - k, k + 2, 4 - dim - k}; coincidences
    (dim = 2 with k in {0, 1}, dim = 4 with k = 0) are resolved by a log
    factor on the repeated exponent.
    """
    _check_mode_dims(k, dim)
    return _basis_from_exponents([k, 2 - dim - k, k + 2, 4 - dim - k], segment)


def mode_laplacian(derivs: Sequence, k: int, dim: int, r) -> np.ndarray:
    """M_k u from (u, u', u'') sampled at radii r."""
    _check_mode_dims(k, dim)
    u0, u1, u2 = (np.asarray(d, dtype=float) for d in derivs)
    r = np.asarray(r, dtype=float)
    q = float(k * (k + dim - 2))
    return u2 + (dim - 1.0) * u1 / r - q * u0 / r**2


def mode_bilaplacian_terms(derivs: Sequence, k: int, dim: int, r) -> np.ndarray:
    """The five addends of M_k^2 u from (u, u', u'', u''', u'''').

    Returned stacked along axis 0; their sum is the operator value and
    their magnitudes give the natural cancellation scale at large k.
    """
    _check_mode_dims(k, dim)
    u0, u1, u2, u3, u4 = (np.asarray(d, dtype=float) for d in derivs)
    r = np.asarray(r, dtype=float)
    p = dim - 1.0
    q = float(k * (k + dim - 2))
    return np.stack(
        [
            u4,
            2.0 * p * u3 / r,
            (p * p - 2.0 * p - 2.0 * q) * u2 / r**2,
            (2.0 * p + 4.0 * q - p * p - 2.0 * p * q) * u1 / r**3,
            (q * q + 2.0 * p * q - 6.0 * q) * u0 / r**4,
        ]
    )


def mode_bilaplacian(derivs: Sequence, k: int, dim: int, r) -> np.ndarray:
    """M_k^2 u from derivatives of u up to fourth order."""
    return mode_bilaplacian_terms(derivs, k, dim, r).sum(axis=0)


def mode_laplacian_fd(
    g: Callable[[float], float],
    k: int,
    dim: int,
    r: float,
    h: float | None = None,
    richardson: bool = False,
) -> float:
    """M_k applied to a sampled radial function by central differences.

    Uses fourth-order five-point stencils; g must be evaluable on
    [r - 2h, r + 2h].  With richardson=True the h and h/2 results are
    extrapolated, trading two extra evaluations for two more orders.
    """
    _check_mode_dims(k, dim)
    if r <= 0.0:
        raise ValueError(f"radius must be positive, got {r}")
    if h is None:
        h = 1e-3 * r
    if h <= 0.0 or 2.0 * h >= r:
        raise ValueError(f"step h = {h} invalid for radius {r}")

    def once(step: float) -> float:
        gm2, gm1, g0, gp1, gp2 = (
            float(g(r - 2.0 * step)),
            float(g(r - step)),
            float(g(r)),
            float(g(r + step)),
            float(g(r + 2.0 * step)),
        )
        d1 = (gm2 - 8.0 * gm1 + 8.0 * gp1 - gp2) / (12.0 * step)
        d2 = (-gm2 + 16.0 * gm1 - 30.0 * g0 + 16.0 * gp1 - gp2) / (12.0 * step**2)
        return mode_laplacian((g0, d1, d2), k, dim, r)

    if not richardson:
        return float(once(h))
    coarse, fine = once(h), once(0.5 * h)
    return float((16.0 * fine - coarse) / 15.0)
