"""Torsion function of an annulus and the sharp interpolation constant.

The torsion function T0 of a domain solves Delta T0 = -1 with zero
boundary values; its maximum c = sup T0 is exactly the constant that
makes the harmonic interpolation error bound on annuli sharp.  For an
annulus A(r, R) in R^dim both T0 and c have closed forms:

    c = (R - r)^2 / (2 dim) * H(rho),   rho = r / R,

where H is a dimensionless shape factor with H(0) = 1 and
H(rho) -> dim/4 as rho -> 1.  H is strictly decreasing for dim in
{2, 3}, identically 1 for dim = 4 and strictly increasing for dim > 4,
which yields the uniform two-sided bracket

    min(1/(2 dim), 1/8) (R - r)^2 <= c <= max(1/(2 dim), 1/8) (R - r)^2.

The closed form for H subtracts nearly equal O(1) quantities with a
double zero at rho = 1, so a direct evaluation loses all precision for
thin annuli.  The implementation rewrites every cancelling difference
through expm1/log1p and same-sign power series, keeping the relative
error near machine precision on all of [0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Annulus

__all__ = [
    "TorsionReport",
    "ShapeFactorReport",
    "torsion_function",
    "radial_profile_coefficient",
    "annulus_shape_factor",
    "torsion_constant",
    "classify_shape_factor",
]

_SERIES_EPS = 1e-17
_MAX_TERMS = 300


def _check_dim(dim: int, minimum: int = 2) -> int:
    if int(dim) != dim or dim < minimum:
        raise ValueError(f"dimension must be an integer >= {minimum}, got {dim}")
    return int(dim)


def _check_ratio(rho: float, allow_zero: bool) -> float:
    rho = float(rho)
    low_ok = rho >= 0.0 if allow_zero else rho > 0.0
    if not (low_ok and rho < 1.0):
        bound = "[0, 1)" if allow_zero else "(0, 1)"
        raise ValueError(f"radius ratio must lie in {bound}, got {rho}")
    return rho


def _neg_log(rho: float) -> float:
    """-log(rho) at full relative accuracy on (0, 1).

    Plain log is fine away from 1; near 1 the Sterbenz-exact difference
    rho - 1 feeds log1p so no digits of 1 - rho are lost.
    """
    if rho < 0.5:
        return -math.log(rho)
    return -math.log1p(rho - 1.0)


def radial_profile_coefficient(rho: float, dim: int) -> float:
    """Coefficient B of the decaying term in the normalized torsion profile.

    B(rho) = rho^{2 D} (1 - rho^2) / (1 - rho^{2 D}) with D = (dim - 2)/2,
    defined for dim >= 3.  B increases from 0 to 1/D as rho goes 0 to 1.
    """
    dim = _check_dim(dim, minimum=3)
    rho = _check_ratio(rho, allow_zero=False)
    big_d = 0.5 * (dim - 2)
    x = 2.0 * _neg_log(rho)  # -2 log rho
    return math.exp(-big_d * x) * (-math.expm1(-x)) / (-math.expm1(-big_d * x))


def _db_minus_one(x: float, big_d: float) -> float:
    """D B - 1 in terms of x = -2 log rho, without cancellation."""
    denom = -math.expm1(-big_d * x)  # 1 - rho^{2D} in (0, 1]
    if (big_d + 1.0) * x <= 1.0:
        # numerator (D+1)(e^{-Dx} - 1) - D(e^{-(D+1)x} - 1) as an entire
        # series sum_{n>=2} (-x)^n/n! * D(D+1) (D^{n-1} - (D+1)^{n-1})
        pref = big_d * (big_d + 1.0)
        powx = 0.5 * x * x
        p_lo = big_d
        p_hi = big_d + 1.0
        num = powx * pref * (p_lo - p_hi)
        for n in range(3, _MAX_TERMS):
            powx *= -x / n
            p_lo *= big_d
            p_hi *= big_d + 1.0
            inc = powx * pref * (p_lo - p_hi)
            num += inc
            if abs(inc) <= _SERIES_EPS * abs(num):
                break
    else:
        num = (big_d + 1.0) * math.expm1(-big_d * x) - big_d * math.expm1(
            -(big_d + 1.0) * x
        )
    return num / denom


def _power_remainder(delta: float, alpha: float) -> float:
    """(1 + delta)^alpha - 1 - alpha delta for alpha > 1, delta in (-1, inf)."""
    if abs(delta) <= 0.5:
        coef = 0.5 * alpha * (alpha - 1.0)
        power = delta * delta
        acc = coef * power
        for n in range(3, _MAX_TERMS):
            coef *= (alpha - (n - 1.0)) / n
            if coef == 0.0:  # integer alpha, series terminates
                break
            power *= delta
            inc = coef * power
            acc += inc
            if abs(inc) <= _SERIES_EPS * abs(acc):
                break
        return acc
    return math.expm1(alpha * math.log1p(delta)) - alpha * delta


def _shape_factor_high(rho: float, dim: int) -> tuple[float, float]:
    """(H, u_critical) for dim >= 3."""
    if rho == 0.0:
        return 1.0, 0.0
    eps = 1.0 - rho
    big_d = 0.5 * (dim - 2)
    alpha = big_d + 1.0
    x = 2.0 * _neg_log(rho)
    # log(D B) assembled in log space so B may dip below 1/eps of 1
    log_db = (
        math.log(big_d)
        - big_d * x
        + math.log(-math.expm1(-x))
        - math.log(-math.expm1(-big_d * x))
    )
    if log_db < -math.log(2.0):
        # wide-annulus regime, D B < 1/2: the three terms of
        # H eps^2 = 1 + B - (alpha/D) (D B)^{1/alpha} no longer cancel
        root = math.exp(log_db / alpha)  # (D B)^{1/(D+1)}, the peak location
        b = math.exp(log_db) / big_d
        g = 1.0 + b - (alpha / big_d) * root
        return g / (eps * eps), root
    eta = _db_minus_one(x, big_d)  # D B - 1, in (-1/2, 0)
    delta = math.expm1(math.log1p(eta) / alpha)  # (D B)^{1/(D+1)} - 1
    psi = _power_remainder(delta, alpha)  # beta^alpha - alpha beta + D at beta = 1+delta
    return psi / (big_d * eps * eps), 1.0 + delta


def _ratio_minus_one_d2(rho: float, eps: float, t: float) -> float:
    """u_c - 1 for dim = 2, where u_c = (1 - rho^2)/(-2 log rho), t = -log rho."""
    if eps < 0.25:
        # eps(2 - eps) - 2t = -(2 eps^2 + sum_{n>=3} (2/n) eps^n), all same sign
        s = 2.0 * eps * eps
        power = eps * eps
        for n in range(3, _MAX_TERMS):
            power *= eps
            inc = 2.0 * power / n
            s += inc
            if inc <= _SERIES_EPS * s:
                break
        return -s / (2.0 * t)
    return ((1.0 - rho) * (1.0 + rho) - 2.0 * t) / (2.0 * t)


def _log1p_minus_x(v: float) -> float:
    """log(1 + v) - v without cancellation for small v."""
    if abs(v) <= 0.5:
        term = v
        acc = 0.0
        for n in range(2, _MAX_TERMS):
            term *= -v
            inc = term / n
            acc += inc
            if abs(inc) <= _SERIES_EPS * max(abs(acc), 1e-300):
                break
        return acc
    return math.log1p(v) - v


def _shape_factor_d2(rho: float) -> tuple[float, float]:
    """(H, u_critical) for dim = 2."""
    if rho == 0.0:
        return 1.0, 0.0
    eps = 1.0 - rho
    t = _neg_log(rho)
    v = _ratio_minus_one_d2(rho, eps, t)
    u = 1.0 + v
    if u < 0.5:
        u = (1.0 - rho) * (1.0 + rho) / (2.0 * t)  # avoid the 1 + v round trip
        g = 1.0 - u + u * math.log(u)
    else:
        # 1 - u + u log u = (log(1+v) - v) + v log(1+v)
        g = _log1p_minus_x(v) + v * math.log1p(v)
    return g / (eps * eps), u


def _shape_factor_with_peak(rho: float, dim: int) -> tuple[float, float]:
    if dim == 2:
        return _shape_factor_d2(rho)
    return _shape_factor_high(rho, dim)


def annulus_shape_factor(rho: float, dim: int) -> float:
    """Shape factor H(rho) in c = (R - r)^2/(2 dim) * H(r/R).

    Defined on [0, 1) for integer dim >= 2; tends to dim/4 as rho -> 1.
    """
    dim = _check_dim(dim)
    rho = _check_ratio(rho, allow_zero=True)
    return _shape_factor_with_peak(rho, dim)[0]


@dataclass(frozen=True)
class TorsionReport:
    """Torsion constant of an annulus with its sharp two-sided bracket.

    u_critical is the maximizer of the torsion function in the variable
    u = (|x|/R)^2; the maximum itself is c_value.
    """

    c_value: float
    lower_bound: float
    upper_bound: float
    u_critical: float
    shape_factor: float


def torsion_constant(annulus: Annulus) -> TorsionReport:
    """Maximum of the torsion function, c = (R - r)^2/(2 dim) * H(r/R)."""
    d = annulus.dim
    width = annulus.width
    h_value, u_critical = _shape_factor_with_peak(annulus.ratio, d)
    c = width * width / (2.0 * d) * h_value
    lo = min(1.0 / (2.0 * d), 0.125) * width * width
    hi = max(1.0 / (2.0 * d), 0.125) * width * width
    return TorsionReport(
        c_value=c,
        lower_bound=lo,
        upper_bound=hi,
        u_critical=u_critical,
        shape_factor=h_value,
    )


def torsion_function(radius, annulus: Annulus):
    """Torsion function T0 at radius |x|, vectorized over radii.

    T0 solves Delta T0 = -1 on the annulus and vanishes on both boundary
    spheres.  Radii outside [inner, outer] (beyond a 1e-12 relative
    slack) raise ValueError.
    """
    r, big_r, d = annulus.inner, annulus.outer, annulus.dim
    s = np.asarray(radius, dtype=float)
    slack = 1e-12 * big_r
    if np.any(s < r - slack) or np.any(s > big_r + slack):
        raise ValueError(
            f"radius outside the annulus [{r}, {big_r}] of dimension {d}"
        )
    s = np.clip(s, r, big_r)
    ratio = s / big_r
    rho = r / big_r
    if d == 2:
        profile = np.log(ratio) / math.log(rho)
    else:
        profile = (ratio ** (2.0 - d) - 1.0) / (rho ** (2.0 - d) - 1.0)
    out = (big_r * big_r / (2.0 * d)) * (1.0 - ratio * ratio - (1.0 - rho * rho) * profile)
    return out if out.shape else float(out)


@dataclass(frozen=True)
class ShapeFactorReport:
    """Monotonicity scan of the shape factor H on a uniform ratio grid."""

    dim: int
    grid_size: int
    classification: str  # "decreasing", "constant", "increasing" or "mixed"
    value_at_zero: float
    value_near_one: float
    limit_at_one: float
    max_abs_deviation: float  # from value_at_zero, relevant for "constant"
    n_rising: int
    n_falling: int


def classify_shape_factor(dim: int, grid_size: int = 1000) -> ShapeFactorReport:
    """Classify H's monotonicity from successive differences on a grid.

    The grid is uniform on [0, 1) with grid_size points.  Expected
    outcome: decreasing for dim in {2, 3}, constant for dim = 4 (within
    1e-10) and increasing for dim > 4.
    """
    dim = _check_dim(dim)
    if grid_size < 3:
        raise ValueError(f"grid_size must be >= 3, got {grid_size}")
    grid = np.linspace(0.0, 1.0, grid_size + 1)[:-1]
    values = np.array([_shape_factor_with_peak(rho, dim)[0] for rho in grid])
    diffs = np.diff(values)
    n_rising = int(np.sum(diffs > 0.0))
    n_falling = int(np.sum(diffs < 0.0))
    deviation = float(np.max(np.abs(values - values[0])))
    if deviation <= 1e-10 * max(1.0, abs(values[0])):
        classification = "constant"
    elif n_falling == diffs.size:
        classification = "decreasing"
    elif n_rising == diffs.size:
        classification = "increasing"
    else:
        classification = "mixed"
    return ShapeFactorReport(
        dim=dim,
        grid_size=grid_size,
        classification=classification,
        value_at_zero=float(values[0]),
        value_near_one=float(values[-1]),
        limit_at_one=dim / 4.0,
        max_abs_deviation=deviation,
        n_rising=n_rising,
        n_falling=n_falling,
    )
