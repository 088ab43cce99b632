"""Harmonic and biharmonic interpolation splines on annular partitions.

Transfinite interpolation of boundary data prescribed on concentric
spheres, with the exact torsion-function constants that make the
second and fourth order error bounds sharp.
"""

from .fields import (
    TestField,
    coordinate_field,
    cubic_coordinate_field,
    exp_radial_field,
    field_by_name,
    field_names,
    quartic_norm_field,
    solid_harmonic_field,
    squared_norm_field,
    standard_suite,
)
from .geometry import AnnularPartition, Annulus, Segment
from .harmonics import (
    ModeIndex,
    SphereQuadrature,
    basis_dimension,
    coefficient_table,
    eval_harmonic,
    fourier_laplace_coefficient,
    harmonic_values,
    modes_up_to,
    sphere_quadrature,
)
from .harness import (
    DEFAULT_SEED,
    BoundCertificate,
    ConvergenceRow,
    bound_certificate,
    bound_constant,
    convergence_study,
    l2_error,
    l2_norm,
    mode_laplacian_consistency,
    orthogonality_check,
    radial_rule,
    sup_norm_error,
)
from .radial import (
    RadialBasisFunction,
    biharmonic_radial_basis,
    harmonic_radial_basis,
    mode_bilaplacian,
    mode_bilaplacian_terms,
    mode_laplacian,
    mode_laplacian_fd,
)
from .splines import (
    RadialSpline,
    SplineExpansion,
    default_truncation,
    fit_biharmonic_mode,
    fit_harmonic_mode,
    fit_radial_profile,
    interpolate_biharmonic,
    interpolate_harmonic,
)
from .torsion import (
    ShapeFactorReport,
    TorsionReport,
    annulus_shape_factor,
    classify_shape_factor,
    radial_profile_coefficient,
    torsion_constant,
    torsion_function,
)

__version__ = "0.1.0"

__all__ = [
    "AnnularPartition",
    "Annulus",
    "BoundCertificate",
    "ConvergenceRow",
    "DEFAULT_SEED",
    "ModeIndex",
    "RadialBasisFunction",
    "RadialSpline",
    "Segment",
    "ShapeFactorReport",
    "SphereQuadrature",
    "SplineExpansion",
    "TestField",
    "TorsionReport",
    "annulus_shape_factor",
    "basis_dimension",
    "biharmonic_radial_basis",
    "bound_certificate",
    "bound_constant",
    "classify_shape_factor",
    "coefficient_table",
    "convergence_study",
    "coordinate_field",
    "cubic_coordinate_field",
    "default_truncation",
    "eval_harmonic",
    "exp_radial_field",
    "field_by_name",
    "field_names",
    "fit_biharmonic_mode",
    "fit_harmonic_mode",
    "fit_radial_profile",
    "fourier_laplace_coefficient",
    "harmonic_radial_basis",
    "harmonic_values",
    "interpolate_biharmonic",
    "interpolate_harmonic",
    "l2_error",
    "l2_norm",
    "mode_bilaplacian",
    "mode_bilaplacian_terms",
    "mode_laplacian",
    "mode_laplacian_consistency",
    "mode_laplacian_fd",
    "modes_up_to",
    "orthogonality_check",
    "quartic_norm_field",
    "radial_profile_coefficient",
    "radial_rule",
    "solid_harmonic_field",
    "sphere_quadrature",
    "squared_norm_field",
    "standard_suite",
    "sup_norm_error",
    "torsion_constant",
    "torsion_function",
]
