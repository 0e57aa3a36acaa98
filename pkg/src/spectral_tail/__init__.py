"""Explicit error bounds for Jacobi expansions and Gegenbauer-Gauss quadrature of analytic functions."""

from __future__ import annotations

from types import ModuleType as _ModuleType

from .coeffbounds import (
    BoundReport,
    bound_cheb_type_3_2_1_2,
    bound_chebyshev,
    bound_chebyshev2,
    bound_davis,
    bound_gegenbauer,
    bound_jacobi,
    bound_kambo_legendre,
    bound_leg_type_1_0,
    bound_legendre,
    bound_xiang,
    bound_xiang_legendre,
    contour_series_bound,
    legendre_gap,
    truncation_bound,
    truncation_bound_legendre,
    truncation_bound_xiang,
)
from .ellipse import AnalyticFunction, EllipseGeometry, geometry, map_to_ellipse, max_modulus
from .errors import AnalyticityError, DomainError, NumericalError, PrecisionError, PrecisionWarning
from .expand import TEST_FUNCTIONS, ExpansionSeries, basis_rescale, exact_coeffs, expansion_coeffs, truncation_error_L2, u1, u2
from .gammafn import gamma_norm, gamma_norm_bound, upsilon, upsilon_rigorous
from .orthopoly import JacobiIndex, connection_coeffs, gegenbauer_on_ellipse, jacobi_eval
from .quadrature import (
    bound_quad_cheb2_closed,
    bound_quad_computable,
    bound_quad_gegenbauer,
    bound_quad_legendre,
    bound_quad_literature,
    gauss_rule,
    gegenbauer_min_modulus,
    mu_coeffs,
    q_function,
    quad_remainder,
    theta_profile,
)
from .sigma import c_hat, sigma_closed, sigma_general, sigma_oracle, sigma_table

__version__ = "0.1.0"

__all__ = [
    name
    for name, obj in list(globals().items())
    if not name.startswith("_") and name != "annotations" and not isinstance(obj, _ModuleType)
]
