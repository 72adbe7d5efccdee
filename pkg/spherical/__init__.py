# File: spherical/__init__.py
from .models import ChebyshevKind, PolyCoeffs, SphericalParams
from .polynomials import (chebyshev, chebyshev_derivative, divide_by_one_minus_s,
                          spherical_basis, spherical_coeffs)
from .functions import (psi_one, psi_table, psi_value, s_from_z,
                        spherical_closed_form, spherical_derivative_at_one,
                        spherical_table, spherical_value, uniform_convergence_gap)

__all__ = [
    'ChebyshevKind', 'PolyCoeffs', 'SphericalParams',
    'chebyshev', 'chebyshev_derivative', 'divide_by_one_minus_s',
    'spherical_basis', 'spherical_coeffs',
    'psi_one', 'psi_table', 'psi_value', 's_from_z',
    'spherical_closed_form', 'spherical_derivative_at_one',
    'spherical_table', 'spherical_value', 'uniform_convergence_gap'
]
