# File: oracle/__init__.py
from .models import ConvolutionCheck, GramReport, GrowthRow, NonRadialReport, OracleVerdict
from .gram import (distance_matrix, gram_cnd, gram_pd, kernel_report, projected_gram,
                   schoenberg_kernel, smallest_violating_radius)
from .nonradial import growth_table, linear_bound_violations, nonradial_cnd_example, psi_rho, rho
from .convolution import laplacian, radial_convolve, sphere_measure, sphere_recurrence, support_radius

__all__ = [
    'ConvolutionCheck', 'GramReport', 'GrowthRow', 'NonRadialReport', 'OracleVerdict',
    'distance_matrix', 'gram_cnd', 'gram_pd', 'kernel_report', 'projected_gram',
    'schoenberg_kernel', 'smallest_violating_radius',
    'growth_table', 'linear_bound_violations', 'nonradial_cnd_example', 'psi_rho', 'rho',
    'laplacian', 'radial_convolve', 'sphere_measure', 'sphere_recurrence', 'support_radius'
]
