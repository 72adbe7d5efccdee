# File: moments/__init__.py
from .models import (Atom, AtomicMeasure, MatrixCheck, MomentSequence, MomentVerdict,
                     RadialFunction, Role, VerdictStatus)
from .transforms import (moments_to_phi, moments_to_psi, phi_to_moments,
                         psi_to_moments, solve_lower)
from .hausdorff import hausdorff_check, moment_matrices
from .synthesis import synthesize_phi, synthesize_psi
from .quadrature import atoms_from_moments, density_to_atoms
from .generators import MeasureGenerator, SeparatedMeasureGenerator

__all__ = [
    'Atom', 'AtomicMeasure', 'MatrixCheck', 'MomentSequence', 'MomentVerdict',
    'RadialFunction', 'Role', 'VerdictStatus',
    'moments_to_phi', 'moments_to_psi', 'phi_to_moments', 'psi_to_moments', 'solve_lower',
    'hausdorff_check', 'moment_matrices',
    'synthesize_phi', 'synthesize_psi',
    'atoms_from_moments', 'density_to_atoms',
    'MeasureGenerator', 'SeparatedMeasureGenerator'
]
