# File: moments/quadrature.py
"""Atomic measures from moments (Gauss quadrature) and from densities."""
from fractions import Fraction

import numpy as np

from config.config import Config
from utils.exceptions import BadInput, SingularMoments
from utils.linalg import min_eigenvalue, scale_of, to_float_matrix
from utils.logger import get_logger
from utils.scalars import all_exact, sqrt_scalar
from moments.models import AtomicMeasure, MomentSequence

logger = get_logger(__name__)


def _values(m):
    return m.values if isinstance(m, MomentSequence) else tuple(m)


def atoms_from_moments(m, k, tol=None):
    """k-point Gauss quadrature reproducing the moments m_0..m_{2k-1}.

    The Jacobi matrix comes from the Cholesky factor of the Hankel matrix
    (Golub-Welsch); nodes are its eigenvalues and weights m_0 times the squared
    first eigenvector components. Exact input with k <= 2 is solved in closed
    form and stays exact whenever the nodes are rational.
    """
    m = _values(m)
    if k < 1:
        raise BadInput(f"Number of atoms must be >= 1, got {k}")
    if len(m) < 2 * k:
        raise BadInput(f"{k} atoms need {2 * k} moments, got {len(m)}")
    tol = Config.TOLERANCE if tol is None else tol

    hankel = [[m[i + j] for j in range(k)] for i in range(k)]
    floor = min_eigenvalue(to_float_matrix(hankel))
    if floor <= tol * scale_of(m[:2 * k - 1]):
        raise SingularMoments(
            f"Hankel matrix of order {k - 1} is not positive definite (min eigenvalue {floor:.3g}); "
            f"fewer than {k} atoms represent these moments"
        )

    if all_exact(m[:2 * k]) and k <= 2:
        return _exact_atoms(m, k)
    return _golub_welsch(m, k)


def _exact_atoms(m, k):
    m0, m1, *rest = (Fraction(v) for v in m[:2 * k])
    if k == 1:
        return AtomicMeasure.from_pairs([(m1 / m0, m0)])

    m2, m3 = rest
    det = m0 * m2 - m1 * m1
    # monic orthogonal polynomial x^2 + c1 x + c0
    c0 = (m1 * m3 - m2 * m2) / det
    c1 = (m1 * m2 - m0 * m3) / det
    root = sqrt_scalar(c1 * c1 - 4 * c0)
    x1, x2 = (-c1 - root) / 2, (-c1 + root) / 2
    w2 = (m1 - m0 * x1) / (x2 - x1)
    w1 = m0 - w2
    return AtomicMeasure.from_pairs([(x1, w1), (x2, w2)])


def _golub_welsch(m, k):
    m = np.array([float(v) for v in m[:2 * k]])
    hankel = np.array([[m[i + j] for j in range(k)] for i in range(k)])
    try:
        lower = np.linalg.cholesky(hankel)
    except np.linalg.LinAlgError as e:
        raise SingularMoments(f"Cholesky factorization of the order {k - 1} Hankel matrix failed") from e
    # rows 0..k-1 of the upper Cholesky factor of the (k+1) x (k+1) Hankel matrix
    r = np.column_stack([lower.T, np.linalg.solve(lower, m[k:2 * k])])

    diagonal = np.diag(r)
    ratio = np.diag(r, 1) / diagonal
    alpha = ratio - np.concatenate(([0.0], ratio[:-1]))
    beta = diagonal[1:] / diagonal[:-1]

    jacobi = np.diag(alpha) + np.diag(beta, -1) + np.diag(beta, 1)
    nodes, vectors = np.linalg.eigh(jacobi)
    weights = m[0] * vectors[0, :] ** 2
    logger.debug(f"Golub-Welsch with {k} nodes: {nodes}")
    return AtomicMeasure.from_pairs(zip(nodes.tolist(), weights.tolist()))


def density_to_atoms(density, npoints):
    """Gauss-Legendre discretization of the measure density(s) ds on [-1, 1]"""
    if npoints < 1:
        raise BadInput(f"npoints must be >= 1, got {npoints}")
    nodes, weights = np.polynomial.legendre.leggauss(npoints)
    pairs = []
    for node, weight in zip(nodes.tolist(), weights.tolist()):
        value = float(density(node))
        if value < 0:
            raise BadInput(f"Density is negative at s = {node:.6g}: {value}")
        if value > 0:
            pairs.append((node, weight * value))
    return AtomicMeasure.from_pairs(pairs)
