# File: utils/linalg.py
import numpy as np


def to_float_matrix(rows):
    """Dense float64 copy of a square matrix given as nested sequences of scalars"""
    matrix = np.array([[float(v) for v in row] for row in rows], dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Expected a square matrix, got shape {matrix.shape}")
    return matrix


def scale_of(entries):
    """max(1, max |entry|): the reference magnitude for scale-invariant decisions"""
    largest = max((abs(float(v)) for v in entries), default=0.0)
    return max(1.0, largest)


def symmetrize(matrix):
    return 0.5 * (matrix + matrix.T)


def min_eigenvalue(matrix):
    if matrix.size == 0:
        return 0.0
    return float(np.linalg.eigvalsh(symmetrize(matrix))[0])


def min_eigenpair(matrix):
    """Smallest eigenvalue of a symmetric matrix and a unit eigenvector for it"""
    if matrix.size == 0:
        return 0.0, np.zeros(0)
    values, vectors = np.linalg.eigh(symmetrize(matrix))
    return float(values[0]), vectors[:, 0]


def is_psd(min_eig, tol, scale):
    return min_eig >= -tol * scale
