# File: oracle/gram.py
"""Brute-force definiteness tests on Cayley balls.

phi is positive definite when sum c_j c_k phi(x_k^-1 x_j) >= 0 for every
finite family of words; psi is conditionally negative definite when the same
sum is <= 0 whenever sum c_j = 0. Restricting to a ball and taking the
smallest eigenvalue turns both into dense symmetric eigenproblems.
"""
import numpy as np

from config.config import Config
from utils.exceptions import BadInput, InsufficientDepth, InternalDisagreement
from utils.linalg import is_psd, min_eigenpair, scale_of
from utils.logger import get_logger
from oracle.models import GramReport, OracleVerdict
from words.cayley import ball
from words.group import distance, inverse, multiply
from words.models import Rank

logger = get_logger(__name__)

# floor of the agreement threshold between the two CND forms, per matrix entry
AGREEMENT_FLOOR = 1e-10


def _check_depth(f, radius):
    if radius < 0:
        raise BadInput(f"Radius must be >= 0, got {radius}")
    needed = 2 * radius + 1
    if len(f.values) < needed:
        raise InsufficientDepth(
            f"A ball of radius {radius} needs values up to length {2 * radius}; got {len(f.values)} values"
        )
    return [float(v) for v in f.values[:needed]]


def distance_matrix(words):
    """|x_k^-1 x_j| for every pair of words"""
    size = len(words)
    d = np.zeros((size, size), dtype=int)
    for j in range(size):
        for k in range(j + 1, size):
            d[j, k] = d[k, j] = distance(words[j], words[k])
    return d


def _tolerance(tol):
    tol = Config.TOLERANCE if tol is None else float(tol)
    if tol < 0:
        raise BadInput(f"Tolerance must be >= 0, got {tol}")
    return tol


def gram_pd(rank, radius, f, tol=None, cap=None):
    """M[j, k] = phi(|x_k^-1 x_j|) over ball(rank, radius); PSD up to tol * scale"""
    rank = Rank.parse(rank).require_finite("gram_pd")
    tol = _tolerance(tol)
    values = np.array(_check_depth(f, radius))
    words = ball(rank, radius, cap)

    gram = values[distance_matrix(words)]
    scale = scale_of(values)
    min_eig, vector = min_eigenpair(gram)
    holds = is_psd(min_eig, tol, scale)
    logger.debug(f"gram_pd(r={rank}, radius={radius}): dim {len(words)}, min eigenvalue {min_eig:.3g}")
    return GramReport(
        radius, len(words), min_eig,
        OracleVerdict.HOLDS if holds else OracleVerdict.VIOLATED,
        None if holds else tuple(vector.tolist()), tol, scale
    )


def schoenberg_kernel(lengths, psi_of_pairs, psi):
    """K[j, k] = psi(|x_j|) + psi(|x_k|) - psi(|x_k^-1 x_j|)"""
    at = psi[lengths]
    return at[:, None] + at[None, :] - psi_of_pairs


def projected_gram(gram):
    """B^T M B for the basis e_i - e_0 of {c : sum c = 0}"""
    size = gram.shape[0]
    basis = np.zeros((size, size - 1))
    basis[0, :] = -1.0
    basis[1:, :] = np.eye(size - 1)
    return basis.T @ gram @ basis


def gram_cnd(rank, radius, f, tol=None, cap=None):
    """Conditional negativity of psi on ball(rank, radius), in kernel and projected form.

    The kernel form is the verdict; the projected form must give the same
    smallest eigenvalue (the kernel has a zero row at the identity, so its
    minimum is min(0, -max eig of the projected Gram)).
    """
    rank = Rank.parse(rank).require_finite("gram_cnd")
    tol = _tolerance(tol)
    if f.values[0] != 0:
        raise BadInput(f"A conditionally negative definite candidate needs psi(e) = 0, got {f.values[0]}")
    values = np.array(_check_depth(f, radius))
    words = ball(rank, radius, cap)
    lengths = np.array([len(word) for word in words])

    gram = values[distance_matrix(words)]
    kernel = schoenberg_kernel(lengths, gram, values)
    scale = scale_of(values)
    kernel_min, vector = min_eigenpair(kernel)

    projected_min = 0.0
    if len(words) > 1:
        projected_min = min(0.0, -float(np.linalg.eigvalsh(projected_gram(gram))[-1]))

    limit = max(tol, AGREEMENT_FLOOR) * scale * len(words)
    if abs(kernel_min - projected_min) > limit:
        raise InternalDisagreement(
            f"Kernel form ({kernel_min:.6g}) and projected form ({projected_min:.6g}) disagree "
            f"on ball(r={rank}, radius={radius})"
        )

    holds = is_psd(kernel_min, tol, scale)
    logger.debug(f"gram_cnd(r={rank}, radius={radius}): dim {len(words)}, kernel min eigenvalue {kernel_min:.3g}")
    return GramReport(
        radius, len(words), kernel_min,
        OracleVerdict.HOLDS if holds else OracleVerdict.VIOLATED,
        None if holds else tuple(vector.tolist()), tol, scale, projected_min
    )


def kernel_report(words, psi, tol=None):
    """Schoenberg kernel test of an arbitrary (not necessarily radial) psi over the given words"""
    tol = _tolerance(tol)
    size = len(words)
    own = [psi(word) for word in words]
    kernel = np.zeros((size, size))
    for j in range(size):
        for k in range(size):
            kernel[j, k] = own[j] + own[k] - psi(multiply(inverse(words[k]), words[j]))

    scale = scale_of(own)
    min_eig, vector = min_eigenpair(kernel) if size else (0.0, np.zeros(0))
    holds = is_psd(min_eig, tol, scale)
    radius = max((len(word) for word in words), default=0)
    return GramReport(
        radius, size, min_eig,
        OracleVerdict.HOLDS if holds else OracleVerdict.VIOLATED,
        None if holds else tuple(vector.tolist()), tol, scale
    )


def smallest_violating_radius(rank, f, max_radius, tol=None, cnd=False):
    """First radius <= max_radius where the oracle finds a violation, or None"""
    test = gram_cnd if cnd else gram_pd
    for radius in range(max_radius + 1):
        if len(f.values) < 2 * radius + 1:
            break
        if not test(rank, radius, f, tol).holds:
            return radius
    return None
