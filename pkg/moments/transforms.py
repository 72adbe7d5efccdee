# File: moments/transforms.py
"""Radial value sequences <-> power moments of the representing measure.

phi(n) = int P_n dmu and psi(n) = int Q_n dnu with Q_n = (1 - P_n)/(1 - s).
Both bases are triangular with nonzero leading coefficients, so the moments
follow by forward substitution: exactly for exact input, in floats otherwise.
"""
from fractions import Fraction

from config.config import Config
from utils.exceptions import BadInput, ConditionLoss, NonzeroRemainder
from utils.logger import get_logger
from utils.scalars import all_exact
from moments.models import MomentSequence, RadialFunction, Role
from spherical.polynomials import divide_by_one_minus_s, spherical_basis

logger = get_logger(__name__)


def phi_basis(rank, depth):
    """Rows a_n with phi(n) = sum_k a_{n,k} m_k, n = 0..depth"""
    if not rank.is_finite:
        return [tuple(Fraction(int(k == n)) for k in range(n + 1)) for n in range(depth + 1)]
    return [basis.coeffs for basis in spherical_basis(rank, depth)]


def psi_basis(rank, depth, tol=0):
    """Rows b_n (n = 1..depth) with psi(n) = sum_k b_{n,k} m'_k"""
    if not rank.is_finite:
        return [(Fraction(1),) * n for n in range(1, depth + 1)]
    rows = []
    for n, basis in enumerate(spherical_basis(rank, depth)):
        if n == 0:
            continue
        quotient, remainder = divide_by_one_minus_s(basis.coeffs)
        if abs(remainder) > tol:
            raise NonzeroRemainder(f"P_{n}(1) - 1 = {remainder}; division by (1 - s) is not exact")
        rows.append(quotient.coeffs)
    return rows


def solve_lower(rows, rhs, limit=None):
    """Forward substitution; row i has its pivot at index i.

    Returns (solution, amplification). The amplification is the largest
    sum_k |row_k x_k| relative to max |rhs|; float solves whose amplification
    exceeds ``limit`` have lost too many digits and raise ConditionLoss.
    """
    exact = all_exact(rhs)
    solution = []
    amplification = 1.0
    reference = max((abs(float(v)) for v in rhs), default=0.0)
    for i, row in enumerate(rows):
        if exact:
            acc = Fraction(rhs[i])
            for k in range(i):
                acc -= row[k] * solution[k]
            solution.append(acc / row[i])
            continue

        coeffs = [float(c) for c in row]
        acc = float(rhs[i])
        for k in range(i):
            acc -= coeffs[k] * solution[k]
        solution.append(acc / coeffs[i])
        if reference > 0:
            terms = sum(abs(coeffs[k] * solution[k]) for k in range(i + 1))
            amplification = max(amplification, terms / reference)

    if exact:
        return solution, None

    limit = Config.CONDITION_LIMIT if limit is None else limit
    if amplification > limit:
        raise ConditionLoss(
            f"Triangular solve amplified rounding by {amplification:.3g} (limit {limit:.3g}); "
            f"use the exact backend or a smaller depth"
        )
    residual = max(
        (abs(sum(float(c) * m for c, m in zip(row, solution)) - float(rhs[i])) for i, row in enumerate(rows)),
        default=0.0
    )
    logger.debug(f"float solve: amplification {amplification:.3g}, residual {residual:.3g}")
    return solution, amplification


def phi_to_moments(f, limit=None):
    """Moments m_0..m_N of the measure mu with phi(n) = int P_n dmu"""
    if not f.rank.is_finite:
        return MomentSequence(f.values, None if all_exact(f.values) else 1.0)
    rows = phi_basis(f.rank, f.depth)
    moments, amplification = solve_lower(rows, f.values, limit)
    return MomentSequence(tuple(moments), amplification)


def psi_to_moments(f, limit=None):
    """Moments m'_0..m'_{N-1} of nu with psi(n) = int Q_n dnu; m'_0 = psi(1)"""
    if f.values[0] != 0:
        raise BadInput(f"A conditionally negative definite candidate needs psi(e) = 0, got {f.values[0]}")
    if len(f.values) < 2:
        raise BadInput("psi_to_moments needs the values at lengths 0 and 1 at least")
    rhs = f.values[1:]
    if not f.rank.is_finite:
        moments = [rhs[0]] + [rhs[n] - rhs[n - 1] for n in range(1, len(rhs))]
        return MomentSequence(tuple(moments), None if all_exact(rhs) else 1.0)
    rows = psi_basis(f.rank, f.depth)
    moments, amplification = solve_lower(rows, rhs, limit)
    return MomentSequence(tuple(moments), amplification)


def moments_to_phi(rank, m):
    """Forward map: phi(n) = sum_k a_{n,k} m_k"""
    rows = phi_basis(rank, m.order)
    values = [sum((c * v for c, v in zip(row, m.values)), 0) for row in rows]
    return RadialFunction(rank, tuple(values), Role.PHI)


def moments_to_psi(rank, m):
    """Forward map: psi(0) = 0, psi(n) = sum_k b_{n,k} m'_k"""
    rows = psi_basis(rank, len(m))
    values = [0] + [sum((c * v for c, v in zip(row, m.values)), 0) for row in rows]
    return RadialFunction(rank, tuple(values), Role.PSI)
