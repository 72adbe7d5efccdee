# File: classify/decisions.py
"""Finite-depth decisions for radial functions on free groups.

A radial phi is positive definite iff phi(n) = int phi_s(n) dmu(s) for a
positive measure mu on [-1, 1]; a radial psi with psi(e) = 0 is conditionally
negative definite iff psi(n) = int psi_s(n) dnu(s). Both are decided through
the moments of mu / nu. A failed moment check is a certificate; a passed one
only says the data is consistent up to the given depth.
"""
import math
from fractions import Fraction

from utils.exceptions import BadInput, NumericFailure
from utils.logger import get_logger
from utils.scalars import all_exact, is_exact, to_scalar
from classify.models import DecisionStatus, Verdict
from moments.hausdorff import hausdorff_check
from moments.models import RadialFunction, Role
from moments.transforms import phi_to_moments, psi_to_moments

logger = get_logger(__name__)


def decide_pd(f, tol=None):
    """Positive definiteness of a radial function, through phi_to_moments -> hausdorff_check"""
    scale = f.values[0]
    if scale <= 0:
        raise BadInput(f"A nonzero positive definite function has phi(e) > 0, got {scale}")
    if all_exact(f.values):
        values = tuple(Fraction(v) / scale for v in f.values)
    else:
        values = tuple(v / scale for v in f.values)
    normalized = RadialFunction(f.rank, values, Role.PHI)
    verdict = hausdorff_check(phi_to_moments(normalized), tol)

    status = DecisionStatus.CONSISTENT_PD if verdict.feasible else DecisionStatus.CERTIFIED_NOT
    logger.debug(f"decide_pd(r={f.rank}, depth={f.depth}): {status.value}")
    return Verdict(status, verdict, f.depth, scale)


def decide_cnd(f, tol=None):
    """Conditional negative definiteness of a radial function with psi(e) = 0"""
    if f.values[0] != 0:
        raise BadInput(f"A conditionally negative definite candidate needs psi(e) = 0, got {f.values[0]}")
    verdict = hausdorff_check(psi_to_moments(f), tol)

    status = DecisionStatus.CONSISTENT_CND if verdict.feasible else DecisionStatus.CERTIFIED_NOT
    logger.debug(f"decide_cnd(r={f.rank}, depth={f.depth}): {status.value}")
    mass = f.values[1] if len(f.values) > 1 else None
    return Verdict(status, verdict, f.depth, mass)


def schoenberg(f, t):
    """exp(-t psi) as a phi-role radial function; positive definite whenever psi is CND"""
    t = to_scalar(t)
    if t <= 0:
        raise BadInput(f"Schoenberg parameter t must be > 0, got {t}")
    if f.values[0] != 0:
        raise BadInput(f"schoenberg needs psi(e) = 0, got {f.values[0]}")
    t = float(t)
    try:
        values = tuple(1 if v == 0 else math.exp(-t * float(v)) for v in f.values)
    except OverflowError as e:
        raise NumericFailure(f"exp(-t psi) overflows for t = {t:.6g} and min psi = {min(f.values)}") from e
    return RadialFunction(f.rank, values, Role.PHI)


def psi_from_schoenberg(f, t):
    """Inverse of schoenberg on strictly positive tables: psi = -log(phi)/t"""
    t = to_scalar(t)
    if t <= 0:
        raise BadInput(f"Schoenberg parameter t must be > 0, got {t}")
    if any(v <= 0 for v in f.values):
        raise BadInput("psi_from_schoenberg needs strictly positive values")
    values = tuple(0 if v == 1 and is_exact(v) else -math.log(float(v)) / float(t) for v in f.values)
    return RadialFunction(f.rank, values, Role.PSI)
