# File: classify/bounds.py
from fractions import Fraction

from utils.exceptions import BadInput
from classify.models import LinearBoundReport

SLACK = 1e-10


def rank_factor(rank):
    """a with psi_s(x) <= a |x| for every s in [-1, 1]: r/(r-1) for finite r >= 2, 1 for r = inf"""
    if not rank.is_finite:
        return 1
    if rank.r < 2:
        raise BadInput("The linear bound is a free-group statement; rank 1 (the integers) has psi_1(n) = n^2")
    return Fraction(rank.r, rank.r - 1)


def linear_bound_report(f):
    """Margins c n - psi(n) with c = psi(1) a, for every provided length n"""
    a = rank_factor(f.rank)
    if f.values[0] != 0:
        raise BadInput(f"The linear bound applies to psi with psi(e) = 0, got {f.values[0]}")
    if len(f.values) < 2:
        raise BadInput("The linear bound needs psi at length 1")

    c = f.values[1] * a
    margins = tuple(c * n - v for n, v in enumerate(f.values))
    violations = tuple(
        n for n, v in enumerate(f.values) if v > c * n + SLACK * abs(c) * n
    )
    return LinearBoundReport(c, a, margins, not violations, violations)
