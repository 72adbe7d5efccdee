# File: classify/__init__.py
from .models import DecisionStatus, LinearBoundReport, Verdict
from .decisions import decide_cnd, decide_pd, psi_from_schoenberg, schoenberg
from .bounds import linear_bound_report, rank_factor

__all__ = [
    'DecisionStatus', 'LinearBoundReport', 'Verdict',
    'decide_cnd', 'decide_pd', 'psi_from_schoenberg', 'schoenberg',
    'linear_bound_report', 'rank_factor'
]
