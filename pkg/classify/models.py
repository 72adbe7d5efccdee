# File: classify/models.py
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from utils.scalars import scalar_to_json
from moments.models import MomentVerdict


class DecisionStatus(Enum):
    CONSISTENT_PD = 'ConsistentPD'
    CONSISTENT_CND = 'ConsistentCND'
    CERTIFIED_NOT = 'CertifiedNot'


@dataclass(frozen=True)
class Verdict:
    """Outcome of a positive / conditionally negative definiteness decision at finite depth"""
    status: DecisionStatus
    moment_verdict: MomentVerdict
    depth: int
    # phi(e) for decide_pd (the mass of mu); psi at length one for decide_cnd (the mass of nu)
    mass: Optional[object] = None

    @property
    def certified_not(self):
        return self.status is DecisionStatus.CERTIFIED_NOT

    @property
    def moments(self):
        return self.moment_verdict.moments

    def to_dict(self):
        """Convert verdict to dictionary"""
        return {
            'status': self.status.value,
            'depth': self.depth,
            'mass': scalar_to_json(self.mass) if self.mass is not None else None,
            'moments': self.moments.to_dict()['moments'] if self.moments is not None else None,
            'moment_verdict': self.moment_verdict.to_dict()
        }


@dataclass(frozen=True)
class LinearBoundReport:
    """psi(n) <= c n with c = psi(1) a, checked on the provided lengths"""
    c: object
    a: object
    margins: Tuple
    holds: bool
    violations: Tuple[int, ...] = ()

    def to_dict(self):
        """Convert report to dictionary"""
        return {
            'c': scalar_to_json(self.c),
            'a': scalar_to_json(self.a),
            'margins': [scalar_to_json(m) for m in self.margins],
            'holds': self.holds,
            'violations': list(self.violations)
        }
