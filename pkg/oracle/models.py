# File: oracle/models.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from utils.scalars import scalar_to_json


class OracleVerdict(Enum):
    HOLDS = 'holds'
    VIOLATED = 'violated'


@dataclass(frozen=True)
class GramReport:
    """Eigenvalue test of a Gram (or Schoenberg kernel) matrix over a finite set of words"""
    radius: int
    dim: int
    min_eig: float
    verdict: OracleVerdict
    witness: Optional[Tuple[float, ...]] = None
    tol: float = 0.0
    scale: float = 1.0
    # projected-form eigenvalue, set by gram_cnd
    projected_min_eig: Optional[float] = None

    @property
    def holds(self):
        return self.verdict is OracleVerdict.HOLDS

    def to_dict(self):
        """Convert report to dictionary"""
        data = {
            'radius': self.radius,
            'dim': self.dim,
            'min_eig': self.min_eig,
            'verdict': self.verdict.value
        }
        if self.witness is not None:
            data['witness'] = list(self.witness)
        if self.projected_min_eig is not None:
            data['projected_min_eig'] = self.projected_min_eig
        return data


@dataclass(frozen=True)
class GrowthRow:
    n: int
    length: int
    value: int


@dataclass(frozen=True)
class NonRadialReport:
    """Kernel test of (psi o rho)(x) = rho(x)^2 plus its growth along powers of the first generator"""
    gram: GramReport
    words: Tuple[str, ...]
    values: Tuple[int, ...]
    growth: Tuple[GrowthRow, ...] = ()
    violations: Dict[object, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def holds(self):
        return self.gram.holds

    def to_dict(self):
        """Convert report to dictionary"""
        return {
            **self.gram.to_dict(),
            'words': list(self.words),
            'values': list(self.values),
            'growth': [{'n': row.n, 'length': row.length, 'value': row.value} for row in self.growth],
            'violations': {str(scalar_to_json(c)): list(ns) for c, ns in self.violations.items()}
        }


@dataclass(frozen=True)
class ConvolutionCheck:
    """One identity between radial value tables, compared entrywise"""
    name: str
    expected: Tuple
    actual: Tuple
    max_error: float
    passed: bool

    def to_dict(self):
        return {
            'name': self.name,
            'expected': [scalar_to_json(v) for v in self.expected],
            'actual': [scalar_to_json(v) for v in self.actual],
            'max_error': self.max_error,
            'passed': self.passed
        }
