# File: moments/models.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from utils.exceptions import BadInput
from utils.scalars import scalar_to_json, to_scalar
from words.models import Rank


class Role(Enum):
    PHI = 'phi'
    PSI = 'psi'


class VerdictStatus(Enum):
    FEASIBLE = 'Feasible'
    INFEASIBLE = 'Infeasible'
    # Part of the vocabulary only: a finite check never proves representability
    INDETERMINATE = 'Indeterminate'


@dataclass(frozen=True)
class RadialFunction:
    """Radial function on F_r given by its values on word lengths 0..N"""
    rank: Rank
    values: Tuple
    role: Role = Role.PHI

    def __post_init__(self):
        object.__setattr__(self, 'rank', Rank.parse(self.rank))
        object.__setattr__(self, 'role', Role(self.role))
        values = tuple(to_scalar(v) for v in self.values)
        if not values:
            raise BadInput("A radial function needs at least the value at the identity")
        object.__setattr__(self, 'values', values)

    @property
    def depth(self):
        return len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def to_dict(self):
        """Convert radial function to dictionary"""
        return {
            'rank': self.rank.to_json(),
            'role': self.role.value,
            'values': [scalar_to_json(v) for v in self.values]
        }


@dataclass(frozen=True)
class Atom:
    node: object
    weight: object

    def __post_init__(self):
        object.__setattr__(self, 'node', to_scalar(self.node))
        object.__setattr__(self, 'weight', to_scalar(self.weight))
        if self.weight <= 0:
            raise BadInput(f"Atom weight must be > 0, got {self.weight}")


@dataclass(frozen=True)
class AtomicMeasure:
    """Finitely many (node, weight) pairs with distinct nodes and positive weights"""
    atoms: Tuple[Atom, ...] = ()

    def __post_init__(self):
        atoms = tuple(a if isinstance(a, Atom) else Atom(*a) for a in self.atoms)
        nodes = [a.node for a in atoms]
        if len(set(nodes)) != len(nodes):
            raise BadInput("Atom nodes must be pairwise distinct")
        object.__setattr__(self, 'atoms', atoms)

    @classmethod
    def from_pairs(cls, pairs):
        return cls(tuple(Atom(node, weight) for node, weight in pairs))

    @property
    def nodes(self):
        return [a.node for a in self.atoms]

    @property
    def weights(self):
        return [a.weight for a in self.atoms]

    @property
    def total_mass(self):
        return sum(self.weights, 0)

    def within_support(self):
        return all(-1 <= a.node <= 1 for a in self.atoms)

    def power_moments(self, order):
        """MomentSequence of int s^k dmu for k = 0..order"""
        moments = []
        for k in range(order + 1):
            moments.append(sum((a.weight * a.node ** k for a in self.atoms), 0))
        return MomentSequence(tuple(moments))

    def __len__(self):
        return len(self.atoms)

    def to_dict(self):
        """Convert measure to dictionary"""
        return {
            'atoms': [{'s': scalar_to_json(a.node), 'w': scalar_to_json(a.weight)} for a in self.atoms]
        }


@dataclass(frozen=True)
class MomentSequence:
    """Power moments m_0..m_N of a candidate measure on [-1, 1]"""
    values: Tuple
    # Float solves record how much cancellation they went through
    amplification: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(to_scalar(v) for v in self.values))

    @property
    def order(self):
        return len(self.values) - 1

    def __len__(self):
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    def to_dict(self):
        return {
            'moments': [scalar_to_json(v) for v in self.values],
            'amplification': self.amplification
        }


@dataclass(frozen=True)
class MatrixCheck:
    """One tested matrix: its name, size and minimum eigenvalue"""
    name: str
    size: int
    min_eig: float
    passed: bool

    def to_dict(self):
        return {'matrix': self.name, 'size': self.size, 'min_eig': self.min_eig, 'passed': self.passed}


@dataclass(frozen=True)
class MomentVerdict:
    status: VerdictStatus
    checks: Tuple[MatrixCheck, ...] = ()
    witness: Optional[MatrixCheck] = None
    tol: float = 0.0
    scale: float = 1.0
    moments: Optional[MomentSequence] = field(default=None, compare=False)

    @property
    def feasible(self):
        return self.status is VerdictStatus.FEASIBLE

    def to_dict(self):
        """Convert verdict to dictionary"""
        return {
            'status': self.status.value,
            'witness': (
                {'matrix': self.witness.name, 'min_eig': self.witness.min_eig}
                if self.witness else None
            ),
            'floors': {check.name: check.min_eig for check in self.checks},
            'tol': self.tol,
            'scale': self.scale
        }
