# File: spherical/models.py
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from utils.scalars import canonical, scalar_to_json, to_scalar
from words.models import Rank


class ChebyshevKind(Enum):
    T = 'T'
    U = 'U'


@dataclass(frozen=True)
class SphericalParams:
    """Rank and (real) eigenvalue s of a spherical function"""
    rank: Rank
    s: object

    def __post_init__(self):
        object.__setattr__(self, 'rank', Rank.parse(self.rank))
        object.__setattr__(self, 's', to_scalar(self.s))

    def to_dict(self):
        return {'rank': self.rank.to_json(), 's': scalar_to_json(self.s)}


@dataclass(frozen=True)
class PolyCoeffs:
    """Monomial coefficients c_0..c_n (exact rationals)"""
    coeffs: Tuple[Fraction, ...]

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def evaluate(self, x):
        """Horner evaluation; exact for exact x"""
        result = x * 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def to_dict(self):
        return {'coeffs': [scalar_to_json(canonical(c)) for c in self.coeffs]}
