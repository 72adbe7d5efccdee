# File: words/models.py
from dataclasses import dataclass
from typing import Optional, Tuple

from utils.exceptions import BadInput


@dataclass(frozen=True, order=True)
class Letter:
    """A generator or its inverse: a<generator>^sign"""
    generator: int
    sign: int = 1

    def __post_init__(self):
        if not isinstance(self.generator, int) or self.generator < 1:
            raise BadInput(f"Generator index must be a positive integer, got {self.generator!r}")
        if self.sign not in (1, -1):
            raise BadInput(f"Letter sign must be +1 or -1, got {self.sign!r}")

    def inverse(self):
        return Letter(self.generator, -self.sign)

    def cancels(self, other):
        return self.generator == other.generator and self.sign == -other.sign

    def sort_key(self):
        # a1 < a1^-1 < a2 < a2^-1 < ...
        return (self.generator, 0 if self.sign > 0 else 1)

    def __str__(self):
        return f"a{self.generator}" if self.sign > 0 else f"a{self.generator}^-1"


@dataclass(frozen=True)
class Word:
    """Reduced word in a free group; len(word) is the word length |x|"""
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, 'letters', letters)
        for left, right in zip(letters, letters[1:]):
            if left.cancels(right):
                raise BadInput(f"Word is not reduced: {left}{right} cancels")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def length(self):
        return len(self.letters)

    def is_identity(self):
        return not self.letters

    def sort_key(self):
        return (len(self.letters), tuple(letter.sort_key() for letter in self.letters))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.letters:
            return 'e'
        return ' '.join(str(letter) for letter in self.letters)

    def __repr__(self):
        return f"<Word {self}>"


IDENTITY = Word()


@dataclass(frozen=True)
class Rank:
    """Number of free generators: finite r >= 1 (q = 2r - 1) or infinite (r is None)"""
    r: Optional[int] = None

    def __post_init__(self):
        if self.r is not None and (isinstance(self.r, bool) or not isinstance(self.r, int) or self.r < 1):
            raise BadInput(f"Rank must be an integer >= 1 or infinite, got {self.r!r}")

    @classmethod
    def finite(cls, r):
        return cls(r)

    @classmethod
    def infinite(cls):
        return cls(None)

    @classmethod
    def parse(cls, value):
        """Accept 2, '2', 'inf', 'infinity' (the JSON and CLI forms)"""
        if isinstance(value, Rank):
            return value
        if isinstance(value, str):
            text = value.strip().lower()
            if text in ('inf', 'infinity', '∞'):
                return cls.infinite()
            try:
                return cls(int(text))
            except ValueError as e:
                raise BadInput(f"Rank must be an integer or 'infinity', got {value!r}") from e
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value)
        raise BadInput(f"Rank must be an integer or 'infinity', got {value!r}")

    @property
    def is_finite(self):
        return self.r is not None

    @property
    def q(self):
        if self.r is None:
            raise BadInput("q = 2r - 1 is undefined for infinite rank")
        return 2 * self.r - 1

    def require_finite(self, what):
        if self.r is None:
            raise BadInput(f"{what} requires a finite rank")
        return self

    def to_json(self):
        return self.r if self.r is not None else 'infinity'

    def __str__(self):
        return str(self.r) if self.r is not None else 'inf'
