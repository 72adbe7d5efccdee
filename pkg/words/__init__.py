# File: words/__init__.py
from .models import IDENTITY, Letter, Rank, Word
from .group import (distance, format_word, generator, inverse, multiply,
                    parse_word, power, reduce)
from .cayley import ball, ball_size, sphere, sphere_size

__all__ = [
    'IDENTITY', 'Letter', 'Rank', 'Word',
    'distance', 'format_word', 'generator', 'inverse', 'multiply',
    'parse_word', 'power', 'reduce',
    'ball', 'ball_size', 'sphere', 'sphere_size'
]
