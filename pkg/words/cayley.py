# File: words/cayley.py
"""Spheres and balls of the Cayley tree of F_r with its standard generators."""
from config.config import Config
from utils.exceptions import BadInput, CapExceeded
from utils.logger import get_logger
from words.models import IDENTITY, Letter, Word

logger = get_logger(__name__)


def sphere_size(rank, n):
    """|E_n|: 1 for n = 0, (q+1) q^(n-1) otherwise (exact integer arithmetic)"""
    rank.require_finite("sphere_size")
    if n < 0:
        raise BadInput(f"Sphere index must be >= 0, got {n}")
    if n == 0:
        return 1
    q = rank.q
    return (q + 1) * q ** (n - 1)


def ball_size(rank, radius):
    return sum(sphere_size(rank, n) for n in range(radius + 1))


def _alphabet(rank):
    return [Letter(g, s) for g in range(1, rank.r + 1) for s in (1, -1)]


def _extend(words, alphabet):
    for word in words:
        last = word.letters[-1] if word.letters else None
        for letter in alphabet:
            if last is not None and last.cancels(letter):
                continue
            yield Word(word.letters + (letter,))


def sphere(rank, n, cap=None):
    """Reduced words of length exactly n in (length, lex) order"""
    _check_cap(sphere_size(rank, n), cap)
    alphabet = _alphabet(rank)
    layer = [IDENTITY]
    for _ in range(n):
        layer = list(_extend(layer, alphabet))
    return sorted(layer, key=Word.sort_key)


def ball(rank, radius, cap=None):
    """All reduced words of length <= radius, each once, sorted by (length, lex)"""
    rank.require_finite("ball enumeration")
    if radius < 0:
        raise BadInput(f"Radius must be >= 0, got {radius}")
    _check_cap(ball_size(rank, radius), cap)

    alphabet = _alphabet(rank)
    layer = [IDENTITY]
    words = [IDENTITY]
    for _ in range(radius):
        layer = list(_extend(layer, alphabet))
        words.extend(layer)
    words.sort(key=Word.sort_key)
    logger.debug(f"ball(r={rank}, N={radius}): {len(words)} words")
    return words


def _check_cap(predicted, cap):
    cap = Config.BALL_CAP if cap is None else cap
    if predicted > cap:
        raise CapExceeded(f"Ball of {predicted} words exceeds the cap of {cap}")
