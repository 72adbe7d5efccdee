# File: words/group.py
"""Group law of free groups on reduced words."""
import re

from utils.exceptions import BadInput
from words.models import IDENTITY, Letter, Word

_TOKEN = re.compile(r'^[ab](\d+)(\^(-?1))?$')


def reduce(letters):
    """Freely reduce a letter sequence by a single stack scan"""
    stack = []
    for letter in letters:
        if not isinstance(letter, Letter):
            raise BadInput(f"Expected a Letter, got {letter!r}")
        if stack and stack[-1].cancels(letter):
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def inverse(x):
    return Word(tuple(letter.inverse() for letter in reversed(x.letters)))


def multiply(x, y):
    """Reduced product xy: cancel the common part at the junction, then concatenate"""
    left, right = x.letters, y.letters
    cut = 0
    while cut < min(len(left), len(right)) and left[len(left) - 1 - cut].cancels(right[cut]):
        cut += 1
    return Word(left[:len(left) - cut] + right[cut:])


def power(x, n):
    if n < 0:
        return power(inverse(x), -n)
    result = IDENTITY
    for _ in range(n):
        result = multiply(result, x)
    return result


def common_prefix_length(x, y):
    count = 0
    for left, right in zip(x.letters, y.letters):
        if left != right:
            break
        count += 1
    return count


def distance(x, y):
    """Tree distance |x^-1 y| between two reduced words"""
    return len(x) + len(y) - 2 * common_prefix_length(x, y)


def generator(index, sign=1):
    return Word((Letter(index, sign),))


def parse_word(text):
    """Parse 'a1 a2^-1 a1' (or b<k> tokens, or 'e') and reduce it"""
    text = text.strip()
    if text in ('', 'e'):
        return IDENTITY
    letters = []
    for token in text.replace('*', ' ').split():
        match = _TOKEN.match(token)
        if not match:
            raise BadInput(f"Bad word token {token!r}; expected a<k> or a<k>^-1")
        sign = int(match.group(3)) if match.group(3) else 1
        letters.append(Letter(int(match.group(1)), sign))
    return reduce(letters)


def format_word(x, symbol='a'):
    if x.is_identity():
        return 'e'
    return ' '.join(
        f"{symbol}{letter.generator}" + ('' if letter.sign > 0 else '^-1')
        for letter in x.letters
    )
