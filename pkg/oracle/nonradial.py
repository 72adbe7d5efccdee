# File: oracle/nonradial.py
"""A conditionally negative definite function on F_inf that is not radial and grows faster than word length.

rho is the homomorphism onto the integers sending the k-th generator to k,
and psi(n) = n^2 is conditionally negative definite on the integers, so the
pullback x -> rho(x)^2 is conditionally negative definite on the free group.
Along powers of the first generator it equals n^2 while the length is n.
"""
from utils.exceptions import BadInput
from utils.logger import get_logger
from oracle.gram import kernel_report
from oracle.models import GrowthRow, NonRadialReport
from words.group import format_word, generator, power

logger = get_logger(__name__)

DEFAULT_CANDIDATES = (1, 2, 3)


def rho(word):
    """Signed sum of generator indices"""
    return sum(letter.sign * letter.generator for letter in word.letters)


def psi_rho(word):
    return rho(word) ** 2


def growth_table(max_power):
    """(n, |b_1^n|, (psi o rho)(b_1^n)) for n = 1..max_power"""
    base = generator(1)
    rows = []
    for n in range(1, max_power + 1):
        word = power(base, n)
        rows.append(GrowthRow(n, len(word), psi_rho(word)))
    return tuple(rows)


def linear_bound_violations(candidates, max_power):
    """For each constant c, the powers n <= max_power with (psi o rho)(b_1^n) > c |b_1^n|"""
    if max_power < 1:
        raise BadInput(f"max_power must be >= 1, got {max_power}")
    table = growth_table(max_power)
    violations = {}
    for c in candidates:
        if c < 0:
            raise BadInput(f"Bound constants must be >= 0, got {c}")
        violations[c] = tuple(row.n for row in table if row.value > c * row.length)
    return violations


def nonradial_cnd_example(words, candidates=DEFAULT_CANDIDATES, max_power=None, tol=None):
    """Kernel test of rho^2 over ``words`` and its linear-bound violations"""
    words = list(words)
    if not words:
        raise BadInput("nonradial_cnd_example needs at least one word")
    candidates = tuple(candidates)
    if max_power is None:
        max_power = 2 * max(candidates, default=1) + 2

    gram = kernel_report(words, psi_rho, tol)
    violations = linear_bound_violations(candidates, max_power)
    logger.debug(f"rho^2 kernel over {len(words)} words: min eigenvalue {gram.min_eig:.3g}")
    return NonRadialReport(
        gram,
        tuple(format_word(word, 'b') for word in words),
        tuple(psi_rho(word) for word in words),
        growth_table(max_power),
        violations
    )
