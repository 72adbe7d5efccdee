# File: utils/scalars.py
"""Two numeric backends: machine floats and exact rationals.

Exact scalars are ``int`` or ``fractions.Fraction``; anything else that is
real is treated as a float and must be finite. Arithmetic between the two
backends follows Python's rules (an exact value combined with a float yields
a float), so one code path serves both.
"""
import math
import numbers
from fractions import Fraction

from utils.exceptions import BadInput, ExactnessError


def is_exact(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def all_exact(values):
    return all(is_exact(v) for v in values)


def parse_scalar(text):
    """Parse '3', '-1/3', '0.25' or '1e-3'; fractions stay exact, decimals become floats"""
    text = str(text).strip()
    if not text:
        raise BadInput("Empty number")
    try:
        if '/' in text:
            return Fraction(text)
        if any(c in text for c in '.eE') or text.lower() in ('nan', 'inf', '-inf', 'infinity'):
            return to_scalar(float(text))
        return int(text)
    except (ValueError, ZeroDivisionError) as e:
        raise BadInput(f"Not a number: {text!r}") from e


def to_scalar(value, exact=None):
    """Validate a real number and move it to the requested backend.

    ``exact=None`` keeps the backend of the input, ``False`` forces a float,
    ``True`` a Fraction. Floats enter the rational backend as the decimal
    they print as (0.3 -> 3/10), not as their binary expansion.
    """
    if isinstance(value, (bool, complex)):
        raise BadInput(f"Expected a real number, got {value!r}")
    if isinstance(value, str):
        value = parse_scalar(value)
    if is_exact(value):
        return float(value) if exact is False else value
    if not isinstance(value, numbers.Real):
        raise BadInput(f"Expected a real number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise BadInput(f"Non-finite value rejected: {value!r}")
    if exact:
        return Fraction(repr(value))
    return value


def sqrt_scalar(value):
    """Square root, exact when ``value`` is an exact perfect square"""
    if value < 0:
        raise BadInput(f"Square root of negative value {value}")
    if is_exact(value):
        value = Fraction(value)
        num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
        if num * num == value.numerator and den * den == value.denominator:
            return Fraction(num, den)
    return math.sqrt(value)


def require_exact(value, what):
    """Guard used by the rational backend on paths that may turn irrational"""
    if not is_exact(value):
        raise ExactnessError(f"{what} is irrational here; not available with --exact")
    return value


def canonical(value):
    """Integral fractions collapse to int so serialized forms stay stable"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def format_scalar(value):
    """Text form for tables: 'p/q' for rationals, 17 significant digits for floats"""
    value = canonical(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return f"{value:.17g}"


def scalar_to_json(value):
    value = canonical(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return value


def scalar_from_json(value):
    if isinstance(value, str):
        text = value.strip()
        if '/' not in text and any(c in text for c in '.eE'):
            raise BadInput(f"Decimal strings are not accepted, use a JSON number: {value!r}")
        return parse_scalar(text)
    return to_scalar(value)
