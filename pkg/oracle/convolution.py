# File: oracle/convolution.py
"""Literal convolution of radial functions over a Cayley ball.

(f * g)(x) = sum_y f(y) g(y^-1 x). For radial f and g the result is radial
and only its value on each sphere is returned. mu_n is the normalized
indicator of the sphere E_n, and the Laplace operator L is left convolution
by mu_1.
"""
from fractions import Fraction

from config.config import Config
from utils.exceptions import BadInput, InsufficientRadius, NotRadial
from utils.linalg import scale_of
from utils.logger import get_logger
from utils.scalars import all_exact, canonical, to_scalar
from words.cayley import ball, sphere_size
from words.group import distance
from words.models import Rank

logger = get_logger(__name__)


def sphere_measure(rank, n):
    """Value table of mu_n: 1/|E_n| at length n, zero below (mu_0 = delta_e)"""
    rank = Rank.parse(rank)
    if n < 0:
        raise BadInput(f"Sphere index must be >= 0, got {n}")
    return tuple([0] * n + [Fraction(1, sphere_size(rank, n))])


def support_radius(values):
    """Largest length carrying a nonzero value (0 for the zero table)"""
    nonzero = [n for n, v in enumerate(values) if v != 0]
    return nonzero[-1] if nonzero else 0


def _table(values):
    values = tuple(to_scalar(v) for v in values)
    if not values:
        raise BadInput("Empty value table")
    return values


def _convolve(rank, f, g, out_radius, cap=None):
    """Radial table of f * g on lengths 0..out_radius; g is zero beyond its table"""
    inner = support_radius(f)
    sources = [(y, f[len(y)]) for y in ball(rank, inner, cap) if f[len(y)] != 0]
    targets = ball(rank, out_radius, cap)

    zero = 0 if all_exact(f) and all_exact(g) else 0.0
    classes = [[] for _ in range(out_radius + 1)]
    for x in targets:
        total = zero
        for y, weight in sources:
            d = distance(y, x)
            if d < len(g):
                total = total + weight * g[d]
        classes[len(x)].append(total)

    scale = scale_of(f + g)
    tol = Config.RADIAL_TOLERANCE * scale
    table = []
    for n, entries in enumerate(classes):
        spread = max(abs(float(v - entries[0])) for v in entries)
        if spread > tol:
            raise NotRadial(f"Convolution is not constant on the sphere of radius {n} (spread {spread:.3g})")
        table.append(canonical(entries[0]))
    return tuple(table)


def radial_convolve(rank, radius, f, g, cap=None):
    """f * g as a radial value table on lengths 0..radius"""
    rank = Rank.parse(rank).require_finite("radial_convolve")
    f, g = _table(f), _table(g)
    if radius < 0:
        raise BadInput(f"Radius must be >= 0, got {radius}")
    needed = support_radius(f) + support_radius(g)
    if needed > radius:
        raise InsufficientRadius(
            f"Supports of radius {support_radius(f)} and {support_radius(g)} need a ball of radius {needed}, got {radius}"
        )
    table = _convolve(rank, f, g, radius, cap)
    logger.debug(f"radial_convolve(r={rank}, radius={radius}) -> {len(table)} values")
    return table


def laplacian(rank, radius, g, cap=None):
    """(L g)(n) = (mu_1 * g)(n) for n <= radius - 1, from g on lengths 0..radius"""
    rank = Rank.parse(rank).require_finite("laplacian")
    g = _table(g)
    if radius < 1:
        raise BadInput(f"The Laplace operator needs radius >= 1, got {radius}")
    if len(g) < radius + 1:
        raise InsufficientRadius(f"laplacian on radius {radius} needs {radius + 1} values, got {len(g)}")
    return _convolve(rank, sphere_measure(rank, 1), g[:radius + 1], radius - 1, cap)


def sphere_recurrence(rank, n):
    """mu_1 * mu_n = 1/(q+1) mu_{n-1} + q/(q+1) mu_{n+1} (n >= 1) as a value table on lengths 0..n+1"""
    rank = Rank.parse(rank).require_finite("sphere_recurrence")
    if n < 1:
        raise BadInput(f"sphere_recurrence needs n >= 1, got {n}")
    q = rank.q
    table = [Fraction(0)] * (n + 2)
    table[n - 1] += Fraction(1, q + 1) * sphere_measure(rank, n - 1)[n - 1]
    table[n + 1] += Fraction(q, q + 1) * sphere_measure(rank, n + 1)[n + 1]
    return tuple(canonical(v) for v in table)
