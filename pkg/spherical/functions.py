# File: spherical/functions.py
"""Spherical functions phi_s, the functions psi_s and psi_1, for every rank.

Finite rank r uses q = 2r - 1 and the recurrence of the Laplace eigenfunction;
r = 1 reproduces the classical integer case (phi_s(n) = T_n(s)); infinite rank
uses phi_s(n) = s^n.
"""
from fractions import Fraction

from utils.exceptions import BadInput, NumericFailure
from utils.scalars import is_exact, sqrt_scalar, to_scalar
from spherical.models import ChebyshevKind, SphericalParams
from spherical.polynomials import chebyshev
from words.models import Rank


def _weights(q, s):
    """(q+1)/q and 1/q in the backend of s"""
    if is_exact(s):
        return Fraction(q + 1, q), Fraction(1, q)
    return (q + 1) / q, 1 / q


def _check_depth(n):
    if n < 0:
        raise BadInput(f"Word length must be >= 0, got {n}")


def spherical_table(params, depth):
    """phi_s(0..depth) in one pass of the two-term recurrence"""
    _check_depth(depth)
    rank, s = params.rank, params.s
    one = s * 0 + 1
    values = [one]
    if depth == 0:
        return values
    if not rank.is_finite:
        for _ in range(depth):
            values.append(values[-1] * s)
        return values

    a, b = _weights(rank.q, s)
    values.append(s)
    for _ in range(depth - 1):
        values.append(a * s * values[-1] - b * values[-2])
    return values


def spherical_value(params, n):
    return spherical_table(params, n)[n]


def spherical_closed_form(rank, n, s):
    """Chebyshev form of P_n(s).

    [ 2/(q+1) T_n(x) + (q-1)/(q+1) U_n(x) ] q^(-n/2),  x = (q+1) s / (2 sqrt q).
    Exact for exact s when q is a perfect square.
    """
    rank.require_finite("spherical_closed_form")
    _check_depth(n)
    s = to_scalar(s)
    q = rank.q
    root = sqrt_scalar(q)
    x = (q + 1) / (2 * root) * s
    t_n = chebyshev(ChebyshevKind.T, n, x)
    u_n = chebyshev(ChebyshevKind.U, n, x)
    return (Fraction(2, q + 1) * t_n + Fraction(q - 1, q + 1) * u_n) / root ** n


def psi_table(params, depth):
    """psi_s(0..depth).

    Substituting phi = 1 - (1 - s) psi into the spherical recurrence gives
    psi(n+1) = ((q+1)/q)(1 + s psi(n)) - psi(n-1)/q, free of the 1/(1-s)
    cancellation and valid at s = 1 as well (r = inf: psi(n+1) = 1 + s psi(n)).
    """
    _check_depth(depth)
    rank, s = params.rank, params.s
    zero = s * 0
    values = [zero]
    if depth == 0:
        return values
    values.append(zero + 1)
    if not rank.is_finite:
        for _ in range(depth - 1):
            values.append(1 + s * values[-1])
        return values

    a, b = _weights(rank.q, s)
    for _ in range(depth - 1):
        values.append(a * (1 + s * values[-1]) - b * values[-2])
    return values


def psi_value(params, n):
    """psi_s(n) = (1 - phi_s(n))/(1 - s), and psi_1(n) at s = 1"""
    _check_depth(n)
    if params.s == 1:
        return psi_one(params.rank, n)
    return psi_table(params, n)[n]


def psi_one(rank, n):
    """Closed form of psi_1(n) = P'_n(1).

    q >= 3: n (q+1)/(q-1) - 2q (1 - q^-n)/(q-1)^2;  r = 1: n^2;  r = inf: n.
    """
    _check_depth(n)
    if not rank.is_finite:
        return n
    q = rank.q
    if q == 1:
        return n * n
    return Fraction(n * (q + 1), q - 1) - Fraction(2 * q) * (1 - Fraction(1, q ** n)) / (q - 1) ** 2


def spherical_derivative_at_one(rank, n):
    """P'_n(1) from the differentiated recurrence; independent of psi_one's closed form"""
    _check_depth(n)
    if not rank.is_finite:
        return n
    q = rank.q
    a, b = Fraction(q + 1, q), Fraction(1, q)
    previous, current = Fraction(0), Fraction(1)
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, a * (1 + current) - b * previous
    return current


def s_from_z(rank, z):
    """s = q/(q+1) (q^-z + q^(z-1)); symmetric under z -> 1 - z"""
    rank.require_finite("s_from_z")
    z = to_scalar(z)
    q = rank.q
    if q == 1:
        return z * 0 + 1
    if is_exact(z) and Fraction(z).denominator == 1:
        k = int(z)
        return Fraction(q, q + 1) * (Fraction(q) ** -k + Fraction(q) ** (k - 1))
    z = float(z)
    try:
        return q / (q + 1) * (q ** -z + q ** (z - 1))
    except OverflowError as e:
        raise NumericFailure(f"s(z) overflows a float at q = {q}, z = {z:.6g}") from e


def uniform_convergence_gap(r, n, grid):
    """sup over the grid of |phi_{s,r}(n) - s^n|, with the bound 2(n-1)/(2r-1)"""
    _check_depth(n)
    rank = Rank.finite(r)
    gap = 0.0
    for s in grid:
        finite = spherical_value(SphericalParams(rank, s), n)
        gap = max(gap, abs(float(finite) - float(s) ** n))
    bound = 0.0 if n == 0 else 2 * (n - 1) / (2 * r - 1)
    return gap, bound
