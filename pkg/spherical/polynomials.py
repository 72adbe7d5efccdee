# File: spherical/polynomials.py
"""Chebyshev polynomials and the spherical polynomials P_n of the Cayley tree."""
from fractions import Fraction
from functools import lru_cache

from utils.exceptions import BadInput
from spherical.models import ChebyshevKind, PolyCoeffs


def _check_degree(n):
    if n < 0:
        raise BadInput(f"Polynomial degree must be >= 0, got {n}")


def chebyshev(kind, n, x):
    """T_n(x) or U_n(x) by the three-term recurrence"""
    _check_degree(n)
    kind = ChebyshevKind(kind)
    one = x * 0 + 1
    previous, current = one, (x if kind is ChebyshevKind.T else 2 * x)
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, 2 * x * current - previous
    return current


def chebyshev_derivative(kind, n, x):
    """T'_n(x) or U'_n(x).

    T'_n = n U_{n-1}; U' follows the differentiated recurrence
    U'_{n+1} = 2 U_n + 2x U'_n - U'_{n-1}.
    """
    _check_degree(n)
    kind = ChebyshevKind(kind)
    zero = x * 0
    if kind is ChebyshevKind.T:
        return zero if n == 0 else n * chebyshev(ChebyshevKind.U, n - 1, x)

    u_prev, u_curr = zero + 1, 2 * x
    d_prev, d_curr = zero, zero + 2
    if n == 0:
        return d_prev
    for _ in range(n - 1):
        d_prev, d_curr = d_curr, 2 * u_curr + 2 * x * d_curr - d_prev
        u_prev, u_curr = u_curr, 2 * x * u_curr - u_prev
    return d_curr


def spherical_coeffs(rank, n):
    """Monomial coefficients of P_n from P_{n+1} = ((q+1)/q) x P_n - (1/q) P_{n-1}"""
    _check_degree(n)
    return spherical_basis(rank, n)[n]


@lru_cache(maxsize=64)
def spherical_basis(rank, depth):
    """(P_0, ..., P_depth) as PolyCoeffs, built in a single pass"""
    rank.require_finite("spherical_coeffs")
    _check_degree(depth)
    q = rank.q
    a, b = Fraction(q + 1, q), Fraction(1, q)

    basis = [(Fraction(1),), (Fraction(0), Fraction(1))]
    while len(basis) <= depth:
        previous, current = basis[-2], basis[-1]
        following = [Fraction(0)] + [a * c for c in current]
        for k, c in enumerate(previous):
            following[k] -= b * c
        basis.append(tuple(following))
    return tuple(PolyCoeffs(coeffs) for coeffs in basis[:depth + 1])


def divide_by_one_minus_s(coeffs):
    """Q = (1 - P)/(1 - s) by synthetic division at s = 1.

    Returns (Q coefficients, remainder); the remainder is P(1) - 1.
    """
    # (1 - P)/(1 - s) = (P - 1)/(s - 1)
    p = list(coeffs)
    p[0] -= 1
    degree = len(p) - 1
    if degree == 0:
        return PolyCoeffs(()), p[0]
    quotient = [Fraction(0)] * degree
    carry = Fraction(0)
    for k in range(degree, 0, -1):
        carry = p[k] + carry
        quotient[k - 1] = carry
    remainder = p[0] + carry
    return PolyCoeffs(tuple(quotient)), remainder
