# File: moments/synthesis.py
"""Radial functions from atomic measures: phi = int phi_s dmu, psi = int psi_s dnu."""
from utils.exceptions import BadInput
from moments.models import RadialFunction, Role
from spherical.functions import psi_one, psi_table, spherical_table
from spherical.models import SphericalParams
from words.models import Rank


def _check(measure, depth):
    if depth < 0:
        raise BadInput(f"Depth must be >= 0, got {depth}")
    if not measure.within_support():
        raise BadInput(f"Measure has atoms outside [-1, 1]: nodes {measure.nodes}")


def _accumulate(depth, tables):
    values = [0] * (depth + 1)
    for weight, table in tables:
        for n in range(depth + 1):
            values[n] = values[n] + weight * table[n]
    return values


def synthesize_phi(rank, measure, depth):
    """values[n] = sum_i w_i phi_{s_i}(n); values[0] is the total mass"""
    rank = Rank.parse(rank)
    _check(measure, depth)
    tables = ((a.weight, spherical_table(SphericalParams(rank, a.node), depth)) for a in measure.atoms)
    return RadialFunction(rank, tuple(_accumulate(depth, tables)), Role.PHI)


def synthesize_psi(rank, measure, depth):
    """values[n] = sum_i w_i psi_{s_i}(n), the atom at s = 1 contributing psi_1"""
    rank = Rank.parse(rank)
    _check(measure, depth)

    def table(node):
        if node == 1:
            return [psi_one(rank, n) for n in range(depth + 1)]
        return psi_table(SphericalParams(rank, node), depth)

    tables = ((a.weight, table(a.node)) for a in measure.atoms)
    return RadialFunction(rank, tuple(_accumulate(depth, tables)), Role.PSI)
