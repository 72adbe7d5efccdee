# File: tests/test_moments.py
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from utils.exceptions import BadInput, ConditionLoss, SingularMoments
from moments import (AtomicMeasure, MeasureGenerator, MomentSequence, RadialFunction, Role,
                     VerdictStatus, atoms_from_moments, density_to_atoms, hausdorff_check,
                     moment_matrices, moments_to_phi, moments_to_psi, phi_to_moments,
                     psi_to_moments, solve_lower, synthesize_phi, synthesize_psi)
from spherical import divide_by_one_minus_s, spherical_basis
from words.models import Rank

half = Fraction(1, 2)

exact_measures = st.lists(
    st.tuples(
        st.fractions(min_value=-1, max_value=1, max_denominator=8),
        st.fractions(min_value=Fraction(1, 8), max_value=2, max_denominator=8)
    ),
    min_size=1, max_size=3, unique_by=lambda pair: pair[0]
).map(AtomicMeasure.from_pairs)


def test_phi_to_moments_of_point_mass():
    f = RadialFunction(2, (1, half, 0, Fraction(-1, 6)))
    assert phi_to_moments(f).values == (1, half, Fraction(1, 4), Fraction(1, 8))


def test_psi_to_moments_examples():
    assert psi_to_moments(RadialFunction(2, (0, 1, 2, 3), Role.PSI)).values == (1, half, Fraction(5, 8))
    assert psi_to_moments(RadialFunction(2, (0, 1, 3), Role.PSI)).values == (1, Fraction(5, 4))
    assert psi_to_moments(RadialFunction('inf', (0, 1, 3, 4), Role.PSI)).values == (1, 2, 1)


def test_psi_to_moments_rejects():
    with pytest.raises(BadInput):
        psi_to_moments(RadialFunction(2, (1, 1, 2), Role.PSI))
    with pytest.raises(BadInput):
        psi_to_moments(RadialFunction(2, (0,), Role.PSI))


def test_forward_maps_invert_transforms():
    rank = Rank(3)
    m = MomentSequence((2, Fraction(1, 3), 1, Fraction(-1, 5), Fraction(1, 2)))
    assert phi_to_moments(moments_to_phi(rank, m)).values == m.values
    assert psi_to_moments(moments_to_psi(rank, m)).values == m.values


def test_hausdorff_examples():
    feasible = hausdorff_check((1, half, Fraction(1, 4)))
    assert feasible.status is VerdictStatus.FEASIBLE
    assert feasible.witness is None

    verdict = hausdorff_check((1, 0, 2))
    assert verdict.status is VerdictStatus.INFEASIBLE
    assert verdict.witness.name == 'localizer_square'
    assert verdict.witness.min_eig == pytest.approx(-1.0)

    verdict = hausdorff_check((1, 1.05))
    assert not verdict.feasible
    assert verdict.witness.name == 'localizer_minus'
    assert verdict.witness.min_eig == pytest.approx(-0.05)


def test_hausdorff_edge_cases():
    assert hausdorff_check((0, 0, 0, 0)).feasible
    assert hausdorff_check((1,)).feasible
    assert not hausdorff_check((-1,)).feasible
    with pytest.raises(BadInput):
        hausdorff_check(())
    with pytest.raises(BadInput):
        hausdorff_check((1, 0), tol=-1)


def test_moment_matrix_sizes():
    matrices = moment_matrices(tuple(range(7)))
    assert {name: len(rows) for name, rows in matrices.items()} == {
        'hankel': 4, 'localizer_minus': 3, 'localizer_plus': 3, 'localizer_square': 3
    }
    assert set(moment_matrices((1,))) == {'hankel'}


def test_verdict_to_dict():
    payload = hausdorff_check((1, 0, 2)).to_dict()
    assert payload['status'] == 'Infeasible'
    assert payload['witness']['matrix'] == 'localizer_square'
    assert set(payload['floors']) == {'hankel', 'localizer_minus', 'localizer_plus', 'localizer_square'}


def test_power_moments_and_mass():
    measure = AtomicMeasure.from_pairs([(half, 1), (-1, 3)])
    assert measure.power_moments(3).values == (4, Fraction(-5, 2), Fraction(13, 4), Fraction(-23, 8))
    assert measure.total_mass == 4
    assert measure.within_support()
    assert not AtomicMeasure.from_pairs([(2, 1)]).within_support()


def test_measure_validation():
    with pytest.raises(BadInput):
        AtomicMeasure.from_pairs([(half, 0)])
    with pytest.raises(BadInput):
        AtomicMeasure.from_pairs([(half, 1), (half, 2)])


def test_synthesis_rejects_outside_support():
    with pytest.raises(BadInput):
        synthesize_phi(2, AtomicMeasure.from_pairs([(1.5, 1)]), 3)


@settings(max_examples=30, deadline=None)
@given(exact_measures)
def test_exact_bochner_roundtrip(measure):
    for rank in (Rank(1), Rank(2), Rank(3), Rank.infinite()):
        f = synthesize_phi(rank, measure, 8)
        assert f.values[0] == measure.total_mass
        m = phi_to_moments(f)
        assert m.values == measure.power_moments(8).values
        assert hausdorff_check(m).feasible


@settings(max_examples=30, deadline=None)
@given(exact_measures)
def test_exact_levy_khinchin_roundtrip(measure):
    for rank in (Rank(1), Rank(2), Rank(3), Rank.infinite()):
        f = synthesize_psi(rank, measure, 8)
        assert f.values[0] == 0
        assert f.values[1] == measure.total_mass
        m = psi_to_moments(f)
        assert m.values == measure.power_moments(7).values
        assert hausdorff_check(m).feasible


@pytest.mark.parametrize("rank", [Rank(1), Rank(2), Rank(3), Rank.infinite()], ids=str)
def test_float_bochner_roundtrip(rank, measure_corpus):
    for measure in measure_corpus:
        f = synthesize_phi(rank, measure, 12)
        m = phi_to_moments(f)
        expected = measure.power_moments(12).values
        np.testing.assert_allclose(m.values, expected, rtol=0, atol=1e-9 * measure.total_mass)
        assert hausdorff_check(m).feasible


@pytest.mark.parametrize("rank", [Rank(1), Rank(2), Rank(3), Rank.infinite()], ids=str)
def test_float_levy_khinchin_roundtrip(rank, measure_corpus):
    for measure in measure_corpus:
        f = synthesize_psi(rank, measure, 12)
        m = psi_to_moments(f)
        assert m.values[0] == f.values[1]
        assert m.values[0] == pytest.approx(measure.total_mass)
        expected = measure.power_moments(11).values
        np.testing.assert_allclose(m.values, expected, rtol=0, atol=1e-9 * measure.total_mass)
        assert hausdorff_check(m).feasible


def test_exact_atoms():
    measure = atoms_from_moments((1, half, Fraction(1, 4), Fraction(1, 8)), 1)
    assert measure.nodes == [half]
    assert measure.weights == [1]

    measure = atoms_from_moments(AtomicMeasure.from_pairs([(-half, 1), (half, 3)]).power_moments(3), 2)
    assert measure.nodes == [-half, half]
    assert measure.weights == [1, 3]


def test_singular_moments():
    with pytest.raises(SingularMoments):
        atoms_from_moments((1, half, Fraction(1, 4), Fraction(1, 8)), 2)
    with pytest.raises(BadInput):
        atoms_from_moments((1, half, Fraction(1, 4)), 2)


@pytest.mark.parametrize("rank", [Rank(2), Rank(3), Rank.infinite()], ids=str)
def test_atom_recovery(rank, separated_corpus):
    for measure in separated_corpus:
        m = phi_to_moments(synthesize_phi(rank, measure, 12))
        recovered = atoms_from_moments(m, len(measure))
        np.testing.assert_allclose(recovered.nodes, measure.nodes, atol=1e-6)
        np.testing.assert_allclose(recovered.weights, measure.weights, atol=1e-6)


def test_golub_welsch_three_nodes():
    measure = AtomicMeasure.from_pairs([(-0.5, 0.2), (0.1, 0.5), (0.8, 0.3)])
    recovered = atoms_from_moments(measure.power_moments(5), 3)
    np.testing.assert_allclose(recovered.nodes, [-0.5, 0.1, 0.8], atol=1e-10)
    np.testing.assert_allclose(recovered.weights, [0.2, 0.5, 0.3], atol=1e-10)


def test_density_to_atoms():
    measure = density_to_atoms(lambda s: 1.0, 8)
    assert measure.total_mass == pytest.approx(2.0)
    assert measure.power_moments(2).values[2] == pytest.approx(2.0 / 3.0)
    assert len(density_to_atoms(lambda s: max(s, 0.0), 9)) < 9
    with pytest.raises(BadInput):
        density_to_atoms(lambda s: s, 4)


def test_solve_lower_condition_limit():
    rows = [(1e-7,), (1.0, 1.0)]
    with pytest.raises(ConditionLoss):
        solve_lower(rows, [1.0, 1.0])
    _, amplification = solve_lower(rows, [1.0, 1.0], limit=1e8)
    assert amplification == pytest.approx(2e7)
    solution, amplification = solve_lower([(1,), (1, 2)], [Fraction(1), Fraction(3)])
    assert solution == [1, 1]
    assert amplification is None


def test_measure_generator_is_seeded():
    first = MeasureGenerator(seed=3).take(5)
    second = MeasureGenerator(seed=3).take(5)
    assert first == second
    for measure in first:
        assert 1 <= len(measure) <= 4
        assert measure.within_support()
        assert all(0.05 <= w <= 1.0 for w in measure.weights)


def test_radial_function_to_dict():
    f = RadialFunction('infinity', (0, half, 2.5), Role.PSI)
    assert f.to_dict() == {'rank': 'infinity', 'role': 'psi', 'values': [0, '1/2', 2.5]}
    with pytest.raises(BadInput):
        RadialFunction(2, ())


@pytest.mark.parametrize("r", [1, 2, 3, 5])
def test_quotient_remainder_vanishes(r):
    for p in spherical_basis(Rank(r), 30)[1:]:
        _, remainder = divide_by_one_minus_s(p.coeffs)
        assert remainder == 0


@pytest.mark.parametrize("node", [Fraction(13, 10), 1.3, -1.3])
def test_point_mass_outside_interval_is_infeasible(node):
    m = AtomicMeasure.from_pairs([(node, 1)]).power_moments(6)
    verdict = hausdorff_check(m)
    assert verdict.status is VerdictStatus.INFEASIBLE
    assert verdict.witness.name.startswith('localizer')


def test_hausdorff_hankel_witness():
    assert hausdorff_check((1, 0, 1)).feasible
    verdict = hausdorff_check((1, 1, half))
    assert not verdict.feasible
    assert verdict.witness.name == 'hankel'


def test_exact_atoms_small_examples():
    measure = atoms_from_moments((1, 0, 1, 0), 2)
    assert measure.nodes == [-1, 1]
    assert measure.weights == [half, half]

    measure = atoms_from_moments((2, 0), 1)
    assert measure.nodes == [0]
    assert measure.weights == [2]


def test_golub_welsch_four_nodes():
    nodes, weights = [-0.9, -0.3, 0.4, 0.95], [0.1, 0.4, 0.3, 0.2]
    measure = AtomicMeasure.from_pairs(zip(nodes, weights))
    recovered = atoms_from_moments(measure.power_moments(7), 4)
    np.testing.assert_allclose(recovered.nodes, nodes, atol=1e-8)
    np.testing.assert_allclose(recovered.weights, weights, atol=1e-8)
