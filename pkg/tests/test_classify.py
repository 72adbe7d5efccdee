# File: tests/test_classify.py
import math
from fractions import Fraction

import pytest

from utils.exceptions import BadInput, NumericFailure
from classify import (DecisionStatus, decide_cnd, decide_pd, linear_bound_report,
                      psi_from_schoenberg, rank_factor, schoenberg)
from moments import AtomicMeasure, RadialFunction, Role, synthesize_phi, synthesize_psi
from spherical import SphericalParams, psi_one, spherical_table
from words.models import Rank

half = Fraction(1, 2)


def psi(rank, values):
    return RadialFunction(rank, values, Role.PSI)


def test_decide_pd_examples():
    verdict = decide_pd(RadialFunction(2, (1, half, 0, Fraction(-1, 6))))
    assert verdict.status is DecisionStatus.CONSISTENT_PD
    assert verdict.depth == 3
    assert verdict.moments.values == (1, half, Fraction(1, 4), Fraction(1, 8))

    verdict = decide_pd(RadialFunction(2, (1, 1.05, 1, 1)))
    assert verdict.status is DecisionStatus.CERTIFIED_NOT
    assert verdict.moment_verdict.witness is not None


def test_decide_pd_constant_one(any_rank):
    assert decide_pd(RadialFunction(any_rank, (1, 1, 1, 1))).status is DecisionStatus.CONSISTENT_PD


def test_decide_pd_rejects_nonpositive_identity_value():
    with pytest.raises(BadInput):
        decide_pd(RadialFunction(2, (0, 1, 1)))
    with pytest.raises(BadInput):
        decide_pd(RadialFunction(2, (-1, 0, 0)))


@pytest.mark.parametrize("values", [
    (1, half, 0, Fraction(-1, 6)),
    (1, 1.05, 1, 1),
    (1, -0.2, 0.4, 0.1, 0.3),
    (2.5, 1.0, 0.5, 0.25)
])
def test_decide_pd_is_scale_covariant(values):
    f = RadialFunction(3, values)
    status = decide_pd(f).status
    for scale in (0.01, 3, 250):
        scaled = RadialFunction(3, tuple(scale * v for v in values))
        assert decide_pd(scaled).status is status


def test_decide_pd_records_mass():
    verdict = decide_pd(RadialFunction(2, (4, 2, 0)))
    assert verdict.mass == 4
    assert verdict.to_dict()['mass'] == 4
    assert verdict.to_dict()['status'] == 'ConsistentPD'


def test_decide_cnd_examples(any_rank):
    assert decide_cnd(psi(2, (0, 1, 2, 3))).status is DecisionStatus.CONSISTENT_CND
    verdict = decide_cnd(psi(2, (0, 1, 3)))
    assert verdict.certified_not
    assert verdict.moment_verdict.witness.name == 'localizer_minus'
    assert decide_cnd(psi(any_rank, (0, 0, 0, 0))).status is DecisionStatus.CONSISTENT_CND


def test_decide_cnd_rejects_nonzero_identity_value():
    with pytest.raises(BadInput):
        decide_cnd(psi(2, (1, 1, 2)))


@pytest.mark.parametrize("rank", [Rank(1), Rank(2), Rank(3), Rank.infinite()], ids=str)
def test_synthesized_corpus_is_consistent(rank, measure_corpus):
    for measure in measure_corpus:
        assert decide_pd(synthesize_phi(rank, measure, 12)).status is DecisionStatus.CONSISTENT_PD
        assert decide_cnd(synthesize_psi(rank, measure, 12)).status is DecisionStatus.CONSISTENT_CND


def test_schoenberg_haagerup_function():
    out = schoenberg(psi('inf', (0, 1, 2, 3)), math.log(2))
    assert out.role is Role.PHI
    assert out.values == pytest.approx((1, 0.5, 0.25, 0.125), abs=1e-15)


def test_schoenberg_rejects():
    with pytest.raises(BadInput):
        schoenberg(psi(2, (0, 1, 2)), 0)
    with pytest.raises(BadInput):
        schoenberg(psi(2, (0, 1, 2)), -1.0)
    with pytest.raises(BadInput):
        schoenberg(psi(2, (1, 1, 2)), 1.0)


def test_schoenberg_large_t():
    out = schoenberg(psi('inf', (0, 0.5, 1.0)), 800)
    assert out.values[0] == 1
    assert out.values[1] == pytest.approx(math.exp(-400), rel=1e-12)
    assert out.values[1] > 0

    out = schoenberg(psi(2, (0, 1, -0.5)), 800)
    assert out.values[2] == pytest.approx(math.exp(400), rel=1e-12)

    with pytest.raises(NumericFailure):
        schoenberg(psi(2, (0, 1, -1)), 800)


def test_schoenberg_of_point_mass():
    f = synthesize_psi(2, AtomicMeasure.from_pairs([(half, 1)]), 8)
    out = schoenberg(f, 0.7)
    assert out.values[0] == 1
    assert decide_pd(out).status is DecisionStatus.CONSISTENT_PD


@pytest.mark.parametrize("t", [0.1, 1, 10])
def test_schoenberg_corpus(t, measure_corpus):
    for i, measure in enumerate(measure_corpus[:50]):
        rank = Rank(2 + i % 2)
        out = schoenberg(synthesize_psi(rank, measure, 8), t)
        assert decide_pd(out).status is DecisionStatus.CONSISTENT_PD


def test_psi_from_schoenberg_inverts():
    f = synthesize_psi(3, AtomicMeasure.from_pairs([(0.3, 0.5), (-0.6, 1.2)]), 6)
    back = psi_from_schoenberg(schoenberg(f, 0.4), 0.4)
    assert back.role is Role.PSI
    assert back.values == pytest.approx(f.values, abs=1e-12)
    with pytest.raises(BadInput):
        psi_from_schoenberg(RadialFunction(2, (1, 0, 0.5)), 1.0)


def test_rank_factor():
    assert rank_factor(Rank(2)) == 2
    assert rank_factor(Rank(3)) == Fraction(3, 2)
    assert rank_factor(Rank.infinite()) == 1
    with pytest.raises(BadInput):
        rank_factor(Rank(1))


def test_linear_bound_examples():
    rank = Rank(2)
    report = linear_bound_report(psi(rank, tuple(psi_one(rank, n) for n in range(6))))
    assert report.c == 2
    assert report.a == 2
    assert report.holds
    assert all(margin > 0 for margin in report.margins[1:])

    report = linear_bound_report(psi('inf', (0, 1, 2, 3, 4)))
    assert report.c == 1
    assert report.holds
    assert all(margin == 0 for margin in report.margins)

    report = linear_bound_report(psi(2, (0, 1, 3)))
    assert report.holds
    assert report.margins[2] == 1


def test_linear_bound_violation_reported():
    report = linear_bound_report(psi(2, (0, 1, 5)))
    assert not report.holds
    assert report.violations == (2,)
    assert report.to_dict()['holds'] is False


def test_linear_bound_rejects():
    with pytest.raises(BadInput):
        linear_bound_report(psi(1, (0, 1, 4)))
    with pytest.raises(BadInput):
        linear_bound_report(psi(2, (1, 1, 2)))
    with pytest.raises(BadInput):
        linear_bound_report(psi(2, (0,)))


@pytest.mark.parametrize("r", [2, 3, 5])
def test_linear_bound_on_corpus(r, measure_corpus):
    rank = Rank(r)
    a = float(rank_factor(rank))
    for measure in measure_corpus[:60]:
        f = synthesize_psi(rank, measure, 50)
        assert linear_bound_report(f).holds
        for n, value in enumerate(f.values):
            assert value <= f.values[1] * a * n + 1e-9


def test_linear_bound_equality_at_infinite_rank():
    rank = Rank.infinite()
    assert [psi_one(rank, n) for n in range(51)] == list(range(51))
    assert spherical_table(SphericalParams(rank, 1), 5) == [1] * 6
