from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from repcontain import characters, decision, repn, su2
from repcontain.characters import TorusPoint
from repcontain.errors import DomainError, InconsistencyError
from repcontain.models import RealStatus, WitnessKind
from repcontain.models.params import AnalysisParams
from repcontain.models.verdict import VerdictModel
from tests.helpers import representations, su2 as su2_rep

SMALL = dict(n_max=6, converse_samples=20, catalyst_boxes=3, catalyst_terms=2, threads=1)


@pytest.fixture
def params():
    return AnalysisParams(**SMALL)


def test_main_pair_end_to_end(su2_main_pair, params):
    rho, sigma = su2_main_pair
    verdict = decision.analyze(rho, sigma, params)
    conditions = verdict.conditions
    assert conditions.real.status is RealStatus.CERTIFIED_STRICT
    assert conditions.real.polynomial.coeffs == (1, -1, 2, -1, 1)
    assert conditions.tropical
    assert conditions.dimension.strict
    assert verdict.asymptotic.minimal_n == 3
    assert verdict.catalyst == sigma
    assert [r.witness for r in verdict.converse] == [WitnessKind.EXPONENT, WitnessKind.CATALYST]
    assert all(r.passed for r in verdict.converse)


def test_equal_representations(params):
    rho = su2_rep((1, 1), (2, 1), (3, 1))
    verdict = decision.analyze(rho, rho, params)
    assert verdict.conditions.real.status is RealStatus.VIOLATED_AT
    assert verdict.conditions.real.point == TorusPoint.identity(2)
    assert not verdict.conditions.tropical
    assert verdict.asymptotic is None and verdict.catalyst is None
    assert verdict.converse == []


def test_larger_highest_weight_is_rejected(params):
    rho, sigma = repn.irrep((2,), 2), repn.standard(2) * 2
    conditions = decision.check_conditions(rho, sigma, params)
    assert not conditions.tropical
    assert conditions.real.status is RealStatus.VIOLATED_AT
    point = conditions.real.point
    assert characters.eval_char(rho, point) >= characters.eval_char(sigma, point)
    assert decision.find_asymptotic_exponent(rho, sigma, 6) is None
    assert decision.find_catalyst(rho, sigma, 3, 2) is None


def test_honest_containment():
    rho, sigma = repn.standard(2), repn.trivial(2) + repn.standard(2)
    witness = decision.find_asymptotic_exponent(rho, sigma, 4)
    assert (witness.minimal_n, witness.all_good_up_to_n_max) == (1, True)
    assert decision.telescoping_catalyst(rho, sigma, 1) == repn.trivial(2)
    assert decision.find_catalyst(rho, sigma, 2, 2) == repn.trivial(2)


def test_dimension_obstruction():
    sigma = su2_rep((1, 1), (2, 1), (3, 1))
    rho = sigma + repn.trivial(2)
    assert decision.find_catalyst(rho, sigma, 4, 3) is None
    assert decision.find_asymptotic_exponent(rho, sigma, 4) is None


def test_zero_rho_is_trivially_contained():
    sigma = repn.standard(2)
    assert decision.find_asymptotic_exponent(repn.zero(2), sigma, 3).minimal_n == 1
    assert decision.find_catalyst(repn.zero(2), sigma, 1, 1) == repn.trivial(2)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_telescoping_identity(su2_main_pair, k):
    rho, sigma = su2_main_pair
    eta = decision.telescoping_catalyst(rho, sigma, k)
    left = repn.tensor(rho, eta) + repn.tensor_power(sigma, k)
    right = repn.tensor(sigma, eta) + repn.tensor_power(rho, k)
    assert left == right


def test_telescoping_catalyst_works_from_the_exponent(su2_main_pair):
    rho, sigma = su2_main_pair
    assert decision.is_catalyst(rho, sigma, decision.telescoping_catalyst(rho, sigma, 3))


def test_candidate_order(su2_main_pair):
    rho, sigma = su2_main_pair
    candidates = list(decision.catalyst_candidates(rho, sigma, 2, 2, max_powers=2))
    assert candidates[:3] == [repn.trivial(2), sigma, repn.tensor_power(sigma, 2)]
    assert len(candidates) == len(set(candidates))
    assert all(candidates)


def test_search_is_thread_count_independent(su2_main_pair):
    rho, sigma = su2_main_pair
    found = {decision.find_catalyst(rho, sigma, 3, 2, threads=t) for t in (1, 2, 8)}
    assert found == {sigma}
    models = {
        VerdictModel.from_verdict(2, decision.analyze(rho, sigma, AnalysisParams(**{**SMALL, "threads": t})))
        .model_dump_json()
        for t in (1, 4)
    }
    assert len(models) == 1


def test_converse_rejects_a_false_witness(su2_main_pair):
    rho, sigma = su2_main_pair
    with pytest.raises(InconsistencyError):
        decision.verify_converse(rho, sigma, catalyst=repn.trivial(2), samples=5)
    with pytest.raises(DomainError):
        decision.verify_converse(rho, sigma, samples=5)
    report = decision.verify_converse(rho, sigma, exponent=3, samples=5)
    assert report.passed
    assert [c.name for c in report.checks] == ["witness", "dimension", "wp_containment", "sampled_characters"]


def test_boundary_contact_without_rational_witness(monkeypatch, su2_main_pair):
    def no_witness(g):
        return su2.PositivityCertificate(su2.CertificateStatus.NOT_POSITIVE, 2, None, 1)

    monkeypatch.setattr(su2, "certify_strict_positive_on_ray", no_witness)
    rho, sigma = su2_main_pair
    conditions = decision.check_conditions(rho, sigma, AnalysisParams(**SMALL))
    assert conditions.real.status is RealStatus.BOUNDARY_CONTACT
    assert not conditions.both_hold


def test_bad_sturm_witness_is_an_inconsistency(monkeypatch, su2_main_pair):
    def wrong_witness(g):
        return su2.PositivityCertificate(su2.CertificateStatus.NOT_POSITIVE, 2, Fraction(2), 1)

    monkeypatch.setattr(su2, "certify_strict_positive_on_ray", wrong_witness)
    with pytest.raises(InconsistencyError):
        decision.check_conditions(*su2_main_pair)


def test_input_validation():
    with pytest.raises(DomainError):
        decision.check_conditions(repn.trivial(2), repn.trivial(3))
    with pytest.raises(DomainError):
        decision.check_conditions(repn.zero(2), repn.trivial(2))
    with pytest.raises(DomainError):
        decision.find_asymptotic_exponent(repn.trivial(2), repn.standard(2), 0)
    with pytest.raises(DomainError):
        decision.telescoping_catalyst(repn.trivial(2), repn.standard(2), 0)


@pytest.mark.slow
def test_two_trivials_in_sl3(params):
    rho = repn.trivial(3) * 2
    sigma = repn.trivial(3) + repn.standard(3) + repn.irrep((1, 1), 3)
    verdict = decision.analyze(rho, sigma, params)
    assert verdict.conditions.real.status is RealStatus.NO_VIOLATION_FOUND
    assert verdict.conditions.tropical
    assert verdict.conditions.near_points
    assert verdict.asymptotic.minimal_n == 3
    assert verdict.catalyst == sigma


@settings(max_examples=15)
@given(representations(2, max_size=2, max_terms=2), representations(2, max_size=3, max_terms=3))
def test_contained_exponents_are_closed_under_addition(rho, sigma):
    assume(sigma)
    good = {k for k in range(1, 7) if repn.tensor_power(rho, k) <= repn.tensor_power(sigma, k)}
    for k in good:
        for m in good:
            if k + m <= 6:
                assert k + m in good
    witness = decision.find_asymptotic_exponent(rho, sigma, 6)
    if good:
        assert witness.minimal_n == min(good)
    else:
        assert witness is None
