import pytest
from hypothesis import given, settings

from repcontain import repn, schur
from repcontain.errors import DomainError
from repcontain.partition import partitions_up_to, size
from repcontain.repn import Representation
from tests.helpers import representations, su2


def test_canonical_form_strips_determinant_columns():
    rho = repn.canonicalize(schur.SchurElement(3, {(2, 1, 1): 1, (1,): 2, (1, 1, 1): 1}))
    assert dict(rho.coeffs) == {(1,): 3, (): 1}


def test_representation_rejects_non_canonical_input():
    with pytest.raises(DomainError):
        Representation(schur.SchurElement(2, {(1, 1): 1}))
    with pytest.raises(DomainError):
        repn.trivial(1)


def test_clebsch_gordan():
    s1 = repn.standard(2)
    assert s1 * s1 == repn.from_terms(2, {(2,): 1, (): 1})
    assert s1 ** 3 == repn.from_terms(2, {(3,): 1, (1,): 2})


def test_su2_catalyst_products(su2_main_pair):
    rho, sigma = su2_main_pair
    assert rho * sigma == su2((1, 2), (2, 4), (3, 2), (4, 2))
    assert sigma * sigma == su2((1, 3), (2, 4), (3, 4), (4, 2), (5, 1))
    assert rho * sigma <= sigma * sigma


def test_dimension():
    assert repn.dimension(repn.irrep((2, 1), 3)) == 8
    assert repn.dimension(repn.generic_unit(4)) == 5
    assert repn.dimension(repn.zero(3)) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_weyl_dimension_matches_tableaux(n):
    for lam in partitions_up_to(5, n):
        assert repn.weyl_dimension(lam, n) == schur.ssyt_count(lam, n)


@settings(max_examples=20)
@given(representations(3), representations(3))
def test_dimension_is_a_semiring_map(rho, sigma):
    assert repn.dimension(rho * sigma) == repn.dimension(rho) * repn.dimension(sigma)
    assert repn.dimension(rho + sigma) == repn.dimension(rho) + repn.dimension(sigma)


@settings(max_examples=20)
@given(representations(3, max_size=2), representations(3, max_size=2))
def test_tensor_power_is_multiplicative(rho, sigma):
    assert (rho * sigma) ** 2 == (rho ** 2) * (sigma ** 2)


def test_power_universality_examples():
    assert repn.power_universality_witness(repn.irrep((2,), 2)) == (2, 2)
    assert repn.power_universality_witness(repn.trivial(3)) == (0, 0)
    assert repn.power_universality_witness(repn.generic_unit(3)) == (1, 0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_power_universality_within_bounds(n):
    for lam in partitions_up_to(5, n - 1):
        k_upper, k_lower = repn.power_universality_witness(repn.irrep(lam, n))
        assert k_upper <= size(lam)
        assert k_lower <= n * (lam[0] if lam else 0) - size(lam)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_two_is_below_u_to_the_n(n):
    k_upper, _ = repn.power_universality_witness(repn.trivial(n) * 2)
    assert k_upper <= n


def test_power_universality_rejects_zero():
    with pytest.raises(DomainError):
        repn.power_universality_witness(repn.zero(2))


def test_genericity():
    assert repn.is_generic(repn.generic_unit(3))
    assert not repn.is_generic(repn.standard(3))
    assert not repn.is_generic(repn.trivial(3) + repn.irrep((1, 1), 3))


def test_mismatched_n():
    with pytest.raises(DomainError):
        repn.tensor(repn.trivial(2), repn.trivial(3))


@settings(max_examples=15)
@given(
    representations(3, max_size=2, max_terms=2),
    representations(3, max_size=2, max_terms=2),
    representations(3, max_size=2, max_terms=2),
    representations(3, max_size=2, max_terms=2),
)
def test_containment_is_compatible_with_sum_and_tensor(rho1, extra1, rho2, extra2):
    sigma1, sigma2 = rho1 + extra1, rho2 + extra2
    assert rho1 <= sigma1 and rho2 <= sigma2
    assert rho1 + rho2 <= sigma1 + sigma2
    assert rho1 * rho2 <= sigma1 * sigma2
