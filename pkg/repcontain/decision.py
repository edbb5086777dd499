"""Containment pipeline: strict conditions, then witnesses, then the converse.

Forward direction: if chi_rho < chi_sigma on the SL torus and WP(rho) lies in
the interior of WP(sigma), some catalyst eta gives rho*eta <= sigma*eta, and
for generic sigma rho^k <= sigma^k for all large k. Converse: any such witness
forces both conditions to hold non-strictly.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterator, List, Optional, Sequence, Tuple

from . import characters, polytope, repn, su2
from .characters import TorusPoint
from .errors import InconsistencyError, require, same_n
from .models import RealStatus, WitnessKind
from .models.params import AnalysisParams
from .partition import partitions
from .repn import Representation
from .utils.pool import first_success, ordered_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RealCondition:
    status: RealStatus
    point: Optional[TorusPoint] = None
    certificate: Optional[su2.PositivityCertificate] = None
    polynomial: Optional[su2.IntPolynomial] = None

    @property
    def holds(self) -> bool:
        return self.status in (RealStatus.CERTIFIED_STRICT, RealStatus.NO_VIOLATION_FOUND)


@dataclass(frozen=True)
class DimensionCheck:
    dim_rho: int
    dim_sigma: int

    @property
    def strict(self) -> bool:
        return self.dim_rho < self.dim_sigma


@dataclass(frozen=True)
class Conditions:
    real: RealCondition
    tropical: bool
    dimension: DimensionCheck
    sigma_generic: bool
    near_points: Tuple[TorusPoint, ...] = ()

    @property
    def both_hold(self) -> bool:
        return self.real.holds and self.tropical


@dataclass(frozen=True)
class AsymptoticWitness:
    minimal_n: int
    all_good_up_to_n_max: bool
    checked_up_to: int


@dataclass(frozen=True)
class ConverseCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ConverseReport:
    witness: WitnessKind
    checks: List[ConverseCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass
class Verdict:
    conditions: Conditions
    asymptotic: Optional[AsymptoticWitness] = None
    catalyst: Optional[Representation] = None
    converse: List[ConverseReport] = field(default_factory=list)

    @property
    def theorem_applicable(self) -> bool:
        """Eventual tensor-power containment is only guaranteed for generic sigma."""
        return self.conditions.sigma_generic


def _check_nonzero_pair(rho: Representation, sigma: Representation) -> int:
    n = same_n(rho, sigma)
    require(bool(rho) and bool(sigma), "Both representations must be nonzero")
    return n


def _su2_real_condition(rho: Representation, sigma: Representation) -> RealCondition:
    g = su2.char_diff_polynomial(su2.from_representation(rho), su2.from_representation(sigma))
    cert = su2.certify_strict_positive_on_ray(g)
    if cert.status is su2.CertificateStatus.CERTIFIED:
        return RealCondition(RealStatus.CERTIFIED_STRICT, certificate=cert, polynomial=g)
    if cert.status is su2.CertificateStatus.ZERO_POLYNOMIAL:
        point = TorusPoint.identity(2)
    elif cert.witness is None:
        return RealCondition(RealStatus.BOUNDARY_CONTACT, certificate=cert, polynomial=g)
    else:
        point = TorusPoint((cert.witness, 1 / cert.witness))
    if characters.eval_char(rho, point) < characters.eval_char(sigma, point):
        raise InconsistencyError(
            f"Sturm witness t = {cert.witness} does not violate the character inequality"
        )
    return RealCondition(RealStatus.VIOLATED_AT, point, cert, g)


def check_conditions(
    rho: Representation, sigma: Representation, params: Optional[AnalysisParams] = None
) -> Conditions:
    params = params or AnalysisParams()
    n = _check_nonzero_pair(rho, sigma)
    logger.info("Checking conditions for n = %d", n)

    dims = DimensionCheck(repn.dimension(rho), repn.dimension(sigma))
    tropical = polytope.wp_strict_containment(rho, sigma, params.threads)

    near: List[TorusPoint] = []
    if n == 2:
        real = _su2_real_condition(rho, sigma)
    else:
        point = characters.search_violation(
            rho,
            sigma,
            grid_depth=params.grid_depth,
            descent_iters=params.descent_iters,
            log_box=params.log_box,
            near_points=near,
        )
        if point is None:
            logger.warning("No character violation found; the real condition is not certified")
            real = RealCondition(RealStatus.NO_VIOLATION_FOUND)
        else:
            real = RealCondition(RealStatus.VIOLATED_AT, point)
    logger.info("Real condition %s, tropical condition %s", real.status.value, tropical)
    return Conditions(real, tropical, dims, repn.is_generic(sigma), tuple(near))


def _obstructed(rho: Representation, sigma: Representation, threads: int) -> bool:
    """Necessary conditions for any witness: dim rho <= dim sigma and WP(rho) in WP(sigma)."""
    if repn.dimension(rho) > repn.dimension(sigma):
        logger.info("dim rho > dim sigma: no witness can exist")
        return True
    if not polytope.wp_containment(rho, sigma, threads):
        logger.info("WP(rho) is not inside WP(sigma): no witness can exist")
        return True
    return False


def find_asymptotic_exponent(
    rho: Representation, sigma: Representation, n_max: int, threads: int = 1
) -> Optional[AsymptoticWitness]:
    """Least k <= n_max with rho^k <= sigma^k, and whether every k after it up to n_max works too."""
    same_n(rho, sigma)
    require(n_max >= 1, f"n_max must be at least 1, got {n_max}")
    if not rho:
        return AsymptoticWitness(1, True, n_max)
    if not sigma or _obstructed(rho, sigma, threads):
        return None

    rho_power, sigma_power = repn.trivial(rho.n), repn.trivial(rho.n)
    outcomes = []
    for k in range(1, n_max + 1):
        rho_power = repn.tensor(rho_power, rho)
        sigma_power = repn.tensor(sigma_power, sigma)
        outcomes.append(repn.contains(rho_power, sigma_power))
        logger.debug("k = %d: contained %s", k, outcomes[-1])

    if not any(outcomes):
        return None
    minimal = outcomes.index(True) + 1
    return AsymptoticWitness(minimal, all(outcomes[minimal - 1:]), n_max)


def telescoping_catalyst(rho: Representation, sigma: Representation, k: int) -> Representation:
    """eta = sum_{i<k} rho^i sigma^(k-1-i); rho*eta + sigma^k = sigma*eta + rho^k."""
    require(k >= 1, f"Exponent must be positive, got {k}")
    eta = repn.zero(rho.n)
    for i in range(k):
        eta = eta + repn.tensor(repn.tensor_power(rho, i), repn.tensor_power(sigma, k - 1 - i))
    return eta


def catalyst_candidates(
    rho: Representation,
    sigma: Representation,
    max_boxes: int,
    max_terms: int,
    exponent: Optional[int] = None,
    max_powers: int = 3,
) -> Iterator[Representation]:
    """Candidate catalysts in a fixed order, without repeats."""
    n = rho.n
    seen = set()

    def fresh(eta):
        if eta and eta not in seen:
            seen.add(eta)
            return True
        return False

    powers = [repn.tensor_power(sigma, k) for k in range(max_powers + 1)]
    for eta in powers:
        if fresh(eta):
            yield eta
    partial = powers[0]
    for eta in powers[1:]:
        partial = partial + eta
        if fresh(partial):
            yield partial
    if exponent is not None:
        eta = telescoping_catalyst(rho, sigma, exponent)
        if fresh(eta):
            yield eta

    irreps = [
        repn.irrep(lam, n)
        for total in range(max_boxes + 1)
        for lam in partitions(total, max_length=n - 1)
    ]
    for eta in irreps:
        if fresh(eta):
            yield eta
    for terms in range(2, max_terms + 1):
        for combo in combinations_with_replacement(irreps, terms):
            eta = combo[0]
            for other in combo[1:]:
                eta = eta + other
            if fresh(eta):
                yield eta


def is_catalyst(rho: Representation, sigma: Representation, eta: Representation) -> bool:
    return bool(eta) and repn.contains(repn.tensor(rho, eta), repn.tensor(sigma, eta))


def find_catalyst(
    rho: Representation,
    sigma: Representation,
    max_boxes: int,
    max_terms: int,
    exponent: Optional[int] = None,
    max_powers: int = 3,
    threads: int = 1,
) -> Optional[Representation]:
    """First nonzero eta in candidate order with rho*eta <= sigma*eta."""
    same_n(rho, sigma)
    if not rho:
        return repn.trivial(rho.n)
    if not sigma or _obstructed(rho, sigma, threads):
        return None
    found = first_success(
        lambda eta: is_catalyst(rho, sigma, eta),
        catalyst_candidates(rho, sigma, max_boxes, max_terms, exponent, max_powers),
        threads,
    )
    if found is None:
        logger.warning(
            "No catalyst with at most %d boxes and %d terms", max_boxes, max_terms
        )
        return None
    return found[0]


def verify_converse(
    rho: Representation,
    sigma: Representation,
    catalyst: Optional[Representation] = None,
    exponent: Optional[int] = None,
    extra_points: Sequence[TorusPoint] = (),
    samples: int = 200,
    seed: int = 0,
    threads: int = 1,
) -> ConverseReport:
    """Re-check a witness and the non-strict conditions it forces.

    Any failed check raises InconsistencyError; the returned report is all-pass.
    """
    n = same_n(rho, sigma)
    require((catalyst is None) != (exponent is None), "Pass exactly one of catalyst or exponent")

    if catalyst is not None:
        report = ConverseReport(WitnessKind.CATALYST)
        report.checks.append(ConverseCheck("witness", is_catalyst(rho, sigma, catalyst)))
    else:
        report = ConverseReport(WitnessKind.EXPONENT)
        report.checks.append(ConverseCheck(
            "witness",
            repn.contains(repn.tensor_power(rho, exponent), repn.tensor_power(sigma, exponent)),
            f"k = {exponent}",
        ))

    dims = DimensionCheck(repn.dimension(rho), repn.dimension(sigma))
    report.checks.append(ConverseCheck(
        "dimension", dims.dim_rho <= dims.dim_sigma, f"{dims.dim_rho} <= {dims.dim_sigma}"
    ))
    if rho and sigma:
        report.checks.append(ConverseCheck("wp_containment", polytope.wp_containment(rho, sigma, threads)))

    points = [TorusPoint.identity(n)] + list(extra_points) + characters.torus_sample(n, samples, seed)
    gaps = ordered_map(
        lambda x: characters.eval_char(sigma, x) - characters.eval_char(rho, x), points, threads
    )
    bad = [x for x, gap in zip(points, gaps) if gap < 0]
    report.checks.append(ConverseCheck(
        "sampled_characters",
        not bad,
        f"{len(points)} points" + (f", first failure at {bad[0].format()}" if bad else ""),
    ))

    failed = [c.name for c in report.checks if not c.passed]
    if failed:
        raise InconsistencyError(f"Converse checks failed for a verified witness: {failed}")
    return report


def analyze(
    rho: Representation, sigma: Representation, params: Optional[AnalysisParams] = None
) -> Verdict:
    """Full pipeline: conditions, then witness search and converse checks when both hold."""
    params = params or AnalysisParams()
    verdict = Verdict(check_conditions(rho, sigma, params))
    if not verdict.conditions.both_hold:
        logger.info("Conditions do not both hold; skipping witness search")
        return verdict
    if not verdict.theorem_applicable:
        logger.info("sigma is not generic; eventual tensor-power containment is not guaranteed")

    verdict.asymptotic = find_asymptotic_exponent(rho, sigma, params.n_max, params.threads)
    exponent = verdict.asymptotic.minimal_n if verdict.asymptotic else None
    verdict.catalyst = find_catalyst(
        rho,
        sigma,
        params.catalyst_boxes,
        params.catalyst_terms,
        exponent=exponent,
        max_powers=params.catalyst_powers,
        threads=params.threads,
    )

    converse_args = dict(
        extra_points=verdict.conditions.near_points,
        samples=params.converse_samples,
        seed=params.seed,
        threads=params.threads,
    )
    if exponent is not None:
        verdict.converse.append(verify_converse(rho, sigma, exponent=exponent, **converse_args))
    if verdict.catalyst is not None:
        verdict.converse.append(verify_converse(rho, sigma, catalyst=verdict.catalyst, **converse_args))
    return verdict
