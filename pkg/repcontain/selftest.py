"""Oracle cross-checks run by `repcontain selftest`.

Each check compares a fast path against an independent slow one. The LR
check looks `schur.lr_coefficient` up at call time so a patched
implementation is the one under test.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from . import config, decision, polytope, repn, schur, su2, tropical
from .errors import RepContainError
from .models.params import AnalysisParams
from .partition import partitions, partitions_up_to, size
from .storage import load_corpus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SelftestCheck:
    name: str
    passed: bool
    skipped: bool = False
    detail: str = ""


@dataclass(frozen=True)
class Sizes:
    lr_n: int
    lr_boxes: int
    trop_n: int
    trop_boxes: int
    lp_n: int
    lp_instances: int
    sturm_polys: int
    sturm_degree: int
    dim_n: int
    dim_boxes: int


FULL = Sizes(4, 5, 4, 6, 4, 500, 1000, 12, 5, 6)
QUICK = Sizes(3, 3, 3, 4, 3, 40, 100, 8, 4, 4)

CheckResult = Tuple[bool, str]


def check_lr_products(sizes: Sizes) -> CheckResult:
    checked = 0
    for n in range(1, sizes.lr_n + 1):
        shapes = list(partitions_up_to(sizes.lr_boxes, n))
        expansions = {lam: schur.monomial_expansion(schur.basis(lam, n)) for lam in shapes}
        for mu in shapes:
            for nu in shapes:
                oracle = schur.decompose(expansions[mu] * expansions[nu])
                for lam in partitions(size(mu) + size(nu), max_length=n):
                    got = schur.lr_coefficient(lam, mu, nu)
                    if got != oracle[lam]:
                        return False, (
                            f"c^{list(lam)}_{list(mu)},{list(nu)} = {got}, "
                            f"monomial product gives {oracle[lam]} (n = {n})"
                        )
                    checked += 1
    return True, f"{checked} coefficients"


def check_tropical_closed_form(sizes: Sizes, rng: random.Random) -> CheckResult:
    checked = 0
    for n in range(1, sizes.trop_n + 1):
        directions = [
            tropical.Direction(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)))
            for _ in range(4)
        ]
        for lam in partitions_up_to(sizes.trop_boxes, n):
            for y in directions:
                closed = tropical.trop_eval_schur(lam, y)
                oracle = tropical.support_max(schur.basis(lam, n), y)
                if closed != oracle:
                    return False, f"psi_{list(y.y)}(s_{list(lam)}) = {closed}, support max {oracle}"
                checked += 1
    return True, f"{checked} evaluations"


def _random_membership_instance(n: int, rng: random.Random):
    lam = sorted((rng.randint(0, 4) for _ in range(n)), reverse=True)
    generator = polytope.project(tuple(p for p in lam if p), n)
    if rng.random() < 0.3:
        shuffled = list(lam)
        rng.shuffle(shuffled)
        v = shuffled
    else:
        v = [rng.randint(0, max(lam[0], 1)) for _ in range(n)]
    mean = Fraction(sum(v), n)
    return generator, tuple(Fraction(x) - mean for x in v)


def check_lp_majorization(sizes: Sizes, rng: random.Random) -> CheckResult:
    checked = 0
    for n in range(2, sizes.lp_n + 1):
        for _ in range(sizes.lp_instances):
            generator, p = _random_membership_instance(n, rng)
            by_lp = polytope.lp_relint_membership(p, polytope.from_generators(n, [generator]))
            oracle = polytope.majorization_membership(p, generator)
            if (by_lp.inside_relint, by_lp.inside_closed) != (oracle.inside_relint, oracle.inside_closed):
                return False, f"point {p} vs orbit of {generator}: LP {by_lp}, majorization {oracle}"
            checked += 1
    return True, f"{checked} instances"


def check_sturm_sampling(sizes: Sizes, rng: random.Random) -> CheckResult:
    for _ in range(sizes.sturm_polys):
        coeffs = [rng.randint(-5, 5) for _ in range(rng.randint(1, sizes.sturm_degree + 1))]
        if rng.random() < 0.5:
            coeffs[0] += 20
        if coeffs[-1] == 0:
            coeffs[-1] = 1
        g = su2.IntPolynomial(tuple(coeffs))
        cert = su2.certify_strict_positive_on_ray(g)
        top = su2.cauchy_bound(g) + 1 if not g.is_zero else Fraction(2)
        samples = [1 + (top - 1) * Fraction(i, 400) for i in range(401)]
        sampled_bad = next((t for t in samples if g(t) <= 0), None)
        if cert.status is su2.CertificateStatus.CERTIFIED and sampled_bad is not None:
            return False, f"{list(coeffs)} certified but g({sampled_bad}) <= 0"
        if cert.witness is not None and (cert.witness < 1 or g(cert.witness) > 0):
            return False, f"{list(coeffs)}: witness t = {cert.witness} has g(t) > 0"
    return True, f"{sizes.sturm_polys} polynomials"


def check_dimensions(sizes: Sizes) -> CheckResult:
    checked = 0
    for n in range(1, sizes.dim_n + 1):
        for lam in partitions_up_to(sizes.dim_boxes, n):
            tableaux, weyl = schur.ssyt_count(lam, n), repn.weyl_dimension(lam, n)
            if tableaux != weyl:
                return False, f"s_{list(lam)} at n = {n}: {tableaux} tableaux, Weyl product {weyl}"
            checked += 1
    return True, f"{checked} shapes"


def check_corpus(corpus_dir, quick: bool, params: AnalysisParams) -> Optional[CheckResult]:
    entries = load_corpus(corpus_dir)
    if quick:
        entries = [e for e in entries if e.rho.n == 2]
    if not entries:
        return None
    for entry in entries:
        rho, sigma = entry.rho.to_representation(), entry.sigma.to_representation()
        verdict = decision.analyze(rho, sigma, params)
        expect = entry.expect
        holds = verdict.conditions.both_hold
        if expect.conditions_hold is not None and holds != expect.conditions_hold:
            return False, f"{entry.name}: conditions hold = {holds}, expected {expect.conditions_hold}"
        if not holds:
            continue
        if verdict.catalyst is None:
            return False, f"{entry.name}: conditions hold but no catalyst within bounds"
        if verdict.theorem_applicable and verdict.asymptotic is None:
            return False, f"{entry.name}: sigma is generic but no exponent up to {params.n_max}"
        found = verdict.asymptotic.minimal_n if verdict.asymptotic else None
        if expect.minimal_n is not None and found != expect.minimal_n:
            return False, f"{entry.name}: minimal exponent {found}, expected {expect.minimal_n}"
        if expect.catalyst_is_sigma and verdict.catalyst != sigma:
            return False, f"{entry.name}: expected sigma itself as the first catalyst"
    return True, f"{len(entries)} pairs"


def run_selftest(
    quick: bool = False, corpus_dir=None, params: Optional[AnalysisParams] = None
) -> List[SelftestCheck]:
    sizes = QUICK if quick else FULL
    params = params or AnalysisParams()
    corpus_dir = corpus_dir or config.CORPUS_DIR
    rng = random.Random(params.seed)

    checks: List[Tuple[str, Callable[[], Optional[CheckResult]]]] = [
        ("lr_vs_monomial", lambda: check_lr_products(sizes)),
        ("tropical_vs_support_max", lambda: check_tropical_closed_form(sizes, rng)),
        ("lp_vs_majorization", lambda: check_lp_majorization(sizes, rng)),
        ("sturm_vs_sampling", lambda: check_sturm_sampling(sizes, rng)),
        ("ssyt_vs_weyl", lambda: check_dimensions(sizes)),
        ("corpus", lambda: check_corpus(corpus_dir, quick, params)),
    ]
    results = []
    for name, run in checks:
        logger.info("Running %s", name)
        try:
            outcome = run()
        except RepContainError as e:
            outcome = (False, f"{type(e).__name__}: {e.detail}")
        if outcome is None:
            logger.warning("Corpus at %s is empty; skipping corpus checks", corpus_dir)
            results.append(SelftestCheck(name, True, skipped=True, detail="empty corpus"))
            continue
        passed, detail = outcome
        if not passed:
            logger.error("Selftest %s failed: %s", name, detail)
        results.append(SelftestCheck(name, passed, detail=detail))
    return results
