"""Weight polytopes in the sum-zero hyperplane and exact membership tests.

"Interior" always means the relative interior inside the hyperplane
sum(x) = 0, the weight space of SL(n).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate, permutations
from typing import Iterable, Optional, Sequence, Tuple

import sympy

from . import lp
from .errors import DomainError, require, same_n
from .partition import Partition
from .repn import Representation
from .utils.pool import ordered_map

logger = logging.getLogger(__name__)

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class WeightPolytope:
    n: int
    generators: Tuple[Point, ...]
    vertices: Tuple[Point, ...]


@dataclass(frozen=True)
class Membership:
    inside_relint: bool
    inside_closed: bool
    epsilon: Optional[Fraction] = None


def project(lam: Partition, n: int) -> Point:
    """Zero-padded partition minus its coordinate mean."""
    require(len(lam) <= n, f"Partition {list(lam)} is longer than n = {n}")
    padded = [Fraction(part) for part in lam] + [Fraction(0)] * (n - len(lam))
    mean = sum(padded, Fraction(0)) / n
    return tuple(v - mean for v in padded)


def from_generators(n: int, generators: Iterable[Sequence]) -> WeightPolytope:
    gens = set()
    for g in generators:
        g = tuple(Fraction(v) for v in g)
        if len(g) != n:
            raise DomainError(f"Generator {g} does not have {n} coordinates")
        if sum(g) != 0:
            raise DomainError("Generators must lie in the sum-zero hyperplane")
        gens.add(tuple(sorted(g, reverse=True)))
    vertices = set()
    for g in gens:
        vertices.update(permutations(g))
    return WeightPolytope(n, tuple(sorted(gens, reverse=True)), tuple(sorted(vertices)))


def weight_polytope(rho: Representation) -> WeightPolytope:
    require(bool(rho), "The zero representation has no weight polytope")
    return from_generators(rho.n, (project(lam, rho.n) for lam in rho.coeffs))


def affine_dimension(polytope: WeightPolytope) -> int:
    base = polytope.vertices[0]
    if len(polytope.vertices) == 1:
        return 0
    rows = [
        [sympy.Rational(a.numerator, a.denominator) - sympy.Rational(b.numerator, b.denominator)
         for a, b in zip(v, base)]
        for v in polytope.vertices[1:]
    ]
    return sympy.Matrix(rows).rank()


def lp_relint_membership(p: Sequence, polytope: WeightPolytope) -> Membership:
    """max eps s.t. sum c_v v = p, sum c_v = 1, c_v >= eps >= 0.

    Written with c_v = eps + d_v so every variable is nonnegative. The last
    coordinate row is implied by the sum-zero condition and is left out.
    """
    p = tuple(Fraction(v) for v in p)
    if len(p) != polytope.n:
        raise DomainError(f"Point has {len(p)} coordinates, polytope lives in n = {polytope.n}")
    if sum(p) != 0:
        raise DomainError("Membership points must lie in the sum-zero hyperplane")
    vertices = polytope.vertices
    m = len(vertices)
    A, b = [], []
    for k in range(polytope.n - 1):
        A.append([v[k] for v in vertices] + [sum((v[k] for v in vertices), Fraction(0))])
        b.append(p[k])
    A.append([Fraction(1)] * m + [Fraction(m)])
    b.append(Fraction(1))
    c = [Fraction(0)] * m + [Fraction(1)]
    result = lp.solve(lp.LPProblem(A, b, c))
    if result.status is lp.LPStatus.INFEASIBLE:
        return Membership(False, False, None)
    if result.status is not lp.LPStatus.OPTIMAL:
        raise DomainError(f"Membership LP ended with status {result.status.value}")
    return Membership(result.value > 0, True, result.value)


def majorization_membership(p: Sequence, generator: Sequence) -> Membership:
    """Single-orbit oracle: p is in conv(S_n . g) iff g majorizes p."""
    p = sorted((Fraction(v) for v in p), reverse=True)
    g = sorted((Fraction(v) for v in generator), reverse=True)
    if len(p) != len(g):
        raise DomainError("Point and generator need the same number of coordinates")
    if sum(p) != sum(g):
        return Membership(False, False)
    if all(v == g[0] for v in g):
        equal = p == g
        return Membership(equal, equal)
    prefixes = list(zip(accumulate(p), accumulate(g)))[:-1]
    closed = all(a <= b for a, b in prefixes)
    strict = all(a < b for a, b in prefixes)
    return Membership(strict, closed)


def _generator_memberships(rho, sigma, threads):
    same_n(rho, sigma)
    inner = weight_polytope(rho)
    outer = weight_polytope(sigma)
    return outer, ordered_map(lambda g: lp_relint_membership(g, outer), inner.generators, threads)


def wp_strict_containment(rho: Representation, sigma: Representation, threads: int = 1) -> bool:
    """WP(rho) inside the interior of WP(sigma).

    WP(sigma) is symmetric and convex, so checking the generators of WP(rho)
    covers their whole orbits.
    """
    same_n(rho, sigma)
    outer = weight_polytope(sigma)
    if affine_dimension(outer) != sigma.n - 1:
        logger.info("WP(sigma) is not full-dimensional; strict containment is impossible")
        return False
    _, memberships = _generator_memberships(rho, sigma, threads)
    return all(m.inside_relint for m in memberships)


def wp_containment(rho: Representation, sigma: Representation, threads: int = 1) -> bool:
    _, memberships = _generator_memberships(rho, sigma, threads)
    return all(m.inside_closed for m in memberships)
