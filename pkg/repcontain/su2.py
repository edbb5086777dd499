"""The n = 2 case: SU(2) representations as multiplicity maps d -> mult(d).

With t = e^alpha the irrep character sinh(alpha d)/sinh(alpha) is the
Laurent polynomial t^(d-1) + t^(d-3) + ... + t^(1-d), so the character
inequality on alpha >= 0 becomes positivity of an integer polynomial on
t >= 1, which Sturm sequences decide exactly.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Tuple

import sympy

from . import repn
from .errors import DomainError, require
from .repn import Representation

logger = logging.getLogger(__name__)

_T = sympy.Symbol("t")


@dataclass(frozen=True)
class MultiplicityMap:
    mult: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for d, m in self.mult.items():
            if not isinstance(d, int) or isinstance(d, bool) or d < 1:
                raise DomainError(f"Irrep dimensions are positive integers, got {d!r}")
            if not isinstance(m, int) or isinstance(m, bool) or m < 0:
                raise DomainError(f"Multiplicities are nonnegative integers, got {m!r}")
            if m:
                cleaned[d] = m
        object.__setattr__(self, "mult", MappingProxyType(cleaned))

    def __eq__(self, other):
        if not isinstance(other, MultiplicityMap):
            return NotImplemented
        return dict(self.mult) == dict(other.mult)

    def __hash__(self):
        return hash(frozenset(self.mult.items()))

    def __bool__(self):
        return bool(self.mult)

    @property
    def max_dimension(self) -> Optional[int]:
        return max(self.mult) if self.mult else None

    @property
    def dimension(self) -> int:
        return sum(d * m for d, m in self.mult.items())


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients from low to high degree."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, t) -> Fraction:
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def to_poly(self) -> sympy.Poly:
        return sympy.Poly(list(reversed(self.coeffs)) or [0], _T, domain="ZZ")


class CertificateStatus(str, Enum):
    CERTIFIED = "certified"
    NOT_POSITIVE = "not_positive"
    ZERO_POLYNOMIAL = "zero_polynomial"


@dataclass(frozen=True)
class PositivityCertificate:
    status: CertificateStatus
    value_at_one: int
    witness: Optional[Fraction] = None
    root_count: Optional[int] = None
    bound: Optional[Fraction] = None
    root_interval: Optional[Tuple[Fraction, Fraction]] = None


def from_representation(rho: Representation) -> MultiplicityMap:
    require(rho.n == 2, f"Multiplicity maps describe SU(2) representations, got n = {rho.n}")
    return MultiplicityMap({(lam[0] if lam else 0) + 1: m for lam, m in rho.coeffs.items()})


def to_representation(mult: MultiplicityMap) -> Representation:
    return repn.from_terms(2, {((d - 1,) if d > 1 else ()): m for d, m in mult.mult.items()})


def laurent_character(mult: MultiplicityMap) -> Dict[int, int]:
    """chi(t) as exponent -> coefficient, one palindromic block per irrep."""
    terms = Counter()
    for d, m in mult.mult.items():
        for j in range(d):
            terms[d - 1 - 2 * j] += m
    return dict(terms)


def sinh_character(mult: MultiplicityMap, alpha: float) -> float:
    """sum mult(d) sinh(alpha d)/sinh(alpha), the dimension at alpha = 0."""
    if alpha == 0:
        return float(mult.dimension)
    return sum(m * math.sinh(alpha * d) / math.sinh(alpha) for d, m in mult.mult.items())


def char_diff_polynomial(m_rho: MultiplicityMap, m_sigma: MultiplicityMap) -> IntPolynomial:
    """g(t) = t^D (chi_sigma(t) - chi_rho(t)), D = (largest dimension) - 1."""
    dims = list(m_rho.mult) + list(m_sigma.mult)
    if not dims:
        return IntPolynomial(())
    shift = max(dims) - 1
    coeffs = [0] * (2 * shift + 1)
    for sign, mult in ((1, m_sigma), (-1, m_rho)):
        for exponent, c in laurent_character(mult).items():
            coeffs[exponent + shift] += sign * c
    return IntPolynomial(tuple(coeffs))


def cauchy_bound(g: IntPolynomial) -> Fraction:
    """Every real root r satisfies |r| < 1 + max |a_i / a_deg|."""
    lead = abs(g.leading)
    return 1 + max((Fraction(abs(c), lead) for c in g.coeffs[:-1]), default=Fraction(0))


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _sign_changes(chain, t: Fraction) -> int:
    point = sympy.Rational(t.numerator, t.denominator)
    signs = [sympy.sign(p.eval(point)) for p in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(g: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi], via the Sturm chain of the square-free part."""
    chain = sympy.sturm(g.to_poly().sqf_part())
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def certify_strict_positive_on_ray(g: IntPolynomial) -> PositivityCertificate:
    """Decide g(t) > 0 for all t >= 1."""
    if g.is_zero:
        return PositivityCertificate(CertificateStatus.ZERO_POLYNOMIAL, 0)
    at_one = g(1)
    if at_one <= 0:
        return PositivityCertificate(CertificateStatus.NOT_POSITIVE, int(at_one), Fraction(1))
    if g.degree == 0:
        return PositivityCertificate(CertificateStatus.CERTIFIED, int(at_one), root_count=0)

    bound = cauchy_bound(g)
    count = sturm_root_count(g, Fraction(1), bound)
    logger.debug("Sturm count on (1, %s]: %d", bound, count)
    if count == 0 and g.leading > 0:
        return PositivityCertificate(CertificateStatus.CERTIFIED, int(at_one), root_count=0, bound=bound)

    beyond = bound + 1
    boundary = None
    for (a, b), multiplicity in g.to_poly().intervals(inf=1, sup=sympy.Rational(beyond.numerator, beyond.denominator)):
        a, b = _to_fraction(a), _to_fraction(b)
        for t in (a, b, (a + b) / 2):
            if t >= 1 and g(t) <= 0:
                return PositivityCertificate(
                    CertificateStatus.NOT_POSITIVE, int(at_one), t, count, bound
                )
        if boundary is None:
            boundary = (a, b)
        logger.debug("Root in (%s, %s) of multiplicity %d has no rational witness", a, b, multiplicity)
    if g(beyond) <= 0:
        return PositivityCertificate(CertificateStatus.NOT_POSITIVE, int(at_one), beyond, count, bound)
    # only irrational roots of even multiplicity: g touches zero without a rational witness
    return PositivityCertificate(
        CertificateStatus.NOT_POSITIVE, int(at_one), None, count, bound, boundary
    )


def su2_tropical_check(m_rho: MultiplicityMap, m_sigma: MultiplicityMap) -> bool:
    require(bool(m_rho) and bool(m_sigma), "Both multiplicity maps must be nonzero")
    return m_rho.max_dimension < m_sigma.max_dimension
