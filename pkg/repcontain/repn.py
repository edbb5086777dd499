"""Rep SL(n, C) as the quotient semiring Schur_n / (e_n ~ 1).

Every Representation holds the unique representative whose partitions have
length <= n - 1, so containment is a coefficientwise comparison.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Tuple

from . import schur
from .errors import DomainError, InconsistencyError, require, same_n
from .partition import EMPTY, Partition, make_partition, reduce_mod_determinant, size
from .schur import SchurElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representation:
    element: SchurElement

    def __post_init__(self):
        if self.element.n < 2:
            raise DomainError(f"SL(n) representations need n >= 2, got {self.element.n}")
        long = [lam for lam in self.element.coeffs if len(lam) >= self.element.n]
        if long:
            raise DomainError(
                f"Not in canonical form: {[list(lam) for lam in long]} have length >= n; use canonicalize"
            )

    @property
    def n(self) -> int:
        return self.element.n

    @property
    def coeffs(self) -> Mapping[Partition, int]:
        return self.element.coeffs

    @property
    def support(self) -> Tuple[Partition, ...]:
        return self.element.support

    def items(self):
        return self.element.items()

    def __getitem__(self, lam) -> int:
        return self.element[lam]

    def __bool__(self):
        return bool(self.element)

    def __add__(self, other):
        return direct_sum(self, other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return Representation(schur.scale(self.element, other))
        return tensor(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        return tensor_power(self, k)

    def __le__(self, other):
        return contains(self, other)

    def __repr__(self):
        if not self.element:
            return f"Representation(n={self.n}, 0)"
        terms = " + ".join(
            (f"{m}*" if m != 1 else "") + f"s{list(lam)}" for lam, m in self.items()
        )
        return f"Representation(n={self.n}, {terms})"


def is_canonical(f: SchurElement) -> bool:
    return all(len(lam) < f.n for lam in f.coeffs)


def canonicalize(f: SchurElement) -> Representation:
    require(f.n >= 2, f"SL(n) representations need n >= 2, got {f.n}")
    merged = Counter()
    for lam, mult in f.coeffs.items():
        merged[reduce_mod_determinant(lam, f.n)] += mult
    return Representation(SchurElement(f.n, merged))


def from_terms(n: int, terms: Mapping) -> Representation:
    return canonicalize(SchurElement(n, terms))


def zero(n: int) -> Representation:
    return from_terms(n, {})


def irrep(lam, n: int, mult: int = 1) -> Representation:
    return canonicalize(schur.basis(lam, n, mult))


def trivial(n: int) -> Representation:
    return irrep(EMPTY, n)


def standard(n: int) -> Representation:
    return irrep((1,), n)


def generic_unit(n: int) -> Representation:
    """u = 1 + e_1: trivial plus standard."""
    return canonicalize(schur.generic_unit(n))


def tensor(rho: Representation, sigma: Representation) -> Representation:
    same_n(rho, sigma)
    return canonicalize(schur.multiply(rho.element, sigma.element))


def direct_sum(rho: Representation, sigma: Representation) -> Representation:
    same_n(rho, sigma)
    return Representation(schur.add(rho.element, sigma.element))


def tensor_power(rho: Representation, k: int) -> Representation:
    require(k >= 0, f"Exponent must be nonnegative, got {k}")
    result = trivial(rho.n)
    for _ in range(k):
        result = tensor(result, rho)
    return result


def contains(rho: Representation, sigma: Representation) -> bool:
    """rho is isomorphic to a subrepresentation of sigma."""
    same_n(rho, sigma)
    return schur.leq(rho.element, sigma.element)


def dimension(rho: Representation) -> int:
    return sum(mult * schur.ssyt_count(lam, rho.n) for lam, mult in rho.coeffs.items())


def weyl_dimension(lam: Partition, n: int) -> int:
    lam = make_partition(lam)
    require(len(lam) <= n, f"Partition {list(lam)} is longer than n = {n}")
    padded = list(lam) + [0] * (n - len(lam))
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(padded[i] - padded[j] + j - i, j - i)
    if value.denominator != 1:
        raise InconsistencyError(f"Weyl dimension of {list(lam)} is not an integer: {value}")
    return value.numerator


def is_generic(rho: Representation) -> bool:
    """Contains both the trivial and the standard representation."""
    return rho[EMPTY] >= 1 and rho[(1,)] >= 1


def _least_exponent(
    accept: Callable[[Representation], bool], base: Representation, bound: int
):
    power = trivial(base.n)
    for k in range(bound + 1):
        if accept(power):
            return k
        power = tensor(power, base)
    return None


def power_universality_bounds(rho: Representation) -> Tuple[int, int]:
    """Analytic search bounds for power_universality_witness.

    Upper: s_lam <= e_1^|lam| <= u^|lam|, and 2 = 1 + e_n <= u^n absorbs
    multiplicities. Lower: s_lam * e_1^k contains e_n^lam_1 ~ 1 for
    k = n * lam_1 - |lam| (fill the lam_1 x n rectangle one box at a time).
    """
    require(bool(rho), "Power universality needs a nonzero representation")
    n = rho.n
    total = sum(rho.coeffs.values())
    doublings = math.ceil(math.log2(total)) if total > 1 else 0
    upper = max(size(lam) for lam in rho.coeffs) + n * doublings
    lower = min(n * (lam[0] if lam else 0) - size(lam) for lam in rho.coeffs)
    return upper, lower


def power_universality_witness(rho: Representation) -> Tuple[int, int]:
    """Smallest k_upper, k_lower with rho <= u^k_upper and 1 <= rho * u^k_lower."""
    upper_bound, lower_bound = power_universality_bounds(rho)
    u = generic_unit(rho.n)
    one = trivial(rho.n)
    k_upper = _least_exponent(lambda power: contains(rho, power), u, upper_bound)
    k_lower = _least_exponent(lambda power: contains(one, tensor(rho, power)), u, lower_bound)
    if k_upper is None or k_lower is None:
        raise InconsistencyError(
            f"Power universality search for {rho!r} exceeded its analytic bounds "
            f"(upper {upper_bound}, lower {lower_bound})"
        )
    logger.debug("Power universality witness for %r: (%d, %d)", rho, k_upper, k_lower)
    return k_upper, k_lower
