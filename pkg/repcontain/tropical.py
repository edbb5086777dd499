"""Tropical homomorphisms psi_y: Schur_n -> (R u {-inf}, max, +).

psi_y maximizes <alpha, y> over the monomial support. -inf is represented
by None and only occurs for the zero element.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from . import schur
from .characters import log_char_values, weight_table
from .errors import DomainError, require
from .partition import Partition
from .repn import Representation
from .schur import SchurElement
from .utils.rational import format_rational, parse_rational_list

TropicalValue = Optional[Fraction]


@dataclass(frozen=True)
class Direction:
    y: Tuple[Fraction, ...]
    sl_constraint: bool = False

    def __post_init__(self):
        coords = tuple(Fraction(v) for v in self.y)
        object.__setattr__(self, "y", coords)
        if not coords:
            raise DomainError("A direction needs at least one coordinate")
        if self.sl_constraint and sum(coords) != 0:
            raise DomainError(
                f"SL directions must sum to zero: {[format_rational(v) for v in coords]}"
            )

    @property
    def n(self) -> int:
        return len(self.y)

    @classmethod
    def parse(cls, text: str, sl_constraint: bool = False) -> "Direction":
        try:
            coords = parse_rational_list(text)
        except ValueError as e:
            raise DomainError(str(e))
        return cls(tuple(coords), sl_constraint)

    def decreasing(self) -> Tuple[Fraction, ...]:
        return tuple(sorted(self.y, reverse=True))


def trop_add(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def trop_mul(a: TropicalValue, b: TropicalValue) -> TropicalValue:
    if a is None or b is None:
        return None
    return a + b


def trop_eval_schur(lam: Partition, y: Direction) -> Fraction:
    """psi_y(s_lam) = sum lam_i * y_i with y sorted decreasingly."""
    require(len(lam) <= y.n, f"Partition {list(lam)} is longer than n = {y.n}")
    return sum((part * yi for part, yi in zip(lam, y.decreasing())), Fraction(0))


def _element_of(f: Union[SchurElement, Representation], y: Direction) -> SchurElement:
    if isinstance(f, Representation):
        if not y.sl_constraint or sum(y.y) != 0:
            raise DomainError(
                "psi_y descends to SL(n) representations only for directions summing to zero"
            )
        f = f.element
    require(f.n == y.n, f"Direction has {y.n} coordinates, element has n = {f.n}")
    return f


def trop_eval(f: Union[SchurElement, Representation], y: Direction) -> TropicalValue:
    f = _element_of(f, y)
    value = None
    for lam in f.coeffs:
        value = trop_add(value, trop_eval_schur(lam, y))
    return value


def support_max(f: Union[SchurElement, Representation], y: Direction) -> TropicalValue:
    """Oracle: maximize <alpha, y> over the monomial support directly."""
    f = _element_of(f, y)
    value = None
    for alpha in schur.monomial_expansion(f).support:
        value = trop_add(value, sum((a * yi for a, yi in zip(alpha, y.y)), Fraction(0)))
    return value


def growth_rate(rho: Representation, y: Sequence[float], r: float) -> float:
    """(1/r) * log chi_rho(exp(r * y)), which tends to psi_y(rho) as r grows."""
    y = np.asarray(y, dtype=float)
    require(len(y) == rho.n, f"Direction has {len(y)} coordinates, representation has n = {rho.n}")
    value = log_char_values(weight_table(rho), (r * y)[None, :])[0]
    return float(value) / r
