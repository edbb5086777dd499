"""Characters on the positive torus.

Exact values use Fractions throughout. The violation search scans the slice
x_1 * ... * x_n = 1 in log coordinates with floats and only ever reports a
point after re-checking it exactly.
"""
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from . import schur
from .errors import DomainError, require, same_n
from .partition import Partition, size
from .repn import Representation
from .utils.rational import format_rational, parse_rational_list

logger = logging.getLogger(__name__)

# Above this many boxes, exact evaluation switches from the tableau sum to
# the Jacobi-Trudi determinant.
MONOMIAL_PATH_MAX_BOXES = 8

SNAP_DENOMINATOR = 10 ** 6

# Grid rows evaluated per numpy call in the violation search.
GRID_CHUNK = 2 ** 14


@dataclass(frozen=True)
class TorusPoint:
    x: Tuple[Fraction, ...]
    sl_constraint: bool = True

    def __post_init__(self):
        coords = tuple(Fraction(v) for v in self.x)
        object.__setattr__(self, "x", coords)
        if not coords:
            raise DomainError("A torus point needs at least one coordinate")
        if any(v <= 0 for v in coords):
            raise DomainError(f"Torus points must be strictly positive: {self.format()}")
        if self.sl_constraint and math.prod(coords) != 1:
            raise DomainError(f"Coordinates of an SL torus point must multiply to 1: {self.format()}")

    @property
    def n(self) -> int:
        return len(self.x)

    @classmethod
    def parse(cls, text: str, sl_constraint: bool = True) -> "TorusPoint":
        try:
            coords = parse_rational_list(text)
        except ValueError as e:
            raise DomainError(str(e))
        return cls(tuple(coords), sl_constraint)

    @classmethod
    def identity(cls, n: int) -> "TorusPoint":
        return cls((Fraction(1),) * n, True)

    @classmethod
    def from_log(cls, z: Sequence[float]) -> "TorusPoint":
        """Snap free log coordinates z_1..z_{n-1} to an exact SL point."""
        coords = []
        for zi in z:
            value = math.exp(float(zi))
            snapped = Fraction(value).limit_denominator(SNAP_DENOMINATOR)
            coords.append(snapped if snapped > 0 else Fraction(value))
        coords.append(1 / math.prod(coords))
        return cls(tuple(coords), True)

    def format(self) -> List[str]:
        return [format_rational(v) for v in self.x]


def complete_homogeneous(k_max: int, x: Sequence[Fraction]) -> List[Fraction]:
    """h_0(x), ..., h_k_max(x)."""
    h = [Fraction(1)] + [Fraction(0)] * k_max
    for xi in x:
        for k in range(1, k_max + 1):
            h[k] += xi * h[k - 1]
    return h


def _jacobi_trudi(lam: Partition, x: Sequence[Fraction]) -> Fraction:
    ell = len(lam)
    h = complete_homogeneous(lam[0] + ell - 1, x)

    def entry(i, j):
        k = lam[i] - i + j
        if k < 0:
            return sympy.Integer(0)
        return sympy.Rational(h[k].numerator, h[k].denominator)

    det = sympy.Matrix(ell, ell, entry).det(method="bareiss")
    det = sympy.Rational(det)
    return Fraction(int(det.p), int(det.q))


def eval_schur(lam: Partition, point: TorusPoint) -> Fraction:
    lam = tuple(lam)
    require(len(lam) <= point.n, f"Partition {list(lam)} is longer than n = {point.n}")
    if not lam:
        return Fraction(1)
    if size(lam) <= MONOMIAL_PATH_MAX_BOXES:
        total = Fraction(0)
        for alpha, count in schur._ssyt_contents(lam, point.n):
            term = Fraction(count)
            for xi, a in zip(point.x, alpha):
                if a:
                    term *= xi ** a
            total += term
        return total
    return _jacobi_trudi(lam, point.x)


def eval_element(f: schur.SchurElement, point: TorusPoint) -> Fraction:
    require(f.n == point.n, f"Point has {point.n} coordinates, element has n = {f.n}")
    return sum((mult * eval_schur(lam, point) for lam, mult in f.coeffs.items()), Fraction(0))


def eval_char(rho: Representation, point: TorusPoint) -> Fraction:
    if not point.sl_constraint or math.prod(point.x) != 1:
        raise DomainError("Characters of SL(n) are evaluated on points with x_1 * ... * x_n = 1")
    return eval_element(rho.element, point)


def weight_table(rho: Representation) -> Tuple[np.ndarray, np.ndarray]:
    """Weights (exponent vectors) and their multiplicities as float arrays."""
    expansion = schur.monomial_expansion(rho.element)
    support = expansion.support
    if not support:
        return np.zeros((0, rho.n)), np.zeros(0)
    exponents = np.array(support, dtype=float)
    mults = np.array([expansion.terms[alpha] for alpha in support], dtype=float)
    return exponents, mults


def log_char_values(table: Tuple[np.ndarray, np.ndarray], w: np.ndarray) -> np.ndarray:
    """log chi(exp(w)) for each row of w, shifted so nothing overflows."""
    exponents, mults = table
    if len(mults) == 0:
        return np.full(w.shape[0], -np.inf)
    linear = exponents @ w.T
    top = linear.max(axis=0)
    return top + np.log((mults[:, None] * np.exp(linear - top)).sum(axis=0))


def _full_log_coordinates(z: np.ndarray) -> np.ndarray:
    z = np.atleast_2d(z)
    return np.hstack([z, -z.sum(axis=1, keepdims=True)])


def _violates(rho: Representation, sigma: Representation, point: TorusPoint) -> bool:
    return eval_char(rho, point) >= eval_char(sigma, point)


def _descend(z: np.ndarray, objective, step: float, iters: int, bound: float):
    best = objective(z)
    for _ in range(iters):
        improved = False
        for i in range(len(z)):
            for delta in (step, -step):
                trial = z.copy()
                trial[i] = min(bound, max(-bound, trial[i] + delta))
                value = objective(trial)
                if value < best:
                    z, best, improved = trial, value, True
                    break
        if not improved:
            step /= 2
    return z, best


def _grid_chunks(axis: np.ndarray, dims: int, chunk_rows: int):
    """Yield the rows of the product grid in row-major order, chunk by chunk."""
    shape = (len(axis),) * dims
    total = len(axis) ** dims
    for start in range(0, total, chunk_rows):
        flat = np.arange(start, min(start + chunk_rows, total))
        yield axis[np.stack(np.unravel_index(flat, shape), axis=1)]


def search_violation(
    rho: Representation,
    sigma: Representation,
    grid_depth: int = 33,
    descent_iters: int = 50,
    log_box: float = 8,
    max_checks: int = 16,
    descent_starts: int = 4,
    near_points: Optional[List[TorusPoint]] = None,
    chunk_rows: int = GRID_CHUNK,
) -> Optional[TorusPoint]:
    """Look for x with chi_rho(x) >= chi_sigma(x); a returned point is exact proof.

    The grid is evaluated `chunk_rows` rows at a time. Candidates are checked
    in row-major grid order and descent starts from the globally smallest gaps,
    so the answer does not depend on the chunk size.

    When `near_points` is given, the snapped local minima of the relative gap
    are appended to it so later stages can re-check them exactly.
    """
    n = same_n(rho, sigma)
    require(grid_depth >= 2, f"grid_depth must be at least 2, got {grid_depth}")
    require(chunk_rows >= 1, f"chunk_rows must be positive, got {chunk_rows}")

    identity = TorusPoint.identity(n)
    if _violates(rho, sigma, identity):
        return identity

    rho_table, sigma_table = weight_table(rho), weight_table(sigma)

    def relative_gap(z_rows: np.ndarray) -> np.ndarray:
        w = _full_log_coordinates(z_rows)
        log_sigma = log_char_values(sigma_table, w)
        log_rho = log_char_values(rho_table, w)
        # (sigma - rho) / (sigma + rho) without leaving log space
        with np.errstate(invalid="ignore"):
            return np.tanh((log_sigma - log_rho) / 2)

    axis = np.linspace(-log_box, log_box, grid_depth)
    checks = 0
    best_gaps = np.empty(0)
    best_rows = np.empty((0, n - 1))
    scanned = 0
    for rows in _grid_chunks(axis, n - 1, chunk_rows):
        gaps = relative_gap(rows)
        scanned += len(rows)
        for index in np.flatnonzero(gaps <= 0):
            if checks >= max_checks:
                break
            checks += 1
            point = TorusPoint.from_log(rows[index])
            if _violates(rho, sigma, point):
                return point
        # earlier rows stay ahead on ties, as in one stable sort over the grid
        best_gaps = np.concatenate([best_gaps, gaps])
        best_rows = np.vstack([best_rows, rows])
        keep = np.argsort(best_gaps, kind="stable")[:descent_starts]
        best_gaps, best_rows = best_gaps[keep], best_rows[keep]
    logger.debug(
        "Scanned %d grid points, minimum relative gap %.3g",
        scanned, float(np.nanmin(best_gaps)) if len(best_gaps) else float("nan"),
    )

    step = axis[1] - axis[0]
    for start in best_rows:
        z, value = _descend(
            start.copy(), lambda v: float(relative_gap(v)[0]), step, descent_iters, log_box
        )
        point = TorusPoint.from_log(z)
        if near_points is not None:
            near_points.append(point)
        if value <= 1e-9 and _violates(rho, sigma, point):
            return point
    return None


def torus_sample(n: int, count: int, seed: int) -> List[TorusPoint]:
    """Deterministic rational points of the SL slice."""
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        coords = [Fraction(rng.randint(1, 12), rng.randint(1, 12)) for _ in range(n - 1)]
        coords.append(1 / math.prod(coords))
        points.append(TorusPoint(tuple(coords), True))
    return points
