"""The preordered semiring Schur_n of Schur positive symmetric polynomials.

Elements are finitely supported N-linear combinations of Schur polynomials
s_lambda with l(lambda) <= n. Products use Littlewood-Richardson coefficients,
counted as LR skew tableaux; `monomial_expansion` (a sum over semistandard
tableaux) is the independent oracle everything else is checked against.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple

from .errors import DomainError, require, same_n
from .partition import (
    EMPTY,
    Partition,
    column,
    contains_diagram,
    make_partition,
    size,
)

Exponent = Tuple[int, ...]

# Entries kept per memoized product or tableau table.
CACHE_SIZE = 4096


def _clean(coeffs: Mapping, n: int) -> Dict[Partition, int]:
    cleaned = {}
    for lam, mult in coeffs.items():
        lam = make_partition(lam)
        if isinstance(mult, bool) or not isinstance(mult, int):
            raise DomainError(f"Multiplicity of {list(lam)} must be an integer, got {mult!r}")
        if mult < 0:
            raise DomainError(f"Negative multiplicity {mult} for {list(lam)}")
        if len(lam) > n:
            raise DomainError(f"Partition {list(lam)} is longer than n = {n}")
        if mult:
            cleaned[lam] = cleaned.get(lam, 0) + mult
    return cleaned


@dataclass(frozen=True)
class SchurElement:
    n: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        object.__setattr__(self, "coeffs", MappingProxyType(_clean(self.coeffs, self.n)))

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __eq__(self, other):
        if not isinstance(other, SchurElement):
            return NotImplemented
        return self.n == other.n and dict(self.coeffs) == dict(other.coeffs)

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return scale(self, other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        return power(self, k)

    def __le__(self, other):
        return leq(self, other)

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(tuple(lam), 0)

    @property
    def support(self) -> Tuple[Partition, ...]:
        return tuple(sorted(self.coeffs))

    def items(self):
        return sorted(self.coeffs.items())

    def __repr__(self):
        if not self.coeffs:
            return f"SchurElement(n={self.n}, 0)"
        terms = " + ".join(
            (f"{m}*" if m != 1 else "") + f"s{list(lam)}" for lam, m in self.items()
        )
        return f"SchurElement(n={self.n}, {terms})"


def zero(n: int) -> SchurElement:
    return SchurElement(n, {})


def unit(n: int) -> SchurElement:
    return SchurElement(n, {EMPTY: 1})


def basis(lam: Iterable[int], n: int, mult: int = 1) -> SchurElement:
    return SchurElement(n, {make_partition(lam): mult})


def elementary(j: int, n: int) -> SchurElement:
    require(0 <= j <= n, f"e_j needs 0 <= j <= n, got j={j}, n={n}")
    return SchurElement(n, {column(j): 1})


def generic_unit(n: int) -> SchurElement:
    """u = 1 + e_1."""
    return SchurElement(n, {EMPTY: 1, (1,): 1})


def unit_coefficient(f: SchurElement) -> int:
    return f[EMPTY]


# Littlewood-Richardson coefficients

def _skew_cells(lam: Partition, mu: Partition):
    """Cells of lam/mu in reverse reading order: rows top down, right to left."""
    cells = []
    for r, row in enumerate(lam):
        start = mu[r] if r < len(mu) else 0
        cells.extend((r, c) for c in range(row - 1, start - 1, -1))
    return cells


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^lam_{mu nu}: number of LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if size(lam) != size(mu) + size(nu):
        return 0
    if not contains_diagram(lam, mu) or not contains_diagram(lam, nu):
        return 0
    if not nu:
        return 1
    cells = _skew_cells(lam, mu)
    filling = {}
    counts = [0] * (len(nu) + 1)

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = len(nu)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        lo = 1 if above is None else above + 1
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            # lattice word: never more v's than (v-1)'s
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(r, c)] = v
            found += fill(k + 1)
            del filling[(r, c)]
            counts[v] -= 1
        return found

    return fill(0)


def _lr_candidates(mu: Partition, nu: Partition, n: int):
    """Partitions lam containing mu and nu with |lam| = |mu| + |nu|, l(lam) <= n."""
    max_len = min(n, len(mu) + len(nu))
    base = list(mu) + [0] * (max_len - len(mu))
    extra = size(nu)

    def grow(i, remaining, prev):
        if i == max_len:
            if remaining == 0:
                yield ()
            return
        top = base[i] + remaining if prev is None else min(prev, base[i] + remaining)
        for value in range(top, base[i] - 1, -1):
            for rest in grow(i + 1, remaining - (value - base[i]), value):
                yield (value,) + rest

    for lam in grow(0, extra, None):
        lam = make_partition(lam)
        if contains_diagram(lam, nu):
            yield lam


@lru_cache(maxsize=CACHE_SIZE)
def _basis_product(mu: Partition, nu: Partition, n: int) -> Tuple[Tuple[Partition, int], ...]:
    terms = []
    for lam in _lr_candidates(mu, nu, n):
        c = lr_coefficient(lam, mu, nu)
        if c:
            terms.append((lam, c))
    return tuple(terms)


def basis_product(mu: Partition, nu: Partition, n: int) -> Tuple[Tuple[Partition, int], ...]:
    """s_mu * s_nu in n variables, as (lam, c^lam_{mu nu}) pairs."""
    mu, nu = tuple(mu), tuple(nu)
    # the skew shape lam/mu has |nu| cells, so put the larger factor first
    if (size(mu), mu) < (size(nu), nu):
        mu, nu = nu, mu
    return _basis_product(mu, nu, n)


# Semiring operations

def add(f: SchurElement, g: SchurElement) -> SchurElement:
    n = same_n(f, g)
    total = Counter(f.coeffs)
    total.update(g.coeffs)
    return SchurElement(n, total)


def scale(f: SchurElement, k: int) -> SchurElement:
    require(k >= 0, f"Scalars must be nonnegative, got {k}")
    return SchurElement(f.n, {lam: k * m for lam, m in f.coeffs.items()})


def multiply(f: SchurElement, g: SchurElement) -> SchurElement:
    n = same_n(f, g)
    total = Counter()
    for mu, a in f.coeffs.items():
        for nu, b in g.coeffs.items():
            for lam, c in basis_product(mu, nu, n):
                total[lam] += a * b * c
    return SchurElement(n, total)


def leq(f: SchurElement, g: SchurElement) -> bool:
    same_n(f, g)
    return all(g[lam] >= m for lam, m in f.coeffs.items())


def power(f: SchurElement, k: int) -> SchurElement:
    require(k >= 0, f"Exponent must be nonnegative, got {k}")
    result = unit(f.n)
    for _ in range(k):
        result = multiply(result, f)
    return result


def pieri_e(mu: Partition, j: int, n: int) -> SchurElement:
    """s_mu * e_j by the dual Pieri rule: add j boxes, no two in the same row."""
    mu = make_partition(mu)
    require(0 <= j <= n, f"e_j needs 0 <= j <= n, got j={j}, n={n}")
    require(len(mu) <= n, f"Partition {list(mu)} is longer than n = {n}")
    padded = list(mu) + [0] * (n - len(mu))
    coeffs = {}
    for rows in combinations(range(n), j):
        grown = list(padded)
        for r in rows:
            grown[r] += 1
        if all(grown[i] >= grown[i + 1] for i in range(n - 1)):
            coeffs[make_partition(grown)] = 1
    return SchurElement(n, coeffs)


# Monomial expansion oracle

@lru_cache(maxsize=CACHE_SIZE)
def _ssyt_contents(lam: Partition, n: int) -> Tuple[Tuple[Exponent, int], ...]:
    """Content vectors of all SSYT of shape lam with entries 1..n, with counts."""
    if len(lam) > n:
        return ()
    cells = [(r, c) for r, row in enumerate(lam) for c in range(row)]
    heights = [sum(1 for row in lam if row > c) for c in range(lam[0])] if lam else []
    grid = {}
    content = [0] * n
    counter = Counter()

    def fill(k: int):
        if k == len(cells):
            counter[tuple(content)] += 1
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        # leave room for the strictly increasing cells below in this column
        hi = n - (heights[c] - 1 - r)
        for v in range(lo, hi + 1):
            grid[(r, c)] = v
            content[v - 1] += 1
            fill(k + 1)
            content[v - 1] -= 1
        grid.pop((r, c), None)

    fill(0)
    return tuple(sorted(counter.items()))


def ssyt_count(lam: Partition, n: int) -> int:
    return sum(count for _, count in _ssyt_contents(tuple(lam), n))


@dataclass(frozen=True)
class MonomialExpansion:
    n: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for alpha, c in self.terms.items():
            alpha = tuple(alpha)
            if len(alpha) != self.n:
                raise DomainError(f"Exponent {alpha} does not have {self.n} coordinates")
            if c:
                cleaned[alpha] = cleaned.get(alpha, 0) + c
        object.__setattr__(self, "terms", MappingProxyType(cleaned))

    def __eq__(self, other):
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        return self.n == other.n and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __mul__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        n = same_n(self, other)
        total = Counter()
        for alpha, a in self.terms.items():
            for beta, b in other.terms.items():
                total[tuple(x + y for x, y in zip(alpha, beta))] += a * b
        return MonomialExpansion(n, total)

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        n = same_n(self, other)
        total = Counter(self.terms)
        total.update(other.terms)
        return MonomialExpansion(n, total)

    @property
    def support(self) -> Tuple[Exponent, ...]:
        return tuple(sorted(self.terms))

    def is_symmetric(self) -> bool:
        for alpha, c in self.terms.items():
            for i in range(self.n - 1):
                swapped = list(alpha)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), 0) != c:
                    return False
        return True

    def evaluate(self, x):
        """Exact substitution; x is a sequence of Fractions (or ints)."""
        total = 0
        for alpha, c in self.terms.items():
            term = c
            for xi, a in zip(x, alpha):
                if a:
                    term *= xi ** a
            total += term
        return total


def monomial_expansion(f: SchurElement) -> MonomialExpansion:
    total = Counter()
    for lam, mult in f.coeffs.items():
        for alpha, count in _ssyt_contents(lam, f.n):
            total[alpha] += mult * count
    return MonomialExpansion(f.n, total)


def decompose(m: MonomialExpansion) -> SchurElement:
    """Greedy re-decomposition into the Schur basis (lex-leading term first)."""
    remaining = Counter(m.terms)
    result = Counter()
    while remaining:
        alpha = max(remaining)
        c = remaining[alpha]
        if c < 0 or list(alpha) != sorted(alpha, reverse=True):
            raise DomainError(f"Not Schur positive: leading monomial {alpha} has coefficient {c}")
        lam = make_partition(alpha)
        result[lam] += c
        for beta, count in _ssyt_contents(lam, m.n):
            remaining[beta] -= c * count
            if remaining[beta] == 0:
                del remaining[beta]
    return SchurElement(m.n, result)
