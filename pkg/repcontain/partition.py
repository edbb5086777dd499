"""Partitions: the index set of the Schur basis and of SL(n) irreps.

A partition is stored as a plain tuple of weakly decreasing positive ints;
the empty tuple is the empty partition, the index of the unit 1 = s_().
"""
from itertools import zip_longest
from typing import Iterable, Iterator, Optional, Tuple

from .errors import DomainError

Partition = Tuple[int, ...]

EMPTY: Partition = ()


def is_partition(parts) -> bool:
    parts = tuple(parts)
    if any((not isinstance(p, int)) or isinstance(p, bool) or p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize; trailing zeros are stripped."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    result = tuple(parts)
    if not is_partition(result):
        raise DomainError(f"Not a partition: {list(parts)}")
    return result


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def column(j: int) -> Partition:
    if j < 0:
        raise DomainError(f"Column length must be nonnegative, got {j}")
    return (1,) * j


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def _partial_sums(lam: Partition, k: int):
    total = 0
    for i in range(k):
        total += lam[i] if i < len(lam) else 0
        yield total


def dominance_leq(mu: Partition, nu: Partition) -> bool:
    """mu ⊴ nu: every prefix sum of mu is at most that of nu."""
    if size(mu) != size(nu):
        raise DomainError(
            f"Dominance is only defined for equal sizes: |{list(mu)}| != |{list(nu)}|"
        )
    k = max(len(mu), len(nu))
    return all(a <= b for a, b in zip(_partial_sums(mu, k), _partial_sums(nu, k)))


def add_partitions(mu: Partition, nu: Partition) -> Partition:
    return tuple(a + b for a, b in zip_longest(mu, nu, fillvalue=0))


def contains_diagram(lam: Partition, mu: Partition) -> bool:
    """mu ⊆ lam as Young diagrams."""
    if len(mu) > len(lam):
        return False
    return all(lam[i] >= mu[i] for i in range(len(mu)))


def reduce_mod_determinant(lam: Partition, n: int) -> Partition:
    """Strip full columns of height n (e_n ∼ 1)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if len(lam) > n:
        raise DomainError(
            f"Partition {list(lam)} has length {len(lam)} > n = {n}; s_lambda vanishes"
        )
    if len(lam) < n:
        return tuple(lam)
    last = lam[n - 1]
    return make_partition(part - last for part in lam[: n - 1])


def partitions(
    total: int, max_length: Optional[int] = None, max_part: Optional[int] = None
) -> Iterator[Partition]:
    """Partitions of `total`, largest first part first."""
    if total < 0:
        return
    if max_length is None:
        max_length = total
    if max_part is None:
        max_part = total
    if total == 0:
        yield EMPTY
        return
    if max_length <= 0:
        return
    for first in range(min(total, max_part), 0, -1):
        # the remaining parts can hold at most first * (max_length - 1) boxes
        if first * max_length < total:
            break
        for rest in partitions(total - first, max_length - 1, first):
            yield (first,) + rest


def partitions_up_to(max_size: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    for total in range(max_size + 1):
        yield from partitions(total, max_length)
