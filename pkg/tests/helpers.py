from hypothesis import strategies as st

from repcontain import repn


def small_partitions(max_size=4, max_length=3):
    """Strategy: weakly decreasing tuples of positive ints."""
    return st.lists(st.integers(1, max_size), max_size=max_length).map(
        lambda parts: tuple(sorted(parts, reverse=True))
    ).filter(lambda lam: sum(lam) <= max_size)


def _merge(terms):
    merged = {}
    for lam, mult in terms:
        merged[lam] = merged.get(lam, 0) + mult
    return merged


def representations(n, max_size=3, max_terms=3):
    """Strategy: canonical Representations of SL(n) with small irreps."""
    term = st.tuples(small_partitions(max_size, n - 1), st.integers(1, 2))
    return st.lists(term, max_size=max_terms).map(lambda terms: repn.from_terms(n, _merge(terms)))


def su2(*dims_with_mult):
    """su2((1, 1), (2, 1), (3, 1)) is iota_1 + iota_2 + iota_3."""
    return repn.from_terms(2, {((d - 1,) if d > 1 else ()): m for d, m in dims_with_mult})
