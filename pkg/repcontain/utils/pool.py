from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Tuple, TypeVar

T = TypeVar("T")
R = TypeVar("R")

# Candidates submitted per round in first_success
_CHUNK = 64


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(fn, items))


def first_success(
    fn: Callable[[T], R], items: Iterable[T], threads: int = 1
) -> Optional[Tuple[T, R]]:
    """First item, in input order, whose result is truthy.

    Items are consumed lazily in chunks so a long enumeration stops early.
    """
    iterator = iter(items)
    if threads <= 1:
        for item in iterator:
            result = fn(item)
            if result:
                return item, result
        return None
    with ThreadPoolExecutor(max_workers=threads) as executor:
        while True:
            chunk = []
            for item in iterator:
                chunk.append(item)
                if len(chunk) >= _CHUNK:
                    break
            if not chunk:
                return None
            for item, result in zip(chunk, executor.map(fn, chunk)):
                if result:
                    return item, result
