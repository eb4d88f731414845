"""
Order-preserving chunked map over a thread pool.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterator, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def chunks(items: Sequence[T], size: int) -> Iterator[Sequence[T]]:
    """Split ``items`` into consecutive slices of at most ``size`` elements."""
    for start in range(0, len(items), size):
        yield items[start:start + size]


def ordered_map(fn: Callable[[T], R], jobs: Sequence[T], threads: int = 1) -> List[R]:
    """
    Apply ``fn`` to every job and return results in job order.

    Results are reduced by the caller in that order, so the outcome does not
    depend on scheduling.
    """
    if threads <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, jobs))
