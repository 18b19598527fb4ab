"""
Process-pool utilities.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def run_parallel(
    func: Callable[[T], R], items: Iterable[T], jobs: int = 1, chunksize: int = 16
) -> List[R]:
    """
    Map a picklable function over items, in input order.

    Args:
        func (Callable[[T], R]): Top-level function applied to each item.
        items (Iterable[T]): Work items.
        jobs (int): Worker processes; 1 runs inline.
        chunksize (int): Items handed to a worker at a time.

    Returns:
        List[R]: Results in the same order as `items`.
    """
    if jobs <= 1:
        return [func(item) for item in items]

    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, items, chunksize=chunksize))
