"""Ordered parallel map over independent jobs (one job per seed, shape, ...)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "CHROMADEPTH_THREADS"


def pool_size() -> int:
    cap = os.environ.get(THREADS_ENV)
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer") from None
    return n


def parallel_map(fn: Callable[[T], R], items: Iterable[T], chunksize: int = 8) -> List[R]:
    """``[fn(x) for x in items]``, spread over worker processes when more than one is allowed.

    Results come back in input order, so reductions stay deterministic.
    """
    items = list(items)
    workers = min(pool_size(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))
