"""
Subset Mappers
==============

Defines the protocol the subset scans use to evaluate independent work items,
with a serial implementation and a process-pool implementation. Both return
results in input order so that "first hit" reductions stay deterministic.

Mapped callables must be picklable: module-level functions or
``functools.partial`` objects wrapping them.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from typing import Callable, Iterable, List, Optional, Protocol, TypeVar

LOGGER = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class SubsetMapper(Protocol):
    """Protocol for an order-preserving map over independent work items."""

    workers: int

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply ``fn`` to every item.

        Args:
            fn: Picklable callable
            items: Work items

        Returns:
            Results in the order of ``items``
        """
        ...

    def close(self) -> None:
        ...


class SerialMapper:
    """Evaluate items one by one in the calling process."""

    workers = 1

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        return [fn(item) for item in items]

    def close(self) -> None:
        pass

    def __enter__(self) -> "SerialMapper":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


class PoolMapper:
    """Evaluate items on a ``ProcessPoolExecutor``.

    If the pool breaks (no semaphore support, killed worker) the mapper logs a
    warning and finishes the current and all later maps serially.
    """

    def __init__(self, workers: int, chunksize: int = 32):
        self.workers = workers
        self.chunksize = chunksize
        self._executor: Optional[ProcessPoolExecutor] = ProcessPoolExecutor(max_workers=workers)

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        items = list(items)
        if self._executor is None or len(items) < 2:
            return [fn(item) for item in items]
        try:
            return list(self._executor.map(fn, items, chunksize=self.chunksize))
        except (BrokenProcessPool, OSError) as e:
            LOGGER.warning("process pool unavailable (%s); continuing serially", e)
            self.close()
            return [fn(item) for item in items]

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> "PoolMapper":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def create_mapper(threads: int = 1) -> SubsetMapper:
    """Create a subset mapper for the requested worker count.

    Args:
        threads: Worker processes; values <= 1 select the serial mapper

    Returns:
        PoolMapper, or SerialMapper if ``threads <= 1`` or no pool can start
    """
    if threads <= 1:
        return SerialMapper()
    try:
        return PoolMapper(threads)
    except (OSError, NotImplementedError, ValueError) as e:
        LOGGER.warning("cannot start %d worker processes (%s); using serial mapper", threads, e)
        return SerialMapper()


def resolve_mapper(mapper: Optional[SubsetMapper]) -> SubsetMapper:
    """Return ``mapper`` or a serial mapper when none is given."""
    return SerialMapper() if mapper is None else mapper
