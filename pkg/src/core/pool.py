import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

from src.core.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """Apply fn to items, in a process pool when THREADS > 1. Results keep input order."""
    items = list(items)
    if not settings.parallel or len(items) < 2:
        return [fn(item) for item in items]
    workers = min(settings.THREADS, len(items))
    logger.debug("dispatching %d jobs to %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
