import math

from src.core.config import settings
from src.engine.problem import TopData


def working_bound(data: TopData) -> int:
    """Samples r must be strictly above this value."""
    largest = max((abs(a) for a in data.lifts), default=0)
    return math.ceil(settings.RBOUND_FACTOR * (largest + data.rep.m) * (2 * data.g + 1))


def degree_bound(d: int) -> int:
    """Bound on the r-degree of every coefficient of a degree <= d class."""
    return 2 * d


def default_samples(data: TopData, d: int) -> list[int]:
    start = working_bound(data) + 1
    count = degree_bound(d) + 1 + settings.SURPLUS_SAMPLES
    return list(range(start, start + count))
