from __future__ import annotations

from typing import Callable, Iterable, TypeVar
from concurrent.futures import Executor

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Iterable[T], executor: Executor | None) -> list[R]:
    """Apply ``fn`` to every item, on ``executor`` if given, keeping input order."""
    if executor is None:
        return [fn(item) for item in items]
    return list(executor.map(fn, items))
