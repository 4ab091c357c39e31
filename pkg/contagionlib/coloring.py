"""Exact clique and chromatic numbers.

The clique number comes from networkx's maximum clique search, which handles
sparse graphs with a few hundred vertices. The chromatic search is an
iterative-deepening k-colorability test with DSATUR vertex ordering, meant for
graphs up to about 60 vertices, and can be given a time budget.
"""

from __future__ import annotations

import logging
import time

import networkx as nx

from .graph import Graph

logger = logging.getLogger(__name__)


class _BudgetExceeded(Exception):
    pass


def clique_number(g: Graph) -> int:
    """Return ω(G): 0 for the empty graph, 1 for an edgeless one."""
    if g.n == 0:
        return 0
    _, size = nx.max_weight_clique(g.to_networkx(), weight=None)
    return size


class _Coloring:
    def __init__(self, g: Graph, k: int, deadline: float | None) -> None:
        self.g = g
        self.k = k
        self.deadline = deadline
        self.colors = [-1] * g.n
        # conflicts[v][c]: number of colored neighbors of v that have color c
        self.conflicts = [[0] * k for _ in range(g.n)]
        self.saturation = [0] * g.n

    def pick(self) -> int:
        best, best_key = -1, None
        for v in range(self.g.n):
            if self.colors[v] >= 0:
                continue
            key = (self.saturation[v], self.g.degrees[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def assign(self, v: int, c: int) -> None:
        self.colors[v] = c
        for w in self.g.adjacency[v]:
            self.conflicts[w][c] += 1
            if self.conflicts[w][c] == 1:
                self.saturation[w] += 1

    def unassign(self, v: int) -> None:
        c = self.colors[v]
        self.colors[v] = -1
        for w in self.g.adjacency[v]:
            self.conflicts[w][c] -= 1
            if self.conflicts[w][c] == 0:
                self.saturation[w] -= 1

    def search(self, colored: int, used: int) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExceeded()
        if colored == self.g.n:
            return True
        v = self.pick()
        # a fresh color is only ever tried as the next unused one
        for c in range(min(used + 1, self.k)):
            if self.conflicts[v][c]:
                continue
            self.assign(v, c)
            if self.search(colored + 1, max(used, c + 1)):
                return True
            self.unassign(v)
        return False


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR coloring; uses at most Δ(G) + 1 colors."""
    colors = nx.greedy_color(g.to_networkx(), strategy="saturation_largest_first")
    return [colors[v] for v in range(g.n)]


def find_coloring(g: Graph, k: int, time_budget: float | None = None) -> list[int] | None:
    """Return a proper coloring with at most ``k`` colors, or None if there is none.

    Raises:
        TimeoutError: ``time_budget`` seconds passed before the search finished.
    """
    if k < 1:
        return None if g.n else []
    deadline = None if time_budget is None else time.monotonic() + time_budget
    state = _Coloring(g, k, deadline)
    try:
        found = state.search(0, 0)
    except _BudgetExceeded:
        raise TimeoutError(f"{k}-coloring search exceeded {time_budget} seconds") from None
    return state.colors if found else None


def chromatic_number(g: Graph, time_budget: float | None = None) -> int | None:
    """Return χ(G), or None if ``time_budget`` seconds ran out first.

    The search starts at ω(G) and stops below the DSATUR greedy bound, so
    ω(G) ≤ χ(G) ≤ Δ(G) + 1 always holds for the returned value.
    """
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    started = time.monotonic()
    upper = max(dsatur_coloring(g)) + 1
    k = clique_number(g)
    while k < upper:
        remaining = None
        if time_budget is not None:
            remaining = time_budget - (time.monotonic() - started)
            if remaining <= 0:
                break
        try:
            if find_coloring(g, k, remaining) is not None:
                return k
        except TimeoutError:
            break
        k += 1
    else:
        return upper
    logger.warning("Chromatic number search ran out of its %s second budget", time_budget)
    return None
