"""Immutable simple undirected graphs and their degree/connectivity invariants.

Vertices are dense integers ``0..n-1``. Every graph also carries one string
label per vertex, taken from the input file (or generated for built-in
families), and labels survive vertex deletion, so a vertex can always be
reported by the name it had in the source data.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence
from functools import cached_property

from attr import dataclass
from scipy.sparse import csgraph
import networkx as nx
import numpy as np
import scipy.sparse as sp

from .exceptions import GraphError, VertexRangeError


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    Args:
        n: Number of vertices.
        adjacency: One strictly increasing neighbor tuple per vertex.
        labels: One label per vertex, in vertex order.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __attrs_post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for {self.n} vertices")
        if len(self.labels) != self.n:
            raise GraphError(f"{len(self.labels)} labels for {self.n} vertices")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for w in nbrs:
                if w <= prev:
                    raise GraphError(f"neighbors of {v} are not strictly increasing")
                if w == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if not 0 <= w < self.n:
                    raise VertexRangeError(w, self.n)
                prev = w
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if v not in self._neighbor_sets[w]:
                    raise GraphError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        """Build a graph from an edge iterable. Duplicates are merged, self-loops rejected."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexRangeError(x, n)
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is None:
            labels = [str(v) for v in range(n)]
        return cls(
            n=n,
            adjacency=tuple(tuple(sorted(s)) for s in nbrs),
            labels=tuple(labels),
        )

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {label: v for v, label in enumerate(self.labels)}

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def adjacency_matrix(self) -> sp.csr_matrix:
        """The 0/1 adjacency matrix as a float CSR matrix."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(self.degrees, out=indptr[1:])
        indices = np.fromiter(
            (w for nbrs in self.adjacency for w in nbrs), dtype=np.int64, count=2 * self.m
        )
        data = np.ones(2 * self.m, dtype=np.float64)
        return sp.csr_matrix((data, indices, indptr), shape=(self.n, self.n))

    def degree(self, v: int) -> int:
        return self.degrees[self._check(v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[self._check(v)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[self._check(u)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise GraphError(f"no vertex labelled {label!r}") from None

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def _check(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise VertexRangeError(v, self.n)
        return v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class DegreeStats(NamedTuple):
    max_degree: int
    average_degree: float
    degrees: tuple[int, ...]


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    """Return the subgraph induced by ``keep``, renumbered in the order given."""
    new_id = {}
    for v in keep:
        g._check(v)
        if v in new_id:
            raise GraphError(f"vertex {v} listed twice")
        new_id[v] = len(new_id)
    adjacency = []
    for v in keep:
        adjacency.append(tuple(sorted(new_id[w] for w in g.adjacency[v] if w in new_id)))
    return Graph(
        n=len(keep), adjacency=tuple(adjacency), labels=tuple(g.labels[v] for v in keep)
    )


def delete_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    gone = {g._check(v) for v in removed}
    return induced_subgraph(g, [v for v in range(g.n) if v not in gone])


def delete_vertex(g: Graph, v: int) -> Graph:
    """Return ``G - v``. The input graph is left unchanged."""
    return delete_vertices(g, (v,))


def degree_stats(g: Graph) -> DegreeStats:
    if g.n == 0:
        return DegreeStats(0, 0.0, ())
    return DegreeStats(max(g.degrees), 2 * g.m / g.n, g.degrees)


def connected_components(g: Graph) -> list[list[int]]:
    if g.n == 0:
        return []
    count, labels = csgraph.connected_components(g.adjacency_matrix, directed=False)
    components: list[list[int]] = [[] for _ in range(count)]
    for v, c in enumerate(labels):
        components[c].append(v)
    return components


def is_connected(g: Graph) -> bool:
    # the empty graph counts as connected
    return len(connected_components(g)) <= 1


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) <= 1


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_path(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and max(g.degrees, default=0) <= 2 and is_connected(g)


def is_cycle(g: Graph) -> bool:
    return g.n >= 3 and all(d == 2 for d in g.degrees) and is_connected(g)


def is_star(g: Graph) -> bool:
    return g.n >= 2 and g.m == g.n - 1 and max(g.degrees) == g.n - 1
