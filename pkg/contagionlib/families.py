"""Built-in graphs: the karate club and house fixtures and the standard families."""

from __future__ import annotations

from typing import Iterable, Iterator
from itertools import combinations

from attr import dataclass
import networkx as nx

from .exceptions import InvalidGraphSpecError
from .graph import Graph

# Zachary's karate club, 0-based. Each vertex lists only its higher-numbered neighbors.
KARATE_ADJACENCY: dict[int, tuple[int, ...]] = {
    0: (1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 17, 19, 21, 31),
    1: (2, 3, 7, 13, 17, 19, 21, 30),
    2: (3, 7, 8, 9, 13, 27, 28, 32),
    3: (7, 12, 13),
    4: (6, 10),
    5: (6, 10, 16),
    6: (16,),
    8: (30, 32, 33),
    9: (33,),
    13: (33,),
    14: (32, 33),
    15: (32, 33),
    18: (32, 33),
    19: (33,),
    20: (32, 33),
    22: (32, 33),
    23: (25, 27, 29, 32, 33),
    24: (25, 27, 31),
    25: (31,),
    26: (29, 33),
    27: (33,),
    28: (31, 33),
    29: (32, 33),
    30: (32, 33),
    31: (32, 33),
    32: (33,),
}
KARATE_VERTICES = 34

# A 4-cycle v1-v2-v5-v3 sharing the edge v3v5 with the triangle v3v4v5.
HOUSE_LABELS = ("v1", "v2", "v3", "v4", "v5")
HOUSE_EDGES = ((0, 1), (0, 2), (1, 4), (2, 3), (3, 4), (2, 4))

FAMILY_ARITY = {
    "karate": 0,
    "house": 0,
    "complete": 1,
    "cycle": 1,
    "path": 1,
    "star": 1,
    "complete_bipartite": 2,
}
FAMILY_MIN_ORDER = {"complete": 1, "path": 1, "cycle": 3, "star": 2}
SPEC_PREFIXES = {
    "kn": "complete",
    "cn": "cycle",
    "pn": "path",
    "sn": "star",
    "kbt": "complete_bipartite",
}


@dataclass(frozen=True)
class NamedGraphSpec:
    family: str
    params: tuple[int, ...] = ()

    def __attrs_post_init__(self) -> None:
        try:
            arity = FAMILY_ARITY[self.family]
        except KeyError:
            raise InvalidGraphSpecError(f"unknown graph family {self.family!r}") from None
        if len(self.params) != arity:
            raise InvalidGraphSpecError(
                f"{self.family} takes {arity} parameter(s), got {len(self.params)}"
            )
        if any(p < 1 for p in self.params):
            raise InvalidGraphSpecError(f"{self.family} parameters must be at least 1")
        min_order = FAMILY_MIN_ORDER.get(self.family, 1)
        if self.params and self.params[0] < min_order:
            raise InvalidGraphSpecError(f"{self.family} needs n >= {min_order}")

    def __str__(self) -> str:
        if not self.params:
            return self.family
        prefix = next(k for k, v in SPEC_PREFIXES.items() if v == self.family)
        return f"{prefix}:{','.join(map(str, self.params))}"


def parse_graph_spec(text: str) -> NamedGraphSpec:
    """Parse a CLI graph spec such as ``karate``, ``kn:8`` or ``kbt:3,4``."""
    text = text.strip().lower()
    if text in ("karate", "house"):
        return NamedGraphSpec(text)
    prefix, sep, rest = text.partition(":")
    if not sep or prefix not in SPEC_PREFIXES:
        raise InvalidGraphSpecError(f"unrecognized graph spec {text!r}")
    try:
        params = tuple(int(part) for part in rest.split(","))
    except ValueError:
        raise InvalidGraphSpecError(f"non-integer parameter in {text!r}") from None
    return NamedGraphSpec(SPEC_PREFIXES[prefix], params)


def build_named(spec: NamedGraphSpec) -> Graph:
    family, params = spec.family, spec.params
    if family == "karate":
        edges = [(u, v) for u, nbrs in KARATE_ADJACENCY.items() for v in nbrs]
        return Graph.from_edges(KARATE_VERTICES, edges)
    elif family == "house":
        return Graph.from_edges(len(HOUSE_LABELS), HOUSE_EDGES, HOUSE_LABELS)
    elif family == "complete":
        return complete_graph(*params)
    elif family == "cycle":
        return cycle_graph(*params)
    elif family == "path":
        return path_graph(*params)
    elif family == "star":
        return star_graph(*params)
    elif family == "complete_bipartite":
        return complete_bipartite_graph(*params)
    raise InvalidGraphSpecError(f"unknown graph family {family!r}")


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, (v + 1) % n) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def star_graph(n: int) -> Graph:
    """``S_n = K_{1,n-1}`` with the center at vertex 0."""
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def complete_bipartite_graph(r: int, s: int) -> Graph:
    return Graph.from_edges(r + s, ((u, r + v) for u in range(r) for v in range(s)))


def regular_graphs(n: int, degree: int, connected: bool = True) -> Iterator[Graph]:
    """Yield every ``degree``-regular graph on ``n`` vertices once up to isomorphism.

    Edges are chosen vertex by vertex, always towards higher-numbered vertices,
    with vertex 0 joined to ``1..degree`` (every regular graph has such a
    labelling). Isomorphic duplicates are filtered with a Weisfeiler-Lehman
    hash followed by an exact isomorphism test. Only practical for small n.
    """
    if degree >= n or n * degree % 2:
        return
    filled = [0] * n
    edges: list[tuple[int, int]] = []
    seen: dict[str, list[nx.Graph]] = {}

    def fill(v: int) -> Iterator[list[tuple[int, int]]]:
        if v == n:
            yield edges
            return
        need = degree - filled[v]
        if v == 0:
            choices: Iterable[tuple[int, ...]] = [tuple(range(1, degree + 1))]
        else:
            choices = combinations([w for w in range(v + 1, n) if filled[w] < degree], need)
        for chosen in choices:
            for w in chosen:
                edges.append((v, w))
                filled[w] += 1
            filled[v] += need
            yield from fill(v + 1)
            filled[v] -= need
            for w in chosen:
                filled[w] -= 1
                edges.pop()

    for found in fill(0):
        candidate = nx.Graph(found)
        if connected and not nx.is_connected(candidate):
            continue
        key = nx.weisfeiler_lehman_graph_hash(candidate)
        bucket = seen.setdefault(key, [])
        if any(nx.is_isomorphic(candidate, other) for other in bucket):
            continue
        bucket.append(candidate)
        yield Graph.from_edges(n, found)
