from __future__ import annotations

from pathlib import Path
import os

import networkx as nx
import pytest

from contagionlib import Graph, NamedGraphSpec, build_named, parse_gml


def from_networkx(nxg: nx.Graph) -> Graph:
    nodes = list(nxg.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return Graph.from_edges(
        len(nodes), ((index[u], index[v]) for u, v in nxg.edges()), [str(n) for n in nodes]
    )


@pytest.fixture(scope="session")
def karate() -> Graph:
    return build_named(NamedGraphSpec("karate"))


@pytest.fixture(scope="session")
def house() -> Graph:
    return build_named(NamedGraphSpec("house"))


@pytest.fixture(scope="session")
def football() -> Graph:
    path = os.environ.get("FOOTBALL_GML")
    if not path:
        pytest.skip("FOOTBALL_GML is not set")
    return parse_gml(Path(path).read_text(encoding="utf-8")).graph
