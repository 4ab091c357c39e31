from __future__ import annotations

import networkx as nx
import pytest

from contagionlib import Graph, degree_stats
from contagionlib.coloring import (
    chromatic_number,
    clique_number,
    dsatur_coloring,
    find_coloring,
)
from contagionlib.families import complete_bipartite_graph, complete_graph, cycle_graph

from .conftest import from_networkx


def is_proper(g: Graph, colors: list[int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges())


@pytest.mark.parametrize("seed", range(10))
def test_clique_number_matches_networkx(seed: int) -> None:
    nxg = nx.gnp_random_graph(25, 0.3, seed=seed)
    expected = max(len(c) for c in nx.find_cliques(nxg))
    assert clique_number(from_networkx(nxg)) == expected


def test_clique_number_small_cases() -> None:
    assert clique_number(Graph.from_edges(0, [])) == 0
    assert clique_number(Graph.from_edges(4, [])) == 1
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(complete_bipartite_graph(3, 4)) == 2


@pytest.mark.parametrize(
    "g, chi",
    [
        (Graph.from_edges(3, []), 1),
        (complete_graph(5), 5),
        (cycle_graph(6), 2),
        (cycle_graph(7), 3),
        (from_networkx(nx.petersen_graph()), 3),
        (from_networkx(nx.mycielski_graph(4)), 4),
    ],
    ids=["edgeless", "k5", "c6", "c7", "petersen", "grotzsch"],
)
def test_chromatic_number(g: Graph, chi: int) -> None:
    assert chromatic_number(g) == chi
    colors = find_coloring(g, chi)
    assert colors is not None and is_proper(g, colors)
    assert find_coloring(g, chi - 1) is None


def test_dsatur_is_proper(karate: Graph) -> None:
    colors = dsatur_coloring(karate)
    assert is_proper(karate, colors)
    assert max(colors) + 1 <= max(karate.degrees) + 1


def test_chromatic_budget_exhausted(caplog: pytest.LogCaptureFixture) -> None:
    petersen = from_networkx(nx.petersen_graph())
    assert chromatic_number(petersen, time_budget=0.0) is None
    assert "budget" in caplog.text


def test_karate_clique_and_degree(karate: Graph) -> None:
    assert clique_number(karate) == 5
    assert degree_stats(karate).max_degree == 17


def test_house_needs_three_colors(house: Graph) -> None:
    assert clique_number(house) == 3
    assert chromatic_number(house) == 3
    colors = find_coloring(house, 3)
    assert colors is not None and is_proper(house, colors)
    assert find_coloring(house, 2) is None


@pytest.mark.parametrize("seed", range(8))
def test_chromatic_between_clique_and_max_degree(seed: int) -> None:
    g = from_networkx(nx.gnp_random_graph(14, 0.4, seed=seed))
    chi = chromatic_number(g)
    assert chi is not None
    assert clique_number(g) <= chi <= max(g.degrees) + 1
    assert max(dsatur_coloring(g)) + 1 >= chi
