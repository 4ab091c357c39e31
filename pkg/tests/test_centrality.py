from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
import math

from scipy import stats
import networkx as nx
import numpy as np
import pytest

from contagionlib import (
    CentralityVector,
    DisconnectedGraphError,
    Graph,
    GraphError,
    Measure,
    UndefinedCorrelationError,
    betweenness_centrality,
    closeness_centrality,
    compute_measure,
    correlation_matrix,
    degree_centrality,
    regular_separation_search,
    spearman_correlation,
    spread_centrality,
)
from contagionlib.families import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from contagionlib.vectors import rank

HOUSE_CENTRALITIES = {
    Measure.SPREAD: [0.31, 0.31, 0.86, 0.48, 0.86],
    Measure.DEGREE: [2, 2, 3, 2, 3],
    Measure.CLOSENESS: [0.17, 0.17, 0.2, 0.17, 0.2],
    Measure.BETWEENNESS: [0.5, 0.5, 1.5, 0, 1.5],
    Measure.EIGENVECTOR: [0.36, 0.36, 0.53, 0.43, 0.53],
}


@pytest.mark.parametrize("measure", list(Measure), ids=str)
def test_house_table(house: Graph, measure: Measure) -> None:
    vector = compute_measure(house, measure)
    assert vector.measure is measure
    assert vector.values == pytest.approx(HOUSE_CENTRALITIES[measure], abs=0.006)


def test_house_spread_is_deck_difference(house: Graph) -> None:
    assert spread_centrality(house).values == pytest.approx(
        [2.4812 - 2.1701, 2.4812 - 2.1701, 2.4812 - 1.6180, 2.4812 - 2.0, 2.4812 - 1.6180],
        abs=1e-3,
    )


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13, 21, 40])
def test_closed_forms_complete_and_cycle(n: int) -> None:
    assert spread_centrality(complete_graph(n)).values == pytest.approx(np.ones(n), abs=1e-6)
    expected = 2 * (1 - math.cos(math.pi / n))
    assert spread_centrality(cycle_graph(n)).values == pytest.approx(
        np.full(n, expected), abs=1e-6
    )


@pytest.mark.parametrize("t", [2, 3, 5, 8, 13, 20])
def test_closed_form_complete_bipartite(t: int) -> None:
    expected = t - math.sqrt(t * (t - 1))
    values = spread_centrality(complete_bipartite_graph(t, t)).values
    assert values == pytest.approx(np.full(2 * t, expected), abs=1e-6)


@pytest.mark.parametrize("n", [3, 4, 10, 25, 40])
def test_closed_form_star(n: int) -> None:
    values = spread_centrality(star_graph(n)).values
    assert values[0] == pytest.approx(math.sqrt(n - 1), abs=1e-6)
    leaf = math.sqrt(n - 1) - math.sqrt(n - 2)
    assert values[1:] == pytest.approx(np.full(n - 1, leaf), abs=1e-6)


@pytest.mark.slow
def test_closed_forms_full_range() -> None:
    for n in range(3, 41):
        cycle = spread_centrality(cycle_graph(n)).values
        assert cycle == pytest.approx(np.full(n, 2 * (1 - math.cos(math.pi / n))), abs=1e-6)
        assert spread_centrality(complete_graph(n)).values == pytest.approx(np.ones(n), abs=1e-6)
        star = spread_centrality(star_graph(n)).values
        assert star[0] == pytest.approx(math.sqrt(n - 1), abs=1e-6)
    for t in range(2, 21):
        values = spread_centrality(complete_bipartite_graph(t, t)).values
        assert values == pytest.approx(np.full(2 * t, t - math.sqrt(t * (t - 1))), abs=1e-6)


def test_karate_spread_extremes(karate: Graph) -> None:
    spread = spread_centrality(karate)
    assert (spread.values >= 0).all()
    assert karate.labels[int(spread.values.argmax())] == "33"
    assert karate.labels[int(spread.values.argmin())] == "16"
    assert spread.by_label()["33"] == spread[33]
    assert spread.values.max() == pytest.approx(0.64, abs=0.02)
    assert spread.values.min() == pytest.approx(0.01, abs=0.02)


def test_spread_with_executor_matches(house: Graph) -> None:
    with ThreadPoolExecutor(max_workers=3) as executor:
        parallel = spread_centrality(house, executor=executor)
    assert np.array_equal(parallel.values, spread_centrality(house).values)


def test_spread_needs_two_vertices() -> None:
    with pytest.raises(GraphError):
        spread_centrality(path_graph(1))


def test_edgeless_degree_is_zero() -> None:
    g = Graph.from_edges(4, [])
    assert degree_centrality(g).values.tolist() == [0, 0, 0, 0]
    assert spread_centrality(g).values.tolist() == [0, 0, 0, 0]


def test_closeness_and_betweenness_match_networkx(karate: Graph) -> None:
    nxg = karate.to_networkx()
    reference = nx.closeness_centrality(nxg)
    closeness = closeness_centrality(karate).values * (karate.n - 1)
    assert closeness == pytest.approx([reference[v] for v in range(karate.n)])
    reference = nx.betweenness_centrality(nxg, normalized=True)
    scale = 2 / ((karate.n - 1) * (karate.n - 2))
    betweenness = betweenness_centrality(karate).values * scale
    assert betweenness == pytest.approx([reference[v] for v in range(karate.n)])


def test_disconnected_measures() -> None:
    g = Graph.from_edges(5, [(0, 1), (2, 3), (3, 4)])
    with pytest.raises(DisconnectedGraphError, match="closeness"):
        compute_measure(g, Measure.CLOSENESS)
    with pytest.raises(DisconnectedGraphError, match="eigenvector"):
        compute_measure(g, Measure.EIGENVECTOR)
    loose = compute_measure(g, Measure.CLOSENESS, strict=False)
    assert loose.values == pytest.approx([1, 1, 1 / 3, 1 / 2, 1 / 3])
    isolated = closeness_centrality(Graph.from_edges(3, [(0, 1)]), require_connected=False)
    assert isolated.values[2] == 0


def _vector(values: list[float]) -> CentralityVector:
    return CentralityVector(Measure.DEGREE, np.array(values, dtype=float), path_graph(len(values)))


def test_spearman_with_ties() -> None:
    a = _vector([1, 2, 3, 4])
    b = _vector([1, 2, 3, 3])
    assert spearman_correlation(a, b) == pytest.approx(math.sqrt(0.9))
    assert spearman_correlation(a, _vector([4, 3, 2, 1])) == pytest.approx(-1.0)


def test_spearman_invariant_under_monotone_transform(karate: Graph) -> None:
    spread = compute_measure(karate, Measure.SPREAD)
    degree = compute_measure(karate, Measure.DEGREE)
    stretched = CentralityVector(Measure.DEGREE, np.exp(degree.values), karate)
    assert spearman_correlation(spread, stretched) == pytest.approx(
        spearman_correlation(spread, degree)
    )
    assert spearman_correlation(degree, stretched) == pytest.approx(1.0)


def test_spearman_undefined() -> None:
    with pytest.raises(UndefinedCorrelationError):
        spearman_correlation(_vector([1, 2, 3]), _vector([5, 5, 5]))


def test_correlation_matrix(karate: Graph) -> None:
    vectors = [compute_measure(karate, m) for m in Measure]
    matrix = correlation_matrix(vectors)
    assert np.allclose(matrix, matrix.T)
    assert np.allclose(np.diag(matrix), 1.0)
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            reference = stats.spearmanr(vectors[i].values, vectors[j].values).statistic
            assert matrix[i, j] == pytest.approx(reference)
    spread, closeness, betweenness, eigenvector = (
        list(Measure).index(m)
        for m in (Measure.SPREAD, Measure.CLOSENESS, Measure.BETWEENNESS, Measure.EIGENVECTOR)
    )
    assert matrix[spread, eigenvector] > matrix[spread, closeness]
    assert matrix[spread, eigenvector] > matrix[spread, betweenness]


def test_rank_groups_ties() -> None:
    ranking = rank(_vector([7, 10, 7, 9, 10, 7]))
    assert ranking.order == (1, 4, 3, 0, 2, 5)
    assert ranking.groups == ((1, 4), (3,), (0, 2, 5))


def test_regular_separation_search() -> None:
    witnesses = regular_separation_search(8, 3)
    assert witnesses
    for witness in witnesses:
        assert np.ptp(witness.eigenvector.values) < 1e-9
        levels = witness.spread_levels
        assert len(levels) >= 2
        assert all(0 < level < 3 for level in levels)
