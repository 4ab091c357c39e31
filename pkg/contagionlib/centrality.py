"""Spread centrality, the four classical centralities it is compared against, and
Spearman rank correlation between them.

Conventions follow the usual small-example tables: degree is the raw
degree, closeness is the reciprocal of the total distance (not scaled by
n - 1), and betweenness counts each unordered pair {s, t} once without
normalization.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence
from concurrent.futures import Executor
import logging

from scipy import stats
from scipy.sparse import csgraph
import networkx as nx
import numpy as np

from .exceptions import DisconnectedGraphError, GraphError, UndefinedCorrelationError
from .families import regular_graphs
from .graph import Graph, is_connected
from .spectral import (
    DEFAULT_SETTINGS,
    EigenSettings,
    largest_eigenvalue,
    principal_eigenvector,
    vertex_deck,
)
from .vectors import TIE_TOLERANCE, CentralityVector, Measure

logger = logging.getLogger(__name__)


def spread_centrality(
    g: Graph, settings: EigenSettings = DEFAULT_SETTINGS, executor: Executor | None = None
) -> CentralityVector:
    """σ(v) = λ₁(G) - λ₁(G - v) for every vertex.

    Interlacing makes every σ(v) non-negative; values a rounding error below
    zero are clamped to 0.

    Raises:
        GraphError: The graph has fewer than 2 vertices.
        ConvergenceError: The eigen-solver failed on G or on some G - v (the
            error names the vertex).
    """
    if g.n < 2:
        raise GraphError("spread centrality needs at least 2 vertices")
    lambda1 = largest_eigenvalue(g, settings).lambda1
    deck = np.array([result.lambda1 for result in vertex_deck(g, settings, executor)])
    values = lambda1 - deck
    worst = values.min()
    if worst < -100 * settings.tolerance:
        logger.warning("Clamping spread value %.3g to 0 (larger than solver tolerance)", worst)
    return CentralityVector(Measure.SPREAD, np.clip(values, 0.0, lambda1), g)


def degree_centrality(g: Graph) -> CentralityVector:
    return CentralityVector(Measure.DEGREE, np.array(g.degrees, dtype=np.int64), g)


def closeness_centrality(g: Graph, require_connected: bool = True) -> CentralityVector:
    """Reciprocal total BFS distance ``1 / Σ_u d(v, u)``.

    With ``require_connected=False`` the sum runs over the vertex's own
    component and an isolated vertex scores 0.
    """
    if require_connected and not is_connected(g):
        raise DisconnectedGraphError(str(Measure.CLOSENESS))
    if g.n == 0:
        return CentralityVector(Measure.CLOSENESS, np.zeros(0), g)
    dist = csgraph.shortest_path(g.adjacency_matrix, directed=False, unweighted=True)
    totals = np.where(np.isinf(dist), 0.0, dist).sum(axis=1)
    values = np.divide(1.0, totals, out=np.zeros(g.n), where=totals > 0)
    return CentralityVector(Measure.CLOSENESS, values, g)


def betweenness_centrality(g: Graph) -> CentralityVector:
    """Brandes betweenness, unnormalized, each unordered pair counted once.

    Pairs in different components have no shortest path and contribute 0.
    """
    # networkx halves undirected counts when normalized=False, giving the unordered-pair sum
    scores = nx.betweenness_centrality(g.to_networkx(), normalized=False)
    values = np.array([scores[v] for v in range(g.n)], dtype=np.float64)
    return CentralityVector(Measure.BETWEENNESS, values, g)


def eigenvector_centrality(
    g: Graph, settings: EigenSettings = DEFAULT_SETTINGS, require_connected: bool = True
) -> CentralityVector:
    return principal_eigenvector(g, settings, require_connected)


def compute_measure(
    g: Graph,
    measure: Measure,
    settings: EigenSettings = DEFAULT_SETTINGS,
    strict: bool = True,
    executor: Executor | None = None,
) -> CentralityVector:
    """Evaluate one centrality measure by name.

    ``strict=False`` lets closeness and eigenvector centrality run on
    disconnected graphs (see their ``require_connected`` flags).
    """
    if measure is Measure.SPREAD:
        return spread_centrality(g, settings, executor)
    elif measure is Measure.DEGREE:
        return degree_centrality(g)
    elif measure is Measure.CLOSENESS:
        return closeness_centrality(g, require_connected=strict)
    elif measure is Measure.BETWEENNESS:
        return betweenness_centrality(g)
    elif measure is Measure.EIGENVECTOR:
        return eigenvector_centrality(g, settings, require_connected=strict)
    raise ValueError(f"unknown measure {measure!r}")


def spearman_correlation(a: CentralityVector, b: CentralityVector) -> float:
    """Spearman's ρ with average ranks for ties (Pearson correlation of the ranks).

    Raises:
        UndefinedCorrelationError: Every value on one side is tied.
    """
    if a.graph != b.graph:
        raise ValueError("centrality vectors belong to different graphs")
    if len(a) < 2:
        raise ValueError("rank correlation needs at least 2 vertices")
    ranks_a = stats.rankdata(a.values, method="average")
    ranks_b = stats.rankdata(b.values, method="average")
    if np.ptp(ranks_a) == 0 or np.ptp(ranks_b) == 0:
        raise UndefinedCorrelationError()
    rho = np.corrcoef(ranks_a, ranks_b)[0, 1]
    return float(np.clip(rho, -1.0, 1.0))


def correlation_matrix(vectors: Sequence[CentralityVector]) -> np.ndarray:
    """Symmetric matrix of pairwise Spearman coefficients with a unit diagonal."""
    k = len(vectors)
    matrix = np.eye(k)
    for i in range(k):
        for j in range(i + 1, k):
            matrix[i, j] = matrix[j, i] = spearman_correlation(vectors[i], vectors[j])
    return matrix


class SeparationWitness(NamedTuple):
    graph: Graph
    eigenvector: CentralityVector
    spread: CentralityVector

    @property
    def spread_levels(self) -> list[float]:
        levels: list[float] = []
        for value in sorted(self.spread.values, reverse=True):
            if not levels or levels[-1] - value > TIE_TOLERANCE:
                levels.append(float(value))
        return levels


def regular_separation_search(
    n: int = 8, degree: int = 3, settings: EigenSettings = DEFAULT_SETTINGS
) -> list[SeparationWitness]:
    """Find every connected ``degree``-regular graph on ``n`` vertices (up to
    isomorphism) whose eigenvector centrality is uniform but whose spread
    centrality is not.

    Regular graphs always have a uniform Perron vector, so this shows spread
    centrality tells apart vertices that eigenvector centrality cannot.
    """
    witnesses = []
    for g in regular_graphs(n, degree, connected=True):
        eigenvector = principal_eigenvector(g, settings)
        if np.ptp(eigenvector.values) > TIE_TOLERANCE:
            continue
        spread = spread_centrality(g, settings)
        witness = SeparationWitness(g, eigenvector, spread)
        if len(witness.spread_levels) >= 2:
            logger.debug("Regular graph %s separates: %s", g.adjacency, witness.spread_levels)
            witnesses.append(witness)
    return witnesses
