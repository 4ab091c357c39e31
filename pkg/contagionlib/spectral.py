"""Largest adjacency eigenvalue λ₁(G) and the principal eigenvector.

The solver is power iteration on the shifted operator ``x -> A x + shift * x``.
Every eigenvalue of A is at least -λ₁, so with a positive shift the dominant
eigenvalue of the shifted operator is λ₁ + shift, also for bipartite graphs
where ±λ₁ would otherwise tie. The iteration always starts from the uniform
unit vector and stops once the ∞-norm eigen-residual ``‖A x - λ x‖∞`` drops
to the tolerance, so results are deterministic and certify the residual they
report.
"""

from __future__ import annotations

from concurrent.futures import Executor
from functools import partial
import logging

from attr import dataclass
import numpy as np

from .exceptions import (
    ConvergenceError,
    DisconnectedGraphError,
    GraphError,
    InvalidParameterError,
)
from .graph import Graph, delete_vertex, is_connected, is_regular
from .util import map_ordered
from .vectors import CentralityVector, Measure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenSettings:
    tolerance: float = 1e-10
    max_iterations: int = 100_000
    shift: float = 1.0

    def __attrs_post_init__(self) -> None:
        if not self.tolerance > 0:
            raise InvalidParameterError(f"tolerance must be positive, got {self.tolerance}")
        if self.max_iterations < 1:
            raise InvalidParameterError(
                f"max_iterations must be at least 1, got {self.max_iterations}"
            )
        if not self.shift >= 0:
            raise InvalidParameterError(f"shift must be non-negative, got {self.shift}")


DEFAULT_SETTINGS = EigenSettings()


@dataclass(frozen=True, eq=False)
class SpectralResult:
    lambda1: float
    eigenvector: np.ndarray
    iterations: int
    residual: float


def largest_eigenvalue(g: Graph, settings: EigenSettings = DEFAULT_SETTINGS) -> SpectralResult:
    """Compute λ₁(G) and a unit eigenvector for it.

    Regular graphs (the edgeless graph included) short-circuit to λ₁ = d with
    the uniform vector. For a disconnected graph the result is the largest
    λ₁ over its components.

    Raises:
        GraphError: The graph has no vertices.
        ConvergenceError: The residual stayed above the tolerance for
            ``settings.max_iterations`` steps.
    """
    n = g.n
    if n == 0:
        raise GraphError("λ₁ is undefined for a graph without vertices")
    x = np.full(n, 1 / np.sqrt(n))
    if is_regular(g):
        return SpectralResult(float(g.degrees[0]), x, 0, 0.0)

    a = g.adjacency_matrix
    lam = residual = float("nan")
    for iteration in range(settings.max_iterations + 1):
        y = a @ x
        lam = float(x @ y)
        residual = float(np.max(np.abs(y - lam * x)))
        if residual <= settings.tolerance:
            logger.debug(
                "λ₁ = %.12g after %d iterations (residual %.3g, %r)",
                lam,
                iteration,
                residual,
                g,
            )
            return SpectralResult(lam, x, iteration, residual)
        if iteration == settings.max_iterations:
            break
        y += settings.shift * x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(lam, residual, settings.max_iterations)


def principal_eigenvector(
    g: Graph, settings: EigenSettings = DEFAULT_SETTINGS, require_connected: bool = True
) -> CentralityVector:
    """Eigenvector centrality: the L2-normalized, positive Perron vector of A(G).

    With ``require_connected=False`` a disconnected graph yields the dominant
    eigenvector of the whole matrix, which is zero outside the components that
    attain λ₁.

    Raises:
        DisconnectedGraphError: The graph is disconnected and ``require_connected``
            is set.
    """
    if require_connected and not is_connected(g):
        raise DisconnectedGraphError(str(Measure.EIGENVECTOR))
    vector = largest_eigenvalue(g, settings).eigenvector.copy()
    if vector.sum() < 0:
        vector = -vector
    return CentralityVector(Measure.EIGENVECTOR, vector, g)


def _deck_entry(g: Graph, settings: EigenSettings, v: int) -> SpectralResult:
    try:
        return largest_eigenvalue(delete_vertex(g, v), settings)
    except ConvergenceError as e:
        raise e.for_vertex(v) from e


def vertex_deck(
    g: Graph, settings: EigenSettings = DEFAULT_SETTINGS, executor: Executor | None = None
) -> list[SpectralResult]:
    """Return λ₁(G - v) for every vertex v, in vertex order.

    The n evaluations are independent; when an executor is given they are
    distributed over it and gathered back in vertex order.
    """
    if g.n < 2:
        raise GraphError("the vertex deck needs at least 2 vertices")
    return map_ordered(partial(_deck_entry, g, settings), range(g.n), executor)
