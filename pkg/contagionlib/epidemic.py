"""Epidemic threshold, outcome prediction, and spectral bounds.

In the non-linear dynamical system (NLDS) model of SIS spread, a contagion
with birth rate p_b and death rate p_d dies out exactly when
p_b / p_d ≤ τ(G) = 1 / λ₁(G). Because λ₁ is bounded below by cheap graph
invariants, those invariants give sufficient conditions for an epidemic to
linger without computing λ₁ at all.
"""

from __future__ import annotations

from typing import Callable, NamedTuple
from enum import Enum
import logging
import math

from attr import dataclass

from .coloring import chromatic_number, clique_number
from .exceptions import GraphError, InvalidParameterError, ThresholdUndefinedError
from .graph import (
    Graph,
    connected_components,
    degree_stats,
    induced_subgraph,
    is_complete,
    is_connected,
    is_cycle,
    is_path,
    is_regular,
    is_star,
)
from .spectral import DEFAULT_SETTINGS, EigenSettings, largest_eigenvalue

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EpidemicParams:
    """Per-day infection probability per infected neighbor (``p_b``) and per-day
    recovery probability (``p_d``).

    Both must lie in the open interval (0, 1). ``strict=False`` admits the
    closed interval, which is only meant for exercising degenerate cases.
    """

    p_b: float
    p_d: float
    strict: bool = True

    def __attrs_post_init__(self) -> None:
        for name in ("p_b", "p_d"):
            value = getattr(self, name)
            if self.strict and not 0 < value < 1:
                raise InvalidParameterError(f"{name} must be in (0, 1), got {value}")
            elif not 0 <= value <= 1:
                raise InvalidParameterError(f"{name} must be in [0, 1], got {value}")


class Outcome(Enum):
    DIE_OUT = "DieOut"
    LINGER = "Linger"

    def __str__(self) -> str:
        return self.value


class Bound(NamedTuple):
    name: str
    kind: str  # "lower" or "upper"
    value: float | None
    equality: bool | None


@dataclass(frozen=True)
class BoundsReport:
    lambda1: float
    bounds: tuple[Bound, ...]

    def __getitem__(self, name: str) -> Bound:
        for bound in self.bounds:
            if bound.name == name:
                return bound
        raise KeyError(name)

    @property
    def lower(self) -> list[Bound]:
        return [b for b in self.bounds if b.kind == "lower"]

    @property
    def upper(self) -> list[Bound]:
        return [b for b in self.bounds if b.kind == "upper"]


@dataclass(frozen=True)
class LingerReport:
    condition_i: bool
    condition_ii: bool
    condition_iii: bool

    @property
    def any_linger(self) -> bool:
        return self.condition_i or self.condition_ii or self.condition_iii


def _positive_lambda1(g: Graph, settings: EigenSettings) -> float:
    if g.m == 0:
        raise ThresholdUndefinedError()
    return largest_eigenvalue(g, settings).lambda1


def epidemic_threshold(g: Graph, settings: EigenSettings = DEFAULT_SETTINGS) -> float:
    """τ(G) = 1 / λ₁(G).

    Raises:
        ThresholdUndefinedError: The graph has no edges.
    """
    return 1 / _positive_lambda1(g, settings)


def predict_outcome(
    g: Graph, p: EpidemicParams, settings: EigenSettings = DEFAULT_SETTINGS
) -> Outcome:
    """NLDS prediction: die-out iff p_b / p_d ≤ τ(G), the boundary counting as die-out."""
    lambda1 = _positive_lambda1(g, settings)
    return Outcome.DIE_OUT if p.p_b * lambda1 <= p.p_d else Outcome.LINGER


def critical_death_rate(g: Graph, p_b: float, settings: EigenSettings = DEFAULT_SETTINGS) -> float:
    """The smallest death rate for which the NLDS model predicts die-out."""
    return p_b * _positive_lambda1(g, settings)


def critical_birth_rate(g: Graph, p_d: float, settings: EigenSettings = DEFAULT_SETTINGS) -> float:
    """The largest birth rate for which the NLDS model predicts die-out."""
    return p_d / _positive_lambda1(g, settings)


def _require_bound_hypothesis(g: Graph) -> None:
    if g.n < 2 or g.m < 1:
        raise GraphError("the eigenvalue bounds need n >= 2 and at least one edge")


def _has_component(g: Graph, predicate: Callable[[Graph], bool]) -> bool:
    return any(predicate(induced_subgraph(g, c)) for c in connected_components(g))


def eigen_bounds(
    g: Graph, settings: EigenSettings = DEFAULT_SETTINGS, chi_budget: float | None = None
) -> BoundsReport:
    """Evaluate the classical lower and upper bounds on λ₁(G).

    Lower: 2m/n, √Δ, χ - 1 and 2 cos(π/(n+1)); upper: Δ and n - 1. Equality
    flags are decided from the graph's structure (regular, star, complete or
    odd cycle, path), checked per component where the bound allows it. The
    √Δ flag also needs λ₁ itself, since a component without a vertex of
    degree Δ can still outgrow the star. The path bound assumes a
    connected graph and is left out (value None) otherwise; the χ - 1 bound is
    left out when the chromatic number search exceeds ``chi_budget`` seconds.
    """
    _require_bound_hypothesis(g)
    lambda1 = largest_eigenvalue(g, settings).lambda1
    stats = degree_stats(g)
    connected = is_connected(g)
    chi = chromatic_number(g, chi_budget)

    sqrt_max = math.sqrt(stats.max_degree)
    # a K_1,Δ component reaches √Δ; no other component may go past it
    sqrt_equal = _has_component(
        g, lambda sub: is_star(sub) and max(sub.degrees) == stats.max_degree
    ) and math.isclose(lambda1, sqrt_max, abs_tol=max(settings.tolerance, 1e-9))
    chromatic_equal = connected and (is_complete(g) or (is_cycle(g) and g.n % 2 == 1))
    bounds = (
        Bound("avg_degree", "lower", stats.average_degree, is_regular(g)),
        Bound("sqrt_max_degree", "lower", sqrt_max, sqrt_equal),
        Bound(
            "chromatic",
            "lower",
            None if chi is None else float(chi - 1),
            None if chi is None else chromatic_equal,
        ),
        Bound(
            "path",
            "lower",
            2 * math.cos(math.pi / (g.n + 1)) if connected else None,
            is_path(g) if connected else None,
        ),
        Bound(
            "max_degree",
            "upper",
            float(stats.max_degree),
            _has_component(g, lambda sub: is_regular(sub) and sub.degrees[0] == stats.max_degree),
        ),
        Bound("complete", "upper", float(g.n - 1), is_complete(g)),
    )
    return BoundsReport(lambda1, bounds)


def lingering_conditions(g: Graph, p: EpidemicParams) -> LingerReport:
    """Sufficient conditions for the NLDS epidemic to linger:
    (i) n·p_d < 2m·p_b, (ii) p_d < p_b·√Δ, (iii) p_d < p_b·(ω - 1).

    Each follows from a lower bound on λ₁, so any of them implies p_d < λ₁·p_b.
    """
    _require_bound_hypothesis(g)
    max_degree = degree_stats(g).max_degree
    omega = clique_number(g)
    return LingerReport(
        condition_i=g.n * p.p_d < 2 * g.m * p.p_b,
        condition_ii=p.p_d < p.p_b * math.sqrt(max_degree),
        condition_iii=p.p_d < p.p_b * (omega - 1),
    )
