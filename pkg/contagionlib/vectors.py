"""Per-vertex score vectors shared by the spectral and centrality modules."""

from __future__ import annotations

from enum import Enum

from attr import dataclass
import numpy as np

from .graph import Graph

TIE_TOLERANCE = 1e-9


class Measure(Enum):
    SPREAD = "spread"
    DEGREE = "degree"
    CLOSENESS = "closeness"
    BETWEENNESS = "betweenness"
    EIGENVECTOR = "eigenvector"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class CentralityVector:
    measure: Measure
    values: np.ndarray
    graph: Graph

    def __attrs_post_init__(self) -> None:
        if len(self.values) != self.graph.n:
            raise ValueError(f"{len(self.values)} values for a graph with {self.graph.n} vertices")
        self.values.setflags(write=False)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> float:
        return float(self.values[v])

    def by_label(self) -> dict[str, float]:
        return dict(zip(self.graph.labels, map(float, self.values)))


@dataclass(frozen=True)
class Ranking:
    """Vertices in descending order of value, with groups of (near-)tied vertices."""

    order: tuple[int, ...]
    groups: tuple[tuple[int, ...], ...]


def rank(cv: CentralityVector, tolerance: float = TIE_TOLERANCE) -> Ranking:
    """Stable descending sort; consecutive values within ``tolerance`` of a group's
    first value join that group."""
    values = cv.values
    order = sorted(range(len(values)), key=lambda v: -values[v])
    groups: list[list[int]] = []
    for v in order:
        if groups and values[groups[-1][0]] - values[v] <= tolerance:
            groups[-1].append(v)
        else:
            groups.append([v])
    return Ranking(tuple(order), tuple(tuple(group) for group in groups))
