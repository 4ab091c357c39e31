# spectral-contagion - Spectral analysis and simulation of contagion on graphs
# Copyright (C) 2026 Spectral Contagion contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
from __future__ import annotations

from typing import NamedTuple
import logging

import numpy as np

from contagionlib import CentralityVector, Graph

from .envelope import Provenance, dump_json

log = logging.getLogger(__name__)

GRADIENT_STEPS = 256


class HeatMap(NamedTuple):
    """Min-max normalized scores in [0, 1]; ``constant`` marks a flat input vector."""

    scores: np.ndarray
    constant: bool


def normalize(vector: CentralityVector) -> HeatMap:
    values = np.asarray(vector.values, dtype=np.float64)
    low, high = values.min(), values.max()
    if high - low <= 0:
        log.warning("%s is constant, coloring every vertex mid-gradient", vector.measure)
        return HeatMap(np.full(len(values), 0.5), True)
    return HeatMap((values - low) / (high - low), False)


def heat_color(score: float) -> str:
    """Blue (0.0) to red (1.0) in 256 steps, as ``#rr00bb``."""
    step = min(GRADIENT_STEPS - 1, max(0, int(round(float(score) * (GRADIENT_STEPS - 1)))))
    return f"#{step:02x}00{GRADIENT_STEPS - 1 - step:02x}"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_dot(vector: CentralityVector, heat: HeatMap, provenance: Provenance) -> str:
    g: Graph = vector.graph
    lines = [f"// {line}" for line in dump_json(provenance.serialize()).splitlines()]
    lines.append(f"graph {_quote(str(vector.measure))} {{")
    lines.append("    node [style=filled];")
    for v, label in enumerate(g.labels):
        lines.append(
            f"    {_quote(label)} [fillcolor={_quote(heat_color(heat.scores[v]))}, "
            f'value="{vector.values[v]:.10g}", score="{heat.scores[v]:.6f}"];'
        )
    for u, v in g.edges():
        lines.append(f"    {_quote(g.labels[u])} -- {_quote(g.labels[v])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def heatmap_document(vector: CentralityVector, heat: HeatMap) -> dict:
    labels = vector.graph.labels
    return {
        "measure": str(vector.measure),
        "constant": heat.constant,
        "vertices": [
            {
                "label": label,
                "value": float(vector.values[v]),
                "score": float(heat.scores[v]),
                "color": heat_color(heat.scores[v]),
            }
            for v, label in enumerate(labels)
        ],
        "edges": [[labels[u], labels[v]] for u, v in vector.graph.edges()],
    }
