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

from contagionlib import Measure, compute_measure

from ..formatter import OutputFormat, format_dot, format_json, heatmap_document, normalize
from .arguments import eigen_arguments, graph_arguments, measure_argument, output_arguments
from .event import CommandEvent
from .handler import command_handler


@command_handler(
    help_text="Export a centrality heat map as Graphviz DOT or JSON",
    arguments=(
        graph_arguments,
        measure_argument("spread"),
        eigen_arguments,
        output_arguments(OutputFormat.DOT, OutputFormat.JSON, default=OutputFormat.DOT),
    ),
)
def heatmap(evt: CommandEvent) -> None:
    measure = Measure(evt.args.measure)
    vector = compute_measure(evt.graph, measure, evt.settings, executor=evt.executor)
    heat = normalize(vector)
    provenance = evt.provenance({"measure": str(measure)})
    if evt.args.output_format == OutputFormat.JSON:
        text = format_json(heatmap_document(vector, heat), provenance)
    else:
        text = format_dot(vector, heat, provenance)
    evt.envelope(provenance).write(text)
