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

from typing import Any, Iterable, Sequence
from concurrent.futures import Executor
from functools import cached_property
import argparse
import logging

from attr import dataclass
import attr

from contagionlib import (
    EigenSettings,
    Graph,
    build_named,
    parse_edge_list,
    parse_gml,
    parse_graph_spec,
)

from ..config import Config
from ..formatter import (
    InputRef,
    OutputEnvelope,
    OutputFormat,
    Provenance,
    format_csv,
    format_json,
)


class UsageError(Exception):
    """A flag combination that argparse alone cannot reject. Exits with code 2."""


@dataclass(frozen=True)
class LoadedGraph:
    graph: Graph
    input: InputRef


def load_graph(args: argparse.Namespace) -> LoadedGraph:
    """Build the graph selected by ``--graph`` or ``--input``/``--format``."""
    if args.graph is not None:
        if args.format is not None:
            raise UsageError("--format only applies to --input")
        spec = parse_graph_spec(args.graph)
        return LoadedGraph(build_named(spec), InputRef.from_bytes(str(spec), "named", b""))
    fmt = args.format or ("gml" if args.input.suffix.lower() == ".gml" else "edgelist")
    data = args.input.read_bytes()
    parse = parse_gml if fmt == "gml" else parse_edge_list
    result = parse(data.decode("utf-8"))
    return LoadedGraph(result.graph, InputRef.from_bytes(str(args.input), fmt, data))


@dataclass(eq=False)
class CommandEvent:
    args: argparse.Namespace
    config: Config
    executor: Executor | None = None
    log: logging.Logger = attr.ib(factory=lambda: logging.getLogger("spectral_contagion.cmd"))

    @cached_property
    def loaded(self) -> LoadedGraph:
        loaded = load_graph(self.args)
        self.log.debug("Loaded %r from %s", loaded.graph, loaded.input.source)
        return loaded

    @property
    def graph(self) -> Graph:
        return self.loaded.graph

    @cached_property
    def settings(self) -> EigenSettings:
        settings = self.config.eigen_settings
        tolerance = getattr(self.args, "tolerance", None)
        max_iterations = getattr(self.args, "max_iterations", None)
        return EigenSettings(
            tolerance=settings.tolerance if tolerance is None else tolerance,
            max_iterations=settings.max_iterations if max_iterations is None else max_iterations,
            shift=settings.shift,
        )

    @property
    def float_format(self) -> str:
        return self.config["output.float_format"]

    def provenance(
        self, parameters: dict[str, Any], seeds: dict[str, Any] | None = None
    ) -> Provenance:
        return Provenance(
            command=self.args.handler.name,
            input=self.loaded.input,
            parameters={**parameters, "eigen": attr.asdict(self.settings)},
            seeds=seeds or {},
        )

    def envelope(self, provenance: Provenance) -> OutputEnvelope:
        return OutputEnvelope(self.args.output_format, self.args.output, provenance)

    def reply(
        self,
        header: Sequence[str],
        rows: Iterable[Sequence[Any]],
        document: dict[str, Any],
        provenance: Provenance,
    ) -> None:
        """Write a result as a CSV table or a JSON document, per ``--output-format``."""
        envelope = self.envelope(provenance)
        if envelope.format == OutputFormat.JSON:
            text = format_json(document, provenance)
        else:
            text = format_csv(header, rows, self.float_format)
        envelope.write(text)
