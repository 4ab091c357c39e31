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

import argparse

from contagionlib import (
    EpidemicParams,
    Measure,
    compute_measure,
    correlation_matrix,
    critical_birth_rate,
    critical_death_rate,
    eigen_bounds,
    epidemic_threshold,
    largest_eigenvalue,
    lingering_conditions,
    predict_outcome,
    vertex_deck,
)

from ..formatter import OutputFormat
from .arguments import (
    eigen_arguments,
    graph_arguments,
    measure_argument,
    output_arguments,
    probability,
)
from .event import CommandEvent
from .handler import command_handler

TABLE_OUTPUT = output_arguments(OutputFormat.CSV, OutputFormat.JSON)


def label_order(labels: tuple[str, ...]) -> list[int]:
    """Vertex indices sorted by label, numeric labels numerically and before the rest."""

    def key(v: int) -> tuple[int, int, str]:
        label = labels[v]
        return (0, int(label), "") if label.isdecimal() else (1, 0, label)

    return sorted(range(len(labels)), key=key)


@command_handler(
    help_text="Compute the largest adjacency eigenvalue λ₁",
    arguments=(graph_arguments, eigen_arguments, TABLE_OUTPUT),
)
def eigen(evt: CommandEvent) -> None:
    result = largest_eigenvalue(evt.graph, evt.settings)
    evt.reply(
        ["lambda1", "residual", "iterations"],
        [[result.lambda1, result.residual, result.iterations]],
        {"lambda1": result.lambda1, "residual": result.residual, "iterations": result.iterations},
        evt.provenance({}),
    )


def _threshold_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p-b", type=probability, required=True, help="birth (infection) rate")
    parser.add_argument("--p-d", type=probability, required=True, help="death (recovery) rate")


@command_handler(
    help_text="Epidemic threshold, NLDS prediction, eigenvalue bounds and lingering conditions",
    arguments=(graph_arguments, _threshold_arguments, eigen_arguments, TABLE_OUTPUT),
)
def threshold(evt: CommandEvent) -> None:
    g, settings = evt.graph, evt.settings
    p = EpidemicParams(evt.args.p_b, evt.args.p_d)
    tau = epidemic_threshold(g, settings)
    outcome = predict_outcome(g, p, settings)
    death_rate = critical_death_rate(g, p.p_b, settings)
    birth_rate = critical_birth_rate(g, p.p_d, settings)
    report = eigen_bounds(g, settings, chi_budget=float(evt.config["chromatic.time_budget"]))
    linger = lingering_conditions(g, p)
    evt.log.info("NLDS prediction for p_b/p_d = %.6g, τ = %.6g: %s", p.p_b / p.p_d, tau, outcome)

    rows = [
        ["lambda1", report.lambda1, None],
        ["tau", tau, None],
        ["p_b", p.p_b, None],
        ["p_d", p.p_d, None],
        ["nlds_prediction", str(outcome), None],
        ["critical_death_rate", death_rate, None],
        ["critical_birth_rate", birth_rate, None],
    ]
    rows += [[f"{b.kind}_bound.{b.name}", b.value, b.equality] for b in report.bounds]
    rows += [
        ["linger.condition_i", linger.condition_i, None],
        ["linger.condition_ii", linger.condition_ii, None],
        ["linger.condition_iii", linger.condition_iii, None],
    ]
    document = {
        "lambda1": report.lambda1,
        "tau": tau,
        "p_b": p.p_b,
        "p_d": p.p_d,
        "nlds_prediction": str(outcome),
        "critical_death_rate": death_rate,
        "critical_birth_rate": birth_rate,
        "bounds": [b._asdict() for b in report.bounds],
        "lingering": {
            "condition_i": linger.condition_i,
            "condition_ii": linger.condition_ii,
            "condition_iii": linger.condition_iii,
            "any": linger.any_linger,
        },
    }
    parameters = {
        "p_b": p.p_b,
        "p_d": p.p_d,
        "chromatic_time_budget": float(evt.config["chromatic.time_budget"]),
    }
    evt.reply(["quantity", "value", "equality"], rows, document, evt.provenance(parameters))


def _deck_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--deck", action="store_true", help="also emit λ₁(G - v) for every vertex v"
    )


@command_handler(
    help_text="Per-vertex centrality table",
    arguments=(
        graph_arguments,
        measure_argument("all", allow_all=True),
        _deck_argument,
        eigen_arguments,
        TABLE_OUTPUT,
    ),
)
def centrality(evt: CommandEvent) -> None:
    g, settings = evt.graph, evt.settings
    if evt.args.measure == "all":
        measures = list(Measure)
    else:
        measures = [Measure(evt.args.measure)]
    vectors = [compute_measure(g, m, settings, executor=evt.executor) for m in measures]
    columns = [str(m) for m in measures]
    values = [list(vector.values) for vector in vectors]
    if evt.args.deck:
        columns.append("lambda1_deleted")
        values.append([r.lambda1 for r in vertex_deck(g, settings, evt.executor)])

    order = label_order(g.labels)
    rows = [[g.labels[v], *(column[v] for column in values)] for v in order]
    document = {
        "measures": columns,
        "vertices": [
            {"label": g.labels[v], **{c: column[v] for c, column in zip(columns, values)}}
            for v in order
        ],
    }
    parameters = {"measures": columns[: len(measures)], "deck": evt.args.deck}
    evt.reply(["vertex_label", *columns], rows, document, evt.provenance(parameters))


@command_handler(
    help_text="Spearman rank correlation between spread and the classical centralities",
    arguments=(graph_arguments, eigen_arguments, TABLE_OUTPUT),
)
def correlate(evt: CommandEvent) -> None:
    measures = list(Measure)
    vectors = [
        compute_measure(evt.graph, m, evt.settings, executor=evt.executor) for m in measures
    ]
    matrix = correlation_matrix(vectors)
    names = [str(m) for m in measures]
    rows = [[name, *matrix[i]] for i, name in enumerate(names)]
    document = {"measures": names, "matrix": matrix.tolist()}
    evt.reply(["measure", *names], rows, document, evt.provenance({"measures": names}))
