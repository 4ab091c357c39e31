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

from pathlib import Path
import argparse

from contagionlib import (
    EpidemicCurve,
    EpidemicParams,
    SimulationConfig,
    seed_deviation,
    simulate as run_simulation,
    tail_mean,
)

from ..formatter import OutputEnvelope, OutputFormat, format_csv, format_json
from .arguments import graph_arguments, output_arguments, positive_int, probability, seed
from .event import CommandEvent, UsageError
from .handler import command_handler

TAIL_DAYS = 10
STREAM_DERIVATION = "random.Random(SeedSequence(master_seed, spawn_key=(v, k)).generate_state(1))"


def _simulate_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p-b", type=probability, required=True, help="birth (infection) rate")
    parser.add_argument(
        "--p-d",
        type=probability,
        nargs="+",
        required=True,
        help="death (recovery) rate; several values give one curve each",
    )
    parser.add_argument(
        "-K", "--repetitions", type=positive_int, metavar="<K>", help="runs per seed vertex"
    )
    parser.add_argument("-T", "--days", type=positive_int, metavar="<T>", help="days per run")
    parser.add_argument("--seed", type=seed, metavar="<seed>", help="master random seed")
    parser.add_argument(
        "--seed-vertex",
        action="append",
        metavar="<label>",
        help="start runs only from this vertex (repeatable; default: every vertex)",
    )
    parser.add_argument(
        "--per-seed", action="store_true", help="also emit the per-seed-vertex curves S_{t,v}"
    )


def curve_path(base: Path, p_d: float) -> Path:
    return base.with_name(f"{base.stem}_pd{p_d:g}{base.suffix}")


def curve_table(evt: CommandEvent, curve: EpidemicCurve) -> str:
    labels = evt.graph.labels
    header = ["day", "S_t"]
    columns = [curve.s_t]
    if curve.per_seed is not None:
        header += [f"S_t_{labels[v]}" for v in curve.seeds]
        columns += list(curve.per_seed)
    rows = ([day, *(column[i] for column in columns)] for i, day in enumerate(curve.days))
    return format_csv(header, rows, evt.float_format)


def curve_document(evt: CommandEvent, curve: EpidemicCurve) -> dict:
    labels = evt.graph.labels
    document = {
        "p_b": curve.config.params.p_b,
        "p_d": curve.config.params.p_d,
        "tail_mean": tail_mean(curve, TAIL_DAYS),
        "S_t": curve.s_t,
    }
    if curve.per_seed is not None:
        document["per_seed"] = {labels[v]: row for v, row in zip(curve.seeds, curve.per_seed)}
    return document


@command_handler(
    help_text="Average SIS infection curves S_t over every seed vertex and repetition",
    arguments=(
        graph_arguments,
        _simulate_arguments,
        output_arguments(OutputFormat.CSV, OutputFormat.JSON),
    ),
)
def simulate(evt: CommandEvent) -> None:
    args, config = evt.args, evt.config
    fmt, output = args.output_format, args.output
    if fmt == OutputFormat.CSV and len(args.p_d) > 1 and output is None:
        raise UsageError("several --p-d values with CSV output need --output")

    g = evt.graph
    seed_vertices = None
    if args.seed_vertex:
        seed_vertices = tuple(g.index_of(label) for label in args.seed_vertex)
    repetitions = args.repetitions or int(config["simulation.repetitions"])
    days = args.days or int(config["simulation.days"])
    master_seed = args.seed if args.seed is not None else int(config["simulation.seed"])

    curves = []
    for p_d in args.p_d:
        cfg = SimulationConfig(
            params=EpidemicParams(args.p_b, p_d),
            repetitions=repetitions,
            days=days,
            master_seed=master_seed,
            seed_vertices=seed_vertices,
            record_per_seed=args.per_seed,
        )
        curve = run_simulation(g, cfg, evt.executor)
        evt.log.info(
            "p_b=%g p_d=%g: mean S_t over the last %d days is %.4f",
            args.p_b,
            p_d,
            min(TAIL_DAYS, days),
            tail_mean(curve, TAIL_DAYS),
        )
        if args.per_seed:
            evt.log.info("Largest per-seed deviation from S_t: %.4f", seed_deviation(curve))
        curves.append(curve)

    parameters = {
        "p_b": args.p_b,
        "p_d": list(args.p_d),
        "repetitions": repetitions,
        "days": days,
        "seed_vertices": list(args.seed_vertex) if args.seed_vertex else "all",
        "per_seed": args.per_seed,
    }
    seeds = {"master_seed": master_seed, "stream": STREAM_DERIVATION}
    if fmt == OutputFormat.JSON:
        provenance = evt.provenance(parameters, seeds)
        document = {"curves": [curve_document(evt, curve) for curve in curves]}
        evt.envelope(provenance).write(format_json(document, provenance))
        return
    for curve in curves:
        provenance = evt.provenance({**parameters, "p_d": curve.config.params.p_d}, seeds)
        destination = output
        if len(curves) > 1:
            destination = curve_path(output, curve.config.params.p_d)
        OutputEnvelope(fmt, destination, provenance).write(curve_table(evt, curve))
