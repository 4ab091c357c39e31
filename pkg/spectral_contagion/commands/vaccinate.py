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

from contagionlib import Measure, compare_methods, vaccinate_batch, vaccinate_greedy

from ..formatter import OutputFormat
from .arguments import (
    eigen_arguments,
    graph_arguments,
    measure_argument,
    output_arguments,
    positive_int,
    seed,
)
from .event import CommandEvent, UsageError
from .handler import command_handler

METHODS = {"batch": vaccinate_batch, "greedy": vaccinate_greedy}


def _vaccinate_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--method",
        choices=[*METHODS, "compare"],
        default="compare",
        help="batch top-k removal, greedy one-at-a-time removal, or both over several trials",
    )
    parser.add_argument("-k", type=positive_int, required=True, help="number of vaccine doses")
    parser.add_argument(
        "--trials", type=positive_int, metavar="<n>", help="tie-break randomizations (compare)"
    )
    parser.add_argument("--seed", type=seed, metavar="<seed>", help="tie-break seed")


@command_handler(
    help_text="Remove k vertices by centrality and report the residual λ₁",
    arguments=(
        graph_arguments,
        measure_argument("spread"),
        _vaccinate_arguments,
        eigen_arguments,
        output_arguments(OutputFormat.CSV, OutputFormat.JSON),
    ),
)
def vaccinate(evt: CommandEvent) -> None:
    args, g = evt.args, evt.graph
    if not args.k < g.n:
        raise UsageError(f"-k must be less than the number of vertices ({g.n})")
    measure = Measure(args.measure)
    master_seed = args.seed if args.seed is not None else int(evt.config["vaccination.seed"])
    parameters = {"method": args.method, "measure": str(measure), "k": args.k}

    if args.method != "compare":
        report = METHODS[args.method](g, measure, args.k, master_seed, evt.settings, evt.executor)
        labels = ["", *report.removed]
        rows = [[i, labels[i], lam] for i, lam in enumerate(report.lambda1_trajectory)]
        document = {
            "method": str(report.method),
            "measure": str(report.measure),
            "k": report.k,
            "removed": list(report.removed),
            "lambda1_trajectory": list(report.lambda1_trajectory),
            "tie_seed": report.tie_seed,
        }
        provenance = evt.provenance(parameters, {"tie_seed": report.tie_seed})
        evt.reply(["step", "removed_label", "lambda1"], rows, document, provenance)
        return

    trials = args.trials or int(evt.config["vaccination.trials"])
    summary = compare_methods(g, measure, args.k, trials, master_seed, evt.settings, evt.executor)
    evt.log.info("Greedy matched or beat batch in %d of %d trials", summary.greedy_wins, trials)
    methods = {"batch": summary.batch, "greedy": summary.greedy}
    rows = [[name, s.mean, s.std, s.min, s.max] for name, s in methods.items()]
    document = {
        "measure": str(summary.measure),
        "k": summary.k,
        "trials": summary.trials,
        **{
            name: {"mean": s.mean, "std": s.std, "min": s.min, "max": s.max}
            for name, s in methods.items()
        },
        "greedy_wins": summary.greedy_wins,
    }
    seeds = {"master_seed": master_seed, "tie_seeds": list(summary.tie_seeds)}
    provenance = evt.provenance({**parameters, "trials": trials}, seeds)
    evt.reply(["method", "mean", "std", "min", "max"], rows, document, provenance)
