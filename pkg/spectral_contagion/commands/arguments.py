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

from typing import Callable
from pathlib import Path
import argparse
import math

from contagionlib import Measure

from ..formatter import OutputFormat

MEASURE_CHOICES = [str(m) for m in Measure]


def probability(text: str) -> float:
    """argparse type for a probability strictly between 0 and 1."""
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError(f"must be strictly between 0 and 1, got {text}")
    return value


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {text}")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text}")
    return value


def seed(text: str) -> int:
    try:
        value = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"must fit in 64 bits, got {text}")
    return value


def graph_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--graph",
        metavar="<spec>",
        help="built-in graph: karate, house, kn:<n>, cn:<n>, pn:<n>, sn:<n> or kbt:<r>,<s>",
    )
    source.add_argument("--input", type=Path, metavar="<path>", help="graph file to read")
    parser.add_argument(
        "--format",
        choices=["edgelist", "gml"],
        help="format of --input (default: gml for *.gml files, edgelist otherwise)",
    )


def eigen_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--tolerance",
        type=positive_float,
        metavar="<eps>",
        help="power iteration residual tolerance",
    )
    parser.add_argument(
        "--max-iterations", type=positive_int, metavar="<n>", help="power iteration limit"
    )


def output_arguments(
    *formats: OutputFormat, default: OutputFormat = OutputFormat.CSV
) -> Callable[[argparse.ArgumentParser], None]:
    def add(parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "-o", "--output", type=Path, metavar="<path>", help="write to a file instead of stdout"
        )
        parser.add_argument(
            "--output-format",
            type=OutputFormat,
            choices=list(formats),
            default=default,
            help=f"output format (default: {default})",
        )

    return add


def measure_argument(
    default: str, allow_all: bool = False
) -> Callable[[argparse.ArgumentParser], None]:
    def add(parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--measure",
            choices=MEASURE_CHOICES + (["all"] if allow_all else []),
            default=default,
            help=f"centrality measure (default: {default})",
        )

    return add
