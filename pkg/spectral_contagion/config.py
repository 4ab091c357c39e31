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

from typing import Any
import os

from mautrix.util.config import BaseFileConfig, ConfigUpdateHelper

from contagionlib import EigenSettings

WORKERS_ENV = "SPECTRAL_CONTAGION_WORKERS"


class ConfigValueError(ValueError):
    def __init__(self, key: str, value: Any, expected: str) -> None:
        self.key = key
        super().__init__(f"invalid value {value!r} for {key}: {expected}")


class Config(BaseFileConfig):
    def do_update(self, helper: ConfigUpdateHelper) -> None:
        copy, copy_dict, base = helper

        copy("eigen.tolerance")
        copy("eigen.max_iterations")
        copy("eigen.shift")

        copy("chromatic.time_budget")

        copy("simulation.repetitions")
        copy("simulation.days")
        copy("simulation.seed")

        copy("vaccination.trials")
        copy("vaccination.seed")

        copy("workers")
        copy("output.float_format")

        copy_dict("logging", override_existing_map=True)

    def check_values(self) -> None:
        """Reject values the library would only refuse later, mid-computation.

        Raises:
            ConfigValueError: A value is out of range.
        """
        seed_range = range(2**64)
        checks = (
            ("eigen.tolerance", _number, lambda v: v > 0, "must be positive"),
            ("eigen.max_iterations", _integer, lambda v: v >= 1, "must be >= 1"),
            ("eigen.shift", _number, lambda v: v >= 0, "must not be negative"),
            ("chromatic.time_budget", _number, lambda v: v > 0, "must be positive"),
            ("simulation.repetitions", _integer, lambda v: v >= 1, "must be >= 1"),
            ("simulation.days", _integer, lambda v: v >= 1, "must be >= 1"),
            ("simulation.seed", _integer, seed_range.__contains__, "must fit in 64 bits"),
            ("vaccination.trials", _integer, lambda v: v >= 1, "must be >= 1"),
            ("vaccination.seed", _integer, seed_range.__contains__, "must fit in 64 bits"),
            ("workers", _integer, lambda v: v >= 1, "must be >= 1"),
        )
        for key, convert, ok, expected in checks:
            if not ok(convert(self[key])):
                raise ConfigValueError(key, self[key], expected)
        try:
            format(0.5, self["output.float_format"])
        except (TypeError, ValueError):
            raise ConfigValueError(
                "output.float_format", self["output.float_format"], "must be a float format spec"
            ) from None

    @property
    def eigen_settings(self) -> EigenSettings:
        return EigenSettings(
            tolerance=float(self["eigen.tolerance"]),
            max_iterations=int(self["eigen.max_iterations"]),
            shift=float(self["eigen.shift"]),
        )

    def default_workers(self) -> int:
        """The worker count from the environment, falling back to the config file.

        Raises:
            ConfigValueError: The environment variable is not a positive integer.
        """
        env = os.environ.get(WORKERS_ENV)
        if env is None:
            return int(self["workers"])
        try:
            workers = int(env)
        except ValueError:
            workers = 0
        if workers < 1:
            raise ConfigValueError(WORKERS_ENV, env, "must be a positive integer")
        return workers


def _number(value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        return float("nan")
    return float(value)


def _integer(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        return -1
    return value
