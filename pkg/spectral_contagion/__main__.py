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

from typing import Sequence
from concurrent.futures import Executor, ProcessPoolExecutor
import argparse
import copy
import logging
import logging.config
import sys

from ruamel.yaml import YAMLError

from contagionlib import ContagionError

from .commands import CommandEvent, UsageError, command_handlers
from .config import Config, ConfigValueError
from .version import version

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class SpectralContagion:
    name = "spectral-contagion"
    module = "spectral_contagion"
    command = "python -m spectral_contagion"
    description = "Spectral epidemic analysis, SIS simulation and vaccination on graphs."
    version = version
    config_class = Config

    parser: argparse.ArgumentParser
    args: argparse.Namespace
    config: Config
    log: logging.Logger

    def __init__(self) -> None:
        self.log = logging.getLogger("spectral_contagion.init")

    @property
    def base_config_path(self) -> str:
        return f"pkg://{self.module}/example-config.yaml"

    def prepare_arg_parser(self) -> None:
        self.parser = argparse.ArgumentParser(prog=self.command, description=self.description)
        self.parser.add_argument(
            "-c", "--config", metavar="<path>", help="config file to read (default: built-in)"
        )
        self.parser.add_argument(
            "-v", "--verbose", action="store_true", help="log debug messages to stderr"
        )
        self.parser.add_argument(
            "--workers",
            type=int,
            metavar="<n>",
            help="worker processes (default: $SPECTRAL_CONTAGION_WORKERS or the config)",
        )
        self.parser.add_argument(
            "--version", action="version", version=f"{self.name} {self.version}"
        )
        subparsers = self.parser.add_subparsers(metavar="<command>", required=True)
        for handler in command_handlers.values():
            handler.add_parser(subparsers)

    def prepare_config(self) -> None:
        self.config = self.config_class(self.args.config, self.base_config_path)
        if self.args.config:
            self.config.load()
        self.config.update(save=False)
        self.config.check_values()

    def prepare_log(self) -> None:
        logging.config.dictConfig(copy.deepcopy(self.config["logging"]))
        if self.args.verbose:
            for name in ("", "contagionlib", "spectral_contagion"):
                logging.getLogger(name).setLevel(logging.DEBUG)

    def workers(self) -> int:
        if self.args.workers is not None:
            if self.args.workers < 1:
                raise UsageError("--workers must be at least 1")
            return self.args.workers
        return self.config.default_workers()

    def dispatch(self) -> None:
        handler = self.args.handler
        workers = self.workers()
        self.log.debug("Running %s with %d worker(s)", handler.name, workers)
        executor: Executor | None = None
        if workers > 1:
            executor = ProcessPoolExecutor(max_workers=workers)
        try:
            handler.func(CommandEvent(self.args, self.config, executor))
        finally:
            if executor is not None:
                executor.shutdown()

    def run(self, argv: Sequence[str] | None = None) -> int:
        """Parse ``argv``, run the selected command and return the process exit code."""
        self.prepare_arg_parser()
        try:
            self.args = self.parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code is None else int(e.code)
        try:
            self.prepare_config()
            self.prepare_log()
            self.dispatch()
        except UsageError as e:
            self.parser.print_usage(sys.stderr)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE
        except (ContagionError, ConfigValueError, YAMLError, OSError, UnicodeDecodeError) as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_FAILURE
        return EXIT_OK


def main() -> None:
    sys.exit(SpectralContagion().run())


if __name__ == "__main__":
    main()
