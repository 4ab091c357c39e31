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
import argparse

from attr import dataclass

from .event import CommandEvent

CommandFunc = Callable[[CommandEvent], None]
ArgumentAdder = Callable[[argparse.ArgumentParser], None]


@dataclass(frozen=True)
class CommandHandler:
    name: str
    func: CommandFunc
    help_text: str
    arguments: tuple[ArgumentAdder, ...]

    def add_parser(self, subparsers: argparse._SubParsersAction) -> None:
        parser = subparsers.add_parser(self.name, help=self.help_text, description=self.help_text)
        for add_arguments in self.arguments:
            add_arguments(parser)
        parser.set_defaults(handler=self)


command_handlers: dict[str, CommandHandler] = {}


def command_handler(
    *, name: str | None = None, help_text: str, arguments: tuple[ArgumentAdder, ...] = ()
) -> Callable[[CommandFunc], CommandFunc]:
    """Register a subcommand. The function name, dashed, is the default command name."""

    def decorator(func: CommandFunc) -> CommandFunc:
        handler = CommandHandler(
            name=name or func.__name__.replace("_", "-"),
            func=func,
            help_text=help_text,
            arguments=arguments,
        )
        command_handlers[handler.name] = handler
        return func

    return decorator
