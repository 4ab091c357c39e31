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

from typing import Any, TextIO
from pathlib import Path
from enum import Enum
import hashlib
import json
import logging
import sys

from attr import dataclass
import attr

from ..version import version as tool_version

log = logging.getLogger(__name__)

TOOL_NAME = "spectral-contagion"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"
    DOT = "dot"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class InputRef:
    """Where the graph came from and a digest of exactly what was read."""

    source: str
    kind: str
    sha256: str

    @classmethod
    def from_bytes(cls, source: str, kind: str, data: bytes) -> InputRef:
        return cls(source, kind, hashlib.sha256(data).hexdigest())


@dataclass(frozen=True)
class Provenance:
    command: str
    input: InputRef | None
    parameters: dict[str, Any] = attr.ib(factory=dict)
    seeds: dict[str, Any] = attr.ib(factory=dict)
    version: str = tool_version

    def serialize(self) -> dict[str, Any]:
        return {
            "tool": TOOL_NAME,
            "version": self.version,
            "command": self.command,
            "input": attr.asdict(self.input) if self.input else None,
            "parameters": self.parameters,
            "seeds": self.seeds,
        }


@dataclass
class OutputEnvelope:
    """One output document and where it goes.

    ``destination`` is None for stdout. CSV written to a file gets its
    provenance in a ``<file>.provenance.json`` sidecar, and CSV on stdout
    gets it as one JSON line on stderr. JSON and DOT carry it inline.
    """

    format: OutputFormat
    destination: Path | None
    provenance: Provenance

    @property
    def sidecar_path(self) -> Path | None:
        if self.format != OutputFormat.CSV or self.destination is None:
            return None
        return self.destination.with_name(self.destination.name + ".provenance.json")

    def write(
        self, text: str, stdout: TextIO | None = None, stderr: TextIO | None = None
    ) -> None:
        if self.destination is None:
            (stdout or sys.stdout).write(text)
            if self.format == OutputFormat.CSV:
                provenance = json.dumps(self.provenance.serialize(), default=_json_default)
                (stderr or sys.stderr).write(provenance + "\n")
            return
        # newline="" keeps the csv module's line endings as written
        with self.destination.open("w", encoding="utf-8", newline="") as file:
            file.write(text)
        log.info("Wrote %s output to %s", self.format, self.destination)
        sidecar = self.sidecar_path
        if sidecar is not None:
            sidecar.write_text(dump_json(self.provenance.serialize()), encoding="utf-8")
            log.debug("Wrote provenance to %s", sidecar)


def dump_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False, default=_json_default) + "\n"


def _json_default(value: Any) -> Any:
    if hasattr(value, "tolist"):
        return value.tolist()
    elif isinstance(value, Enum):
        return value.value
    elif isinstance(value, Path):
        return str(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")
