"""Version string recorded in every result's provenance.

Checkouts with git metadata get the short commit appended, so results from
unreleased code can be traced back to the exact source.
"""

from __future__ import annotations

from pathlib import Path
import shutil
import subprocess

from . import __version__


def _git_revision() -> str | None:
    git = shutil.which("git")
    if git is None or not Path(".git").exists():
        return None
    try:
        output = subprocess.check_output(
            [git, "rev-parse", "--short=8", "HEAD"],
            stderr=subprocess.DEVNULL,
            env={"LC_ALL": "C"},
        )
    except (subprocess.SubprocessError, OSError):
        return None
    return output.decode("ascii").strip() or None


git_revision = _git_revision()
version = __version__ if git_revision is None else f"{__version__}+dev.{git_revision}"
