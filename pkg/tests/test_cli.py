from __future__ import annotations

from pathlib import Path
import hashlib
import json
import logging

import pytest

pytest.importorskip("mautrix")

from spectral_contagion import __version__
from spectral_contagion.__main__ import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, SpectralContagion
from spectral_contagion.config import WORKERS_ENV
from spectral_contagion.version import git_revision, version


@pytest.fixture(autouse=True)
def restore_logging():
    names = ("", "contagionlib", "spectral_contagion")
    handlers = logging.root.handlers[:]
    levels = {name: logging.getLogger(name).level for name in names}
    yield
    logging.root.handlers[:] = handlers
    for name, level in levels.items():
        logging.getLogger(name).setLevel(level)


def run(*argv: str) -> int:
    return SpectralContagion().run(list(argv))


def table(text: str) -> dict[str, list[str]]:
    return {line.split(",")[0]: line.split(",")[1:] for line in text.splitlines()[1:]}


def test_eigen(capsys) -> None:
    assert run("eigen", "--graph", "kn:5") == EXIT_OK
    out, err = capsys.readouterr()
    provenance = json.loads(next(line for line in err.splitlines() if line.startswith("{")))
    assert provenance["command"] == "eigen"
    assert provenance["input"]["kind"] == "named"
    assert out.splitlines()[0] == "lambda1,residual,iterations"
    assert out.splitlines()[1].startswith("4,")


def test_eigen_json_carries_provenance(capsys) -> None:
    assert run("eigen", "--graph", "karate", "--output-format", "json") == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["lambda1"] == pytest.approx(6.7257, abs=1e-4)
    provenance = document["provenance"]
    assert provenance["tool"] == "spectral-contagion"
    assert provenance["command"] == "eigen"
    assert provenance["input"]["kind"] == "named"
    assert provenance["parameters"]["eigen"]["tolerance"] == 1e-10


def test_eigen_settings_from_arguments(capsys) -> None:
    args = ["eigen", "--graph", "karate", "--output-format", "json", "--tolerance", "1e-6"]
    assert run(*args, "--max-iterations", "5000") == EXIT_OK
    eigen = json.loads(capsys.readouterr().out)["provenance"]["parameters"]["eigen"]
    assert eigen["tolerance"] == 1e-6
    assert eigen["max_iterations"] == 5000


def test_threshold_die_out(capsys) -> None:
    assert run("threshold", "--graph", "karate", "--p-b", "0.05", "--p-d", "0.4") == EXIT_OK
    rows = table(capsys.readouterr().out)
    assert rows["nlds_prediction"] == ["DieOut", ""]
    assert float(rows["tau"][0]) == pytest.approx(1 / 6.7257, rel=1e-3)
    assert rows["upper_bound.complete"] == ["33", "false"]
    assert rows["linger.condition_i"] == ["false", ""]


def test_threshold_linger(capsys) -> None:
    assert run("threshold", "--graph", "karate", "--p-b", "0.05", "--p-d", "0.2") == EXIT_OK
    rows = table(capsys.readouterr().out)
    assert rows["nlds_prediction"][0] == "Linger"
    assert rows["linger.condition_i"][0] == "true"


def test_threshold_equality_flags(capsys) -> None:
    assert run("threshold", "--graph", "pn:5", "--p-b", "0.1", "--p-d", "0.1") == EXIT_OK
    rows = table(capsys.readouterr().out)
    assert rows["lower_bound.path"][1] == "true"
    assert rows["lower_bound.avg_degree"][1] == "false"


def test_centrality_table(capsys) -> None:
    assert run("centrality", "--graph", "sn:4", "--measure", "degree", "--deck") == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "vertex_label,degree,lambda1_deleted"
    assert lines[1] == "0,3,0"
    assert lines[2] == "1,1,1.414213562"


def test_centrality_input_file(tmp_path: Path, capsys) -> None:
    data = b"# two triangles sharing a vertex\na b\nb c\nc a\nc d\nd e\ne c\n"
    path = tmp_path / "bowtie.txt"
    path.write_bytes(data)
    args = ["centrality", "--input", str(path), "--measure", "degree"]
    assert run(*args, "--output-format", "json") == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    degrees = {vertex["label"]: vertex["degree"] for vertex in document["vertices"]}
    assert degrees == {"a": 2, "b": 2, "c": 4, "d": 2, "e": 2}
    assert document["provenance"]["input"] == {
        "source": str(path),
        "kind": "edgelist",
        "sha256": hashlib.sha256(data).hexdigest(),
    }


def test_closeness_on_disconnected_graph_fails(tmp_path: Path, capsys) -> None:
    path = tmp_path / "split.txt"
    path.write_text("0 1\n2 3\n3 4\n")
    assert run("centrality", "--input", str(path), "--measure", "closeness") == EXIT_FAILURE
    assert "error:" in capsys.readouterr().err


def test_correlate(capsys) -> None:
    assert run("correlate", "--graph", "karate", "--output-format", "json") == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["measures"][0] == "spread"
    for i, row in enumerate(document["matrix"]):
        assert row[i] == pytest.approx(1)


def test_simulate_single_day(capsys) -> None:
    args = ["simulate", "--graph", "kn:3", "--p-b", "0.5", "--p-d", "0.5", "-K", "1", "-T", "1"]
    assert run(*args) == EXIT_OK
    assert capsys.readouterr().out == "day,S_t\n1,1\n"


def test_simulate_is_byte_deterministic(capsys) -> None:
    args = ["simulate", "--graph", "karate", "--p-b", "0.1", "--p-d", "0.3", "-K", "3", "-T", "20"]
    assert run(*args) == EXIT_OK
    first = capsys.readouterr().out
    assert run(*args, "--seed", "0") == EXIT_OK
    assert capsys.readouterr().out == first
    assert run("--workers", "2", *args) == EXIT_OK
    assert capsys.readouterr().out == first
    assert run(*args, "--seed", "1") == EXIT_OK
    assert capsys.readouterr().out != first


def test_simulate_per_seed_columns(capsys) -> None:
    args = ["simulate", "--graph", "sn:4", "--p-b", "0.3", "--p-d", "0.3", "-K", "2", "-T", "3"]
    assert run(*args, "--per-seed", "--seed-vertex", "0", "--seed-vertex", "2") == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "day,S_t,S_t_0,S_t_2"


def test_simulate_writes_sidecars(tmp_path: Path) -> None:
    output = tmp_path / "curve.csv"
    args = ["simulate", "--graph", "kn:4", "--p-b", "0.2", "--p-d", "0.2", "0.4", "-T", "5"]
    assert run(*args, "-K", "2", "-o", str(output)) == EXIT_OK
    for p_d in ("0.2", "0.4"):
        curve = tmp_path / f"curve_pd{p_d}.csv"
        assert curve.read_text().startswith("day,S_t\n1,1\n")
        sidecar = json.loads((tmp_path / f"curve_pd{p_d}.csv.provenance.json").read_text())
        assert sidecar["command"] == "simulate"
        assert sidecar["parameters"]["p_d"] == float(p_d)
        assert sidecar["seeds"]["master_seed"] == 0
    assert not output.exists()


def test_simulate_several_curves_to_stdout_is_a_usage_error(capsys) -> None:
    args = ["simulate", "--graph", "kn:4", "--p-b", "0.2", "--p-d", "0.2", "0.4"]
    assert run(*args) == EXIT_USAGE
    assert "--output" in capsys.readouterr().err


def test_simulate_json_curves(capsys) -> None:
    args = ["simulate", "--graph", "kn:4", "--p-b", "0.2", "--p-d", "0.2", "0.4", "-T", "4"]
    assert run(*args, "-K", "2", "--output-format", "json") == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert [curve["p_d"] for curve in document["curves"]] == [0.2, 0.4]
    assert all(len(curve["S_t"]) == 4 for curve in document["curves"])


def test_vaccinate_single_method(capsys) -> None:
    args = ["vaccinate", "--graph", "karate", "--measure", "degree", "-k", "3"]
    assert run(*args, "--method", "greedy") == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "step,removed_label,lambda1"
    assert lines[1].startswith("0,,6.72")
    assert lines[2].startswith("1,33,")
    assert len(lines) == 5


def test_vaccinate_compare(capsys) -> None:
    args = ["vaccinate", "--graph", "kn:6", "--measure", "degree", "-k", "2", "--trials", "2"]
    assert run(*args) == EXIT_OK
    out = capsys.readouterr().out
    assert out == "method,mean,std,min,max\nbatch,3,0,3,3\ngreedy,3,0,3,3\n"


def test_vaccinate_k_must_leave_a_vertex(capsys) -> None:
    assert run("vaccinate", "--graph", "kn:5", "-k", "5") == EXIT_USAGE


def test_heatmap_dot(capsys) -> None:
    assert run("heatmap", "--graph", "karate") == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("// {")
    assert 'graph "spread" {' in out
    assert '    "33" [fillcolor="#ff0000"' in out
    assert '    "0" -- "1";' in out


def test_heatmap_constant_vector(capsys) -> None:
    assert run("heatmap", "--graph", "kn:4", "--measure", "degree") == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.count('fillcolor="#80007f"') == 4
    assert "is constant" in captured.err


@pytest.mark.parametrize(
    "argv",
    [
        ["threshold", "--graph", "karate", "--p-b", "0.05", "--p-d", "1.5"],
        ["threshold", "--graph", "karate", "--p-b", "0", "--p-d", "0.5"],
        ["eigen"],
        ["eigen", "--graph", "karate", "--input", "karate.txt"],
        ["nonsense"],
        ["--workers", "0", "eigen", "--graph", "karate"],
        ["eigen", "--graph", "kn:3", "--tolerance", "0"],
        ["eigen", "--graph", "kn:3", "--tolerance", "nan"],
        ["eigen", "--graph", "kn:3", "--max-iterations", "0"],
    ],
)
def test_usage_errors(argv: list[str], capsys) -> None:
    assert run(*argv) == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["threshold", "--graph", "kn:1", "--p-b", "0.1", "--p-d", "0.1"],
        ["eigen", "--graph", "dodecahedron"],
        ["eigen", "--input", "/nonexistent/graph.txt"],
    ],
)
def test_failures(argv: list[str], capsys) -> None:
    assert run(*argv) == EXIT_FAILURE
    assert capsys.readouterr().err.startswith("error:")


def test_config_values_are_checked(tmp_path: Path, capsys) -> None:
    path = tmp_path / "config.yaml"
    path.write_text("workers: 0\n")
    assert run("-c", str(path), "eigen", "--graph", "kn:3") == EXIT_FAILURE
    assert "workers" in capsys.readouterr().err


def test_config_overrides_defaults(tmp_path: Path, capsys) -> None:
    path = tmp_path / "config.yaml"
    path.write_text("simulation:\n    days: 3\n    repetitions: 1\n")
    args = ["simulate", "--graph", "kn:3", "--p-b", "0.5", "--p-d", "0.5"]
    assert run("-c", str(path), *args) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 4


def test_invalid_worker_environment(monkeypatch, capsys) -> None:
    monkeypatch.setenv(WORKERS_ENV, "many")
    assert run("eigen", "--graph", "kn:3") == EXIT_FAILURE
    assert WORKERS_ENV in capsys.readouterr().err


def test_version(capsys) -> None:
    assert run("--version") == EXIT_OK
    assert capsys.readouterr().out.startswith(f"spectral-contagion {__version__}")
    expected = __version__ if git_revision is None else f"{__version__}+dev.{git_revision}"
    assert version == expected
