from __future__ import annotations

from pathlib import Path
import io
import json

import numpy as np

from contagionlib import CentralityVector, Measure
from contagionlib.families import path_graph
from spectral_contagion.formatter import (
    InputRef,
    OutputEnvelope,
    OutputFormat,
    Provenance,
    format_csv,
    format_dot,
    format_json,
    heat_color,
    normalize,
)

PROVENANCE = Provenance(
    command="test",
    input=InputRef.from_bytes("inline", "edgelist", b"0 1\n"),
    parameters={"k": 1},
    seeds={"master_seed": 0},
)


def test_heat_color_gradient() -> None:
    assert heat_color(0.0) == "#0000ff"
    assert heat_color(1.0) == "#ff0000"
    assert heat_color(0.5) == "#80007f"
    assert heat_color(1.5) == "#ff0000"


def test_normalize() -> None:
    g = path_graph(3)
    heat = normalize(CentralityVector(Measure.DEGREE, np.array([1, 2, 1]), g))
    assert heat.scores.tolist() == [0.0, 1.0, 0.0]
    assert not heat.constant
    flat = normalize(CentralityVector(Measure.DEGREE, np.array([2, 2, 2]), g))
    assert flat.scores.tolist() == [0.5, 0.5, 0.5]
    assert flat.constant


def test_format_csv_cells() -> None:
    text = format_csv(["a", "b", "c", "d"], [[1, 0.1 + 0.2, True, None]], ".3g")
    assert text == "a,b,c,d\n1,0.3,true,\n"


def test_format_json_appends_provenance() -> None:
    document = json.loads(format_json({"lambda1": np.float64(2.0)}, PROVENANCE))
    assert list(document) == ["lambda1", "provenance"]
    assert document["provenance"]["input"]["sha256"] == PROVENANCE.input.sha256
    assert document["provenance"]["seeds"] == {"master_seed": 0}


def test_format_dot() -> None:
    g = path_graph(3)
    vector = CentralityVector(Measure.DEGREE, np.array([1, 2, 1]), g)
    text = format_dot(vector, normalize(vector), PROVENANCE)
    lines = text.splitlines()
    assert lines[0] == "// {"
    assert 'graph "degree" {' in lines
    assert '    "1" [fillcolor="#ff0000", value="2", score="1.000000"];' in lines
    assert lines[-3:] == ['    "0" -- "1";', '    "1" -- "2";', "}"]


def test_csv_file_gets_sidecar(tmp_path: Path) -> None:
    output = tmp_path / "out.csv"
    envelope = OutputEnvelope(OutputFormat.CSV, output, PROVENANCE)
    envelope.write("a\n1\n")
    assert output.read_text() == "a\n1\n"
    sidecar = json.loads((tmp_path / "out.csv.provenance.json").read_text())
    assert sidecar["command"] == "test"
    assert sidecar["tool"] == "spectral-contagion"


def test_stdout_csv_provenance_goes_to_stderr() -> None:
    envelope = OutputEnvelope(OutputFormat.CSV, None, PROVENANCE)
    assert envelope.sidecar_path is None
    out, err = io.StringIO(), io.StringIO()
    envelope.write("a\n", stdout=out, stderr=err)
    assert out.getvalue() == "a\n"
    assert err.getvalue().count("\n") == 1
    provenance = json.loads(err.getvalue())
    assert provenance["command"] == "test"
    assert provenance["seeds"] == {"master_seed": 0}

    out, err = io.StringIO(), io.StringIO()
    OutputEnvelope(OutputFormat.JSON, None, PROVENANCE).write("{}\n", stdout=out, stderr=err)
    assert err.getvalue() == ""
    assert OutputEnvelope(OutputFormat.JSON, Path("x.json"), PROVENANCE).sidecar_path is None
