import io
import json
import subprocess
import sys

import numpy as np
import pytest

from quaplectic.cli import main
from quaplectic.fockrep import read_matrix_csv, read_spectrum_csv
from quaplectic.liealg import LieAlgebra, builtin_algebra


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_compose_hamilton():
    code, out = run("compose", "--kind", "hamilton", "--p1", "4,5,6", "--p2", "1,2,3")
    assert code == 0 and out == "5 7 12\n"


def test_compose_reciprocal_velocity_addition():
    code, out = run("compose", "--kind", "reciprocal", "--p1", "0.5,0,0", "--p2", "0.5,0,0")
    assert code == 0
    assert [float(x) for x in out.split()] == pytest.approx([0.8, 0, 0], abs=1e-15)


def test_extend_poincare():
    assert run("extend", "--algebra", "poincare13") == (0, "h2_dim 0\n")


def test_null_surface_transform_rejected(capsys):
    code, out = run("transform", "--kind", "reciprocal", "--params", "0.6,0.8,0")
    assert code == 1 and out == ""
    assert "error" in capsys.readouterr().err


def test_transform_prints_full_precision():
    code, out = run("transform", "--kind", "lorentz", "--params", "0.6,0,0")
    rows = [list(map(float, line.split())) for line in out.splitlines()]
    assert rows[0][:2] == [1.25, 0.75]
    code, out = run("transform", "--kind", "lorentz", "--params", "0.1,0,0")
    g = 1 / np.sqrt(1 - 0.01)
    assert float(out.split()[0]) == g  # 17 digits round-trip exactly


def test_transform_frame():
    code, out = run("transform", "--kind", "hamilton", "--params", "1,2,3", "--frame", "1,0,0,0")
    assert out.splitlines()[-1] == "frame 1 1 2 3"


@pytest.mark.parametrize(
    "argv",
    [
        ["compose", "--kind", "hamilton", "--p1", "1,2", "--p2", "1,2,3"],
        ["compose", "--kind", "hamilton", "--p1", "a,b,c", "--p2", "1,2,3"],
        ["compose", "--kind", "bogus", "--p1", "1,2,3", "--p2", "1,2,3"],
        ["rates", "--params", "0.6,0.8,0", "--rates", "1,0,0"],
        ["scales", "--c", "-1"],
        ["jacobi", "--algebra", "nope"],
        ["jacobi"],
        ["contract", "--algebra", "heisenberg1"],
        ["rep-check", "--signature", "1,1", "--cutoff", "2"],
        ["wave", "--cutoff", "6", "--order", "2", "--eps", "1,0"],
        ["frobnicate"],
        ["compose", "--unknown-flag", "1"],
    ],
)
def test_input_errors_exit_1(argv):
    assert run(*argv)[0] == 1


def test_contract_divergence_exit_1():
    # weighting only the center gives [Z+, Z-] = I a negative degree
    code, _ = run("contract", "--algebra", "heisenberg1", "--weights", "0,0,1")
    assert code == 1
    code, out = run("contract", "--algebra", "heisenberg1", "--weights", "1,1,0")
    assert code == 0 and "brackets 0" in out


def test_tolerance_failure_exit_2(tmp_path):
    code, out = run("limits", "--params", "0.5,0.3,0.1", "--expect-slope", "-1")
    assert code == 2 and out.endswith("status FAIL\n")
    code, out = run("limits", "--params", "0.5,0.3,0.1", "--expect-slope", "-2")
    assert code == 0


def test_jacobi_exit_2_on_non_lie(tmp_path):
    doc = builtin_algebra("quaplectic11").to_dict()
    doc["brackets"][0][3] += 0.1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out = run("jacobi", "--input", str(path))
    assert code == 2


def test_malformed_json_exit_1(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run("jacobi", "--input", str(path))[0] == 1
    path.write_text(json.dumps({"dim": 2, "brackets": [[0, 1, 5, 1.0]]}))
    assert run("jacobi", "--input", str(path))[0] == 1
    assert run("jacobi", "--input", str(tmp_path / "missing.json"))[0] == 1


def test_algebra_roundtrip(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert run("jacobi", "--algebra", "quaplectic13", "--output", str(first))[0] == 0
    assert run("jacobi", "--input", str(first), "--output", str(second))[0] == 0
    a, b = LieAlgebra.load(first), LieAlgebra.load(second)
    assert a.names == b.names
    assert np.array_equal(a.structure, b.structure)
    assert np.array_equal(a.structure, builtin_algebra("quaplectic13").structure)


def test_extend_output_matches_quaplectic(tmp_path):
    path = tmp_path / "ext.json"
    code, out = run("extend", "--algebra", "inhom_unitary11", "--verbose", "--output", str(path))
    assert code == 0 and out.startswith("h2_dim 1\n")
    ext = LieAlgebra.load(path)
    assert ext.dim == 9
    assert run("extend", "--input", str(path))[1] == "h2_dim 0\n"


def test_contract_preset():
    code, out = run("contract", "--algebra", "unitary13", "--preset", "nonrelativistic")
    assert code == 0
    assert "killing_rank" in out


def test_rep_check_and_casimir(tmp_path):
    code, out = run("rep-check", "--cutoff", "10")
    assert code == 0 and out.endswith("status ok\n")
    csv_path = tmp_path / "spec.csv"
    code, out = run("casimir", "--cutoff", "8", "--max-order", "2", "--output", str(csv_path))
    assert code == 0
    vals, methods = read_spectrum_csv(csv_path.read_text())
    assert {"fock:C1", "fock:D2"} <= set(methods)


def test_spectrum_csv(tmp_path):
    path = tmp_path / "grid.csv"
    code, out = run("spectrum", "--output", str(path))
    assert code == 0
    vals, methods = read_spectrum_csv(path.read_text())
    assert len(vals) == 25 and set(methods) == {"grid"}
    assert np.max(np.abs(vals - 2 * np.round(vals / 2))) < 2e-3


def test_spectrum_resolution_failure_exit_1():
    code, _ = run("spectrum", "--half-width", "6", "--points", "101", "--order", "2")
    assert code == 1


def test_wave_matrix_csv(tmp_path):
    path = tmp_path / "w.csv"
    code, out = run("wave", "--cutoff", "6", "--order", "2", "--eps", "1,0,0.5,0.5,0.5,-0.5,-1,0", "--output", str(path))
    assert code == 0
    assert read_matrix_csv(path.read_text()).shape == (49, 49)


@pytest.mark.parametrize(
    "argv",
    [
        ["rates", "--params", "0.6,0,0", "--rates", "1,0,0"],
        ["limits", "--params", "0.5,0.3,0.1"],
        ["extend", "--algebra", "inhom_unitary13", "--verbose"],
        ["casimir", "--cutoff", "8", "--max-order", "3"],
        ["spectrum"],
    ],
)
def test_deterministic_output(argv):
    first, second = run(*argv), run(*argv)
    assert first == second and first[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quaplectic", "rates", "--params", "0.6,0,0", "--rates", "1,0,0"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1.953125 0 0\n"
