import json

import numpy as np
import pytest

from oracles import circuit_matrix, closed_form_by_expm, max_dev
from projsynth.circuit import from_json, from_text
from projsynth.cli import main

MIXER = {"n": 4, "sigma": "XIII", "basis": ["0000", "1000", "0100", "1100", "0010", "1010"], "t": 0.3}


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return path


def run(argv, capsys):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_synth_writes_artifacts_that_match_the_oracle(tmp_path, capsys):
    problem = write(tmp_path, "mixer.json", MIXER)
    code, out, _ = run(["synth", problem, "--out", tmp_path / "out", "--verify"], capsys)
    assert code == 0 and "case=orbit_cover" in out
    c_json = from_json((tmp_path / "out" / "mixer.circuit.json").read_text())
    c_text = from_text((tmp_path / "out" / "mixer.circuit.txt").read_text())
    assert c_json == c_text
    target = closed_form_by_expm("XIII", 4, [int(s, 2) for s in MIXER["basis"]], 0.3)
    assert max_dev(circuit_matrix(c_json.lowered()), target) < 1e-10
    report = json.loads((tmp_path / "out" / "mixer.report.json").read_text())
    assert report["verification_residual"] < 1e-10 and report["resources"]["ancillas"] >= 0


def test_synth_directory_batch(tmp_path, capsys):
    folder = tmp_path / "batch"
    folder.mkdir()
    write(folder, "a.json", MIXER)
    write(folder, "b.json", dict(MIXER, sigma="ZIII", strategy="general"))
    code, out, _ = run(["synth", folder, "--out", tmp_path / "out"], capsys)
    assert code == 0 and out.count("case=") == 2
    assert (tmp_path / "out" / "b.circuit.txt").exists()


def test_verify_round_trip_and_corruption(tmp_path, capsys):
    problem = write(tmp_path, "p.json", MIXER)
    run(["synth", problem, "--out", tmp_path / "out"], capsys)
    circuit = tmp_path / "out" / "p.circuit.txt"
    code, out, _ = run(["verify", problem, circuit], capsys)
    assert code == 0 and out.startswith("residual")
    bad = write(tmp_path, "bad.txt", circuit.read_text().replace("-0.6", "-0.7", 1))
    code, out, err = run(["verify", problem, bad], capsys)
    assert code == 1 and out == "" and "exceeds" in err


def test_commutation_failure_exit_code(tmp_path, capsys):
    problem = write(tmp_path, "p.json", dict(MIXER, sigma="IXII"))
    code, out, err = run(["synth", problem, "--out", tmp_path / "out"], capsys)
    assert code == 2 and out == "" and "outside B" in err


@pytest.mark.parametrize(
    "data",
    [
        "{not json",
        dict(MIXER, sigma="XQII"),
        dict(MIXER, sigma="XII"),
        dict(MIXER, basis=["000"]),
        dict(MIXER, basis=["0000", "0000"]),
        dict(MIXER, extra=1),
        {"n": 4, "sigma": "XIII", "basis": []},
    ],
)
def test_invalid_problem_exit_code(tmp_path, capsys, data):
    problem = write(tmp_path, "p.json", data)
    code, out, err = run(["synth", problem, "--out", tmp_path / "out"], capsys)
    assert code == 3 and out == "" and err


def test_usage_errors_exit_3(capsys):
    with pytest.raises(SystemExit) as info:
        main(["synth"])
    assert info.value.code == 3
    code, out, _ = run(["examples", "nosuch", "--out", "/tmp/unused-projsynth"], capsys)
    assert code == 3 and out == ""


def test_dense_cap_exit_code(tmp_path, capsys):
    problem = write(tmp_path, "p.json", MIXER)
    run(["synth", problem, "--out", tmp_path / "out"], capsys)
    code, out, _ = run(["verify", problem, tmp_path / "out" / "p.circuit.txt", "--dense-cap", "3"], capsys)
    assert code == 4 and out == ""


def test_estimate_reports_both_costs(tmp_path, capsys):
    problem = write(tmp_path, "p.json", MIXER)
    code, out, _ = run(["estimate", problem], capsys)
    data = json.loads(out)
    assert code == 0 and data["baseline"]["model_based"] is True
    assert data["baseline"]["pauli_terms"] == 8
    assert data["compact"]["t_count"] > 0


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["transposition"], "MCX"),
        (["excitation", "--n-exc", "2"], "CRY"),
        (["excitation", "--fermionic", "--occupied", "0", "--virtual", "2", "--total-qubits", "3"], "CPAULI"),
        (["trace", "--n", "3"], "CPAULI"),
        (["maxkcut"], "CP("),
        (["lxmixer", "--orbit"], "CRX"),
    ],
)
def test_examples_command(tmp_path, capsys, argv, expected):
    code, out, _ = run(["examples", *argv, "--out", tmp_path], capsys)
    assert code == 0 and expected in out
    spec = json.loads(next(tmp_path.glob("*.spec.json")).read_text())
    c = from_json(next(tmp_path.glob("*.circuit.json")).read_text())
    u = circuit_matrix(c.lowered())
    assert np.allclose(u.conj().T @ u, np.eye(1 << c.n))
    assert spec["n"] == c.n
