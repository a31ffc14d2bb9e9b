import warnings

import numpy as np
import pytest

from oracles import circuit_matrix, closed_form_by_expm, max_dev, pauli
from projsynth.bitpauli import BitString, parse_pauli
from projsynth.circuit import CPhase, CRot, CX, GPhase, Transposition
from projsynth.random_instances import random_closed_basis, random_orbit_instance, random_pauli
from projsynth.subspace import BasisSet, OrbitStructure, detect_orbit
from projsynth.synth import (
    CommutationError,
    highpass_patterns,
    lowpass_patterns,
    orbit_frame,
    synth_cover,
    synth_general,
    synth_lowpass_unitary,
    synth_orbit,
    synth_orbit_terms,
    synthesize,
)


def pattern_strings(plan):
    return ["".join(str(v) for _, v in p) for p in plan.patterns]


def deviation(sigma, B, t, circuit):
    target = closed_form_by_expm(str(sigma), B.n, B.values(), t)
    return max_dev(circuit_matrix(circuit.lowered()), target)


# ------------------------------------------------------------------ low-pass


def test_lowpass_patterns_42():
    plan = lowpass_patterns(42, 6)
    assert not plan.complemented
    assert pattern_strings(plan) == ["0", "100", "10100"]
    assert [[q for q, _ in p] for p in plan.patterns] == [[0], [0, 1, 2], [0, 1, 2, 3, 4]]


def test_lowpass_full_register_is_uncontrolled():
    assert lowpass_patterns(8, 3).patterns == ((),)


@pytest.mark.parametrize("K, complemented", [(1, False), (2, False), (3, True), (4, False), (5, False), (6, True), (7, True), (8, False)])
def test_lowpass_complement_choice_n3(K, complemented):
    plan = lowpass_patterns(K, 3)
    assert plan.complemented is complemented
    direct = lowpass_patterns(K, 3, allow_complement=False)
    if complemented:
        assert plan.total_controls < direct.total_controls


def test_lowpass_patterns_select_exactly_the_prefix():
    for n in range(1, 7):
        for K in range(1, (1 << n) + 1):
            for allow in (False, True):
                plan = lowpass_patterns(K, n, allow)
                hits = np.zeros(1 << n, dtype=int)
                for z in range(1 << n):
                    zb = [(z >> (n - 1 - q)) & 1 for q in range(n)]
                    hits[z] = sum(all(zb[q] == v for q, v in p) for p in plan.patterns)
                expected = np.arange(1 << n) < K
                if plan.complemented:
                    expected = ~expected
                assert np.array_equal(hits, expected.astype(int))


def test_highpass_patterns():
    assert pattern_strings(highpass_patterns(1, 3)) == ["111"]
    assert highpass_patterns(8, 3).patterns == ((),)
    with pytest.raises(ValueError):
        highpass_patterns(0, 3)
    with pytest.raises(ValueError):
        lowpass_patterns(9, 3)


def test_lowpass_rotation_block_matrix():
    t = 0.4
    c = synth_lowpass_unitary(5, 3, CRot("X", -2 * t, (), 3), [0, 1, 2], 4)
    u = circuit_matrix(c)
    rx = np.cos(t) * np.eye(2) + 1j * np.sin(t) * pauli("X")
    for k in range(8):
        block = u[2 * k : 2 * k + 2, 2 * k : 2 * k + 2]
        assert max_dev(block, rx if k < 5 else np.eye(2)) < 1e-12


def test_lowpass_phase_diagonal():
    u = circuit_matrix(synth_lowpass_unitary(6, 4, CPhase(0.7, ())))
    expected = np.where(np.arange(16) < 6, np.exp(0.7j), 1)
    assert max_dev(u, np.diag(expected)) < 1e-12
    full = synth_lowpass_unitary(8, 3, CPhase(0.7, ()))
    assert [type(g) for g in full.gates] == [GPhase]


# --------------------------------------------------------------------- orbit


def test_orbit_mixer_network_and_core():
    B = BasisSet.from_strings(["0000", "1010", "0111", "1101"])
    orbit = detect_orbit(B)
    frame = orbit_frame(orbit)
    assert frame.network == (CX(0, 2), CX(1, 2), CX(1, 3))
    assert frame.pivots == (0, 1) and str(frame.residual) == "00"
    c = synth_orbit_terms([(parse_pauli("XIXI"), 0.3), (parse_pauli("IXXX"), 0.5)], orbit)
    core = c.gates[3:5]
    assert core == (CRot("X", -0.6, ((2, 0), (3, 0)), 0), CRot("X", -1.0, ((2, 0), (3, 0)), 1))
    target = closed_form_by_expm("IXXX", 4, B.values(), 0.5) @ closed_form_by_expm("XIXI", 4, B.values(), 0.3)
    assert max_dev(circuit_matrix(c), target) < 1e-12


def test_single_state_orbit_is_one_controlled_phase():
    B = BasisSet.from_strings(["0110"])
    c = synth_orbit(parse_pauli("ZIZI"), detect_orbit(B), 0.3)
    assert len(c) == 1 and isinstance(c.gates[0], CPhase)
    assert deviation(parse_pauli("ZIZI"), B, 0.3, c) < 1e-12


def test_orbit_random_against_expm():
    rng = np.random.default_rng(41)
    for _ in range(150):
        n = int(rng.integers(1, 7))
        sigma, B = random_orbit_instance(rng, n, sign=True)
        t = float(rng.uniform(-3, 3))
        c = synth_orbit(sigma, detect_orbit(B), t)
        assert deviation(sigma, B, t, c) < 1e-9


def test_orbit_cx_bound():
    rng = np.random.default_rng(42)
    for _ in range(200):
        n = int(rng.integers(1, 11))
        sigma, B = random_orbit_instance(rng, n, max_k=n)
        orbit = detect_orbit(B)
        k = orbit.k
        assert len(orbit_frame(orbit).network) <= n * k - k * (k - 1) // 2


def test_orbit_rejects_outside_term():
    orbit = detect_orbit(BasisSet.from_strings(["00", "11"]))
    with pytest.raises(CommutationError):
        synth_orbit(parse_pauli("XI"), orbit, 0.1)
    with pytest.raises(ValueError):
        synth_orbit_terms([(parse_pauli("XX"), 0.1), (parse_pauli("ZI"), 0.2)], orbit)


# ------------------------------------------------------------------- general


def test_general_six_state_structure():
    B = BasisSet.from_strings(["0000", "1000", "0100", "1100", "0010", "1010"])
    c = synth_general(parse_pauli("XIII"), B, 0.3)
    tr = Transposition(BitString.from_str("100"), BitString.from_str("001"), (1, 2, 3))
    assert c.gates[0] == tr and c.gates[-1] == tr
    rotations = [g for g in c.gates if isinstance(g, CRot)]
    assert all(g.target == 0 and g.axis == "X" for g in rotations)
    assert deviation(parse_pauli("XIII"), B, 0.3, c) < 1e-12


def test_general_random_against_expm():
    rng = np.random.default_rng(43)
    for _ in range(200):
        n = int(rng.integers(1, 8))
        sigma = random_pauli(rng, n, sign=True)
        B = random_closed_basis(rng, sigma)
        t = float(rng.uniform(-3, 3))
        for allow in (True, False):
            c = synth_general(sigma, B, t, allow)
            assert deviation(sigma, B, t, c) < 1e-9


def test_general_full_space_and_zero_time():
    sigma = parse_pauli("XYZ")
    B = BasisSet.full(3)
    c = synth_general(sigma, B, 0.6)
    assert max_dev(circuit_matrix(c.lowered()), closed_form_by_expm("XYZ", 3, range(8), 0.6)) < 1e-12
    c0 = synth_general(sigma, BasisSet.from_strings(["000", "110"]), 0.0)
    assert max_dev(circuit_matrix(c0.lowered()), np.eye(8)) < 1e-12


# ---------------------------------------------------------------- dispatcher


def test_empty_basis_warns_and_is_identity():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = synthesize(parse_pauli("XZ"), BasisSet(2), 0.4)
    assert caught and report.case == "identity" and len(report.circuit) == 0


def test_dispatcher_errors():
    with pytest.raises(CommutationError) as info:
        synthesize(parse_pauli("XI"), BasisSet.from_strings(["00", "01"]), 0.1)
    assert info.value.state in BasisSet.from_strings(["00", "01"])
    with pytest.raises(ValueError):
        synthesize(parse_pauli("XI"), BasisSet.from_strings(["00", "10", "01"]), 0.1, "orbit")
    with pytest.raises(ValueError):
        synthesize(parse_pauli("XI"), BasisSet.from_strings(["00", "10"]), 0.1, "fastest")
    with pytest.raises(ValueError):
        synthesize(parse_pauli("XI"), BasisSet.from_strings(["000"]), 0.1)


@pytest.mark.parametrize(
    "sigma, states, strategy, case",
    [
        ("ZI", ["00", "01", "10", "11"], "auto", "orbit"),
        ("ZI", ["00", "01", "10"], "auto", "diagonal"),
        ("II", ["00", "01", "10"], "auto", "identity"),
        ("YII", ["000", "100", "011", "111"], "general", "anticommuting"),
        ("XII", ["000", "100", "011", "111"], "general", "commuting"),
        ("XIII", ["0000", "1000", "0100", "1100", "0010", "1010"], "auto", "orbit_cover"),
    ],
)
def test_report_cases(sigma, states, strategy, case):
    B = BasisSet.from_strings(states)
    report = synthesize(parse_pauli(sigma), B, 0.3, strategy, verify=True)
    assert report.case == case
    assert report.verification_residual <= 1e-9


def test_commuting_case_name():
    B = BasisSet.from_strings(["00", "11", "01", "10"])
    assert synthesize(parse_pauli("XX"), B, 0.2, "general").case == "commuting"
    assert synthesize(parse_pauli("YX"), B, 0.2, "general").case == "anticommuting"


def test_cover_invariant_under_part_order():
    B = BasisSet.from_strings(["0000", "1000", "0100", "1100", "0010", "1010"])
    sigma = parse_pauli("XIII")
    c, parts = synth_cover(sigma, B, 0.3)
    reordered = BasisSet(4, tuple(reversed(B.states)))
    c2, parts2 = synth_cover(sigma, reordered, 0.3)
    assert max_dev(circuit_matrix(c), circuit_matrix(c2)) < 1e-12
    assert len(parts) == 2 and all(isinstance(p, OrbitStructure) for p in parts2)


def test_group_law():
    rng = np.random.default_rng(44)
    for _ in range(30):
        n = int(rng.integers(1, 6))
        sigma = random_pauli(rng, n)
        B = random_closed_basis(rng, sigma)
        t1, t2 = rng.uniform(-2, 2, size=2)
        for strategy in ("general", "cover"):
            u1 = circuit_matrix(synthesize(sigma, B, t1, strategy).circuit.lowered())
            u2 = circuit_matrix(synthesize(sigma, B, t2, strategy).circuit.lowered())
            u12 = circuit_matrix(synthesize(sigma, B, t1 + t2, strategy).circuit.lowered())
            assert max_dev(u1 @ u2, u12) < 1e-9


def test_report_dict_shape():
    B = BasisSet.from_strings(["0000", "1010", "0111", "1101"])
    d = synthesize(parse_pauli("XIXI"), B, 0.3, verify=True).to_dict()
    assert d["case"] == "orbit" and d["n"] == 4
    assert d["parts"] == [{"reference": "0000", "generators": ["1010", "0111"]}]
    assert d["verification_residual"] < 1e-12
