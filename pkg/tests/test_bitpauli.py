import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import X2, Z2, kron_all, pauli, permutation_matrix
from projsynth.bitpauli import (
    BitString,
    PauliString,
    apply_to_basis,
    apply_xcx,
    commutes,
    conjugate_through,
    parse_pauli,
)
from projsynth.circuit import CX, X

paulis = st.integers(1, 6).flatmap(lambda n: st.text("IXYZ", min_size=n, max_size=n))


def test_bitstring_is_big_endian():
    z = BitString.from_str("1011")
    assert z.value == 11
    assert z.bits == (1, 0, 1, 1)
    assert z[0] == 1 and z[1] == 0
    assert str(BitString(4, 5)) == "0101"
    assert BitString.unit(4, 0) == BitString.from_str("1000")
    assert z.restrict([1, 3]) == BitString.from_str("01")


def test_bitstring_rejects_bad_input():
    with pytest.raises(ValueError):
        BitString.from_str("012")
    with pytest.raises(ValueError):
        BitString(2, 4)
    with pytest.raises(ValueError):
        BitString.from_str("01") ^ BitString.from_str("011")


@pytest.mark.parametrize(
    "text, a, b",
    [("XIXI", "1010", "0000"), ("Y", "1", "1"), ("ZIII", "0000", "1000"), ("XYZI", "1100", "0110")],
)
def test_parse_pauli(text, a, b):
    p = parse_pauli(text)
    assert (str(p.a), str(p.b), p.sign) == (a, b, 1)
    assert str(p) == text


def test_parse_pauli_sign_and_errors():
    assert parse_pauli("-XZ").sign == -1
    assert parse_pauli("+XZ").sign == 1
    assert str(parse_pauli("-XZ")) == "-XZ"
    for bad in ["", "XQ", "-", "xz"]:
        with pytest.raises(ValueError):
            parse_pauli(bad)


@pytest.mark.parametrize(
    "sigma, z, phase, out",
    [("Z", "1", -1, "1"), ("Y", "0", 1j, "1"), ("XZ", "01", -1, "11")],
)
def test_apply_to_basis_examples(sigma, z, phase, out):
    r = apply_to_basis(parse_pauli(sigma), BitString.from_str(z))
    assert r.phase == phase
    assert str(r.state) == out


def test_apply_to_basis_length_mismatch():
    with pytest.raises(ValueError):
        apply_to_basis(parse_pauli("XX"), BitString.from_str("0"))


@settings(max_examples=150, deadline=None)
@given(paulis, st.booleans(), st.data())
def test_apply_to_basis_matches_dense_matrix(text, negative, data):
    n = len(text)
    sigma = parse_pauli(("-" if negative else "") + text)
    z = data.draw(st.integers(0, (1 << n) - 1))
    r = apply_to_basis(sigma, BitString(n, z))
    column = pauli(str(sigma))[:, z]
    expected = np.zeros(1 << n, dtype=complex)
    expected[r.state.value] = r.phase
    assert np.allclose(column, expected)


@settings(max_examples=100, deadline=None)
@given(paulis, st.data())
def test_hermitian_pauli_squares_to_identity(text, data):
    n = len(text)
    sigma = parse_pauli(text)
    z = BitString(n, data.draw(st.integers(0, (1 << n) - 1)))
    once = apply_to_basis(sigma, z)
    twice = apply_to_basis(sigma, once.state)
    assert twice.state == z
    assert once.phase * twice.phase == 1


@pytest.mark.parametrize(
    "p, q, expected",
    [("X", "Z", False), ("XX", "ZZ", True), ("XIXI", "ZIZI", True), ("XY", "YX", True), ("XI", "YZ", False)],
)
def test_commutes_examples(p, q, expected):
    assert commutes(parse_pauli(p), parse_pauli(q)) is expected
    mp, mq = pauli(p), pauli(q)
    assert np.allclose(mp @ mq, mq @ mp) is expected


def test_commutes_agrees_with_dense_commutator():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(1, 6))
        p = "".join(rng.choice(list("IXYZ"), n))
        q = "".join(rng.choice(list("IXYZ"), n))
        mp, mq = pauli(p), pauli(q)
        assert commutes(parse_pauli(p), parse_pauli(q)) == np.allclose(mp @ mq, mq @ mp)


def _xcx_matrix(gates, n):
    """Dense matrix of an X/CX circuit from its basis-state action."""
    mapping = {z: apply_xcx(BitString(n, z), gates).value for z in range(1 << n)}
    return permutation_matrix(n, mapping)


def test_apply_xcx_matches_kron_matrices():
    # CX(0->1) on two qubits in the standard big-endian form
    cx01 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert np.allclose(_xcx_matrix([CX(0, 1)], 2), cx01)
    assert np.allclose(_xcx_matrix([X(1)], 2), kron_all([np.eye(2), X2]))


@pytest.mark.parametrize(
    "sigma, gates, expected",
    [
        ("XI", [CX(0, 1)], "XX"),
        ("IZ", [CX(0, 1)], "ZZ"),
        ("Z", [X(0)], "-Z"),
        ("IX", [CX(0, 1)], "IX"),
        ("ZI", [CX(0, 1)], "ZI"),
        ("YI", [CX(0, 1)], "YX"),
    ],
)
def test_conjugate_through_rules(sigma, gates, expected):
    assert str(conjugate_through(parse_pauli(sigma), gates)) == expected


def test_conjugate_through_accepts_tuples():
    assert str(conjugate_through(parse_pauli("XI"), [("CX", 0, 1)])) == "XX"
    with pytest.raises(ValueError):
        conjugate_through(parse_pauli("XI"), [("H", 0)])


def test_conjugate_through_dense_identity():
    rng = np.random.default_rng(11)
    for _ in range(60):
        n = int(rng.integers(1, 7))
        gates = []
        for _ in range(20):
            if n > 1 and rng.random() < 0.7:
                c, t = rng.choice(n, 2, replace=False)
                gates.append(CX(int(c), int(t)))
            else:
                gates.append(X(int(rng.integers(n))))
        text = "".join(rng.choice(list("IXYZ"), n))
        sigma = parse_pauli(("-" if rng.random() < 0.5 else "") + text)
        moved = conjugate_through(sigma, gates)
        m = _xcx_matrix(gates, n)
        assert np.allclose(m @ pauli(str(moved)), pauli(str(sigma)) @ m)


def test_single_qubit_identities_hold():
    # sanity of the reference matrices themselves
    assert np.allclose(X2 @ Z2, -Z2 @ X2)
    assert np.allclose(pauli("Y"), 1j * X2 @ Z2)
    assert isinstance(PauliString.identity(3), PauliString)
