"""Dense unitaries for small registers, the closed-form evolution and the
Pauli-term baseline.

Basis index ``i`` of a dense matrix is the big-endian integer of the
bitstring, so qubit ``q`` is tensor axis ``q`` after reshaping to
``(2,) * n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitpauli import BitString, PauliString
from .circuit import (
    CPauliRot,
    CPhase,
    CRot,
    CX,
    Circuit,
    GPhase,
    MCX,
    PermToPrefix,
    Transposition,
    X,
    perm_to_prefix_transpositions,
    rotation_t_cost,
)
from .subspace import BasisSet, cover_by_orbits, projector_violation

DEFAULT_DENSE_CAP = 12

PAULI_2x2 = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


class DenseCapExceeded(ValueError):
    pass


def _check_cap(n: int, dense_cap: int) -> None:
    if n > dense_cap:
        raise DenseCapExceeded(f"{n} qubits exceeds the dense cap of {dense_cap}")


def rotation_matrix(axis: str, angle: float) -> np.ndarray:
    """``exp(-i angle A / 2)``."""
    return np.cos(angle / 2) * np.eye(2) - 1j * np.sin(angle / 2) * PAULI_2x2[axis]


# ---------------------------------------------------------------- simulation


def _control_index(n: int, controls) -> tuple:
    idx = [slice(None)] * (n + 1)
    for q, v in controls:
        idx[q] = slice(v, v + 1)
    return tuple(idx)


def _apply_1q(sub: np.ndarray, mat: np.ndarray, q: int) -> np.ndarray:
    return np.moveaxis(np.tensordot(mat, sub, axes=([1], [q])), 0, q)


def _apply_pauli(sub: np.ndarray, pauli: PauliString, axes) -> np.ndarray:
    out = sub.copy()
    for q, bz in zip(axes, pauli.b):
        if bz:
            out = _apply_1q(out, PAULI_2x2["Z"], q)
    for q, ax in zip(axes, pauli.a):
        if ax:
            out = np.flip(out, axis=q)
    phase = (1j) ** (pauli.a.dot(pauli.b) % 4) * pauli.sign
    return phase * out


def _permute(psi: np.ndarray, n: int, qubits, mapping) -> np.ndarray:
    """Apply the basis permutation ``mapping`` (on the sub-register) to psi."""
    dim = 1 << n
    idx = np.arange(dim)
    local = np.zeros(dim, dtype=np.int64)
    for q in qubits:
        local = (local << 1) | ((idx >> (n - 1 - q)) & 1)
    new_local = mapping[local]
    dest = idx.copy()
    for j, q in enumerate(qubits):
        shift = n - 1 - q
        bit = (new_local >> (len(qubits) - 1 - j)) & 1
        dest = (dest & ~(1 << shift)) | (bit << shift)
    flat = psi.reshape(dim, -1)
    out = np.empty_like(flat)
    out[dest] = flat
    return out.reshape(psi.shape)


def _perm_array(size_bits: int, transpositions) -> np.ndarray:
    perm = np.arange(1 << size_bits)
    for x, y in transpositions:
        # compose: current image of each state, then swap x and y in the image
        hit_x, hit_y = perm == x.value, perm == y.value
        perm[hit_x], perm[hit_y] = y.value, x.value
    return perm


def apply_gate(psi: np.ndarray, g, n: int) -> np.ndarray:
    """Apply ``g`` to a tensor of shape ``(2,)*n + (batch,)``."""
    if isinstance(g, GPhase):
        return np.exp(1j * g.angle) * psi
    if isinstance(g, X):
        return np.flip(psi, axis=g.q).copy()
    if isinstance(g, CX):
        g = MCX(((g.control, 1),), g.target)
    if isinstance(g, (MCX, CRot, CPhase, CPauliRot)):
        psi = psi.copy()
        idx = _control_index(n, g.controls)
        sub = psi[idx]
        if isinstance(g, MCX):
            sub = np.flip(sub, axis=g.target)
        elif isinstance(g, CRot):
            sub = _apply_1q(sub, rotation_matrix(g.axis, g.angle), g.target)
        elif isinstance(g, CPhase):
            sub = np.exp(1j * g.angle) * sub
        else:
            half = g.angle / 2
            sub = np.cos(half) * sub - 1j * np.sin(half) * _apply_pauli(sub, g.pauli, g.targets)
        psi[idx] = sub
        return psi
    if isinstance(g, Transposition):
        perm = _perm_array(g.x.n, [(g.x, g.y)])
        return _permute(psi, n, g.qubits(), perm)
    if isinstance(g, PermToPrefix):
        perm = _perm_array(g.basis.n, perm_to_prefix_transpositions(g.basis))
        if g.inverse_:
            perm = np.argsort(perm)
        return _permute(psi, n, g.qubits(), perm)
    raise TypeError(f"cannot simulate {g!r}")


def circuit_unitary(c: Circuit, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
    """Dense ``2**n x 2**n`` unitary of ``c``; macros use their exact semantics."""
    _check_cap(c.n, dense_cap)
    dim = 1 << c.n
    psi = np.eye(dim, dtype=complex).reshape((2,) * c.n + (dim,))
    for g in c.gates:
        psi = apply_gate(psi, g, c.n)
    return psi.reshape(dim, dim)


def simulate(c: Circuit, state, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
    """Apply ``c`` to a state vector (or a basis state given as BitString)."""
    _check_cap(c.n, dense_cap)
    dim = 1 << c.n
    if isinstance(state, BitString):
        vec = np.zeros(dim, dtype=complex)
        vec[state.value] = 1
    else:
        vec = np.asarray(state, dtype=complex)
    psi = vec.reshape((2,) * c.n + (1,))
    for g in c.gates:
        psi = apply_gate(psi, g, c.n)
    return psi.reshape(dim)


# -------------------------------------------------------------------- oracle


def pauli_matrix(sigma: PauliString) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    for ch in sigma.letters():
        out = np.kron(out, PAULI_2x2[ch])
    return sigma.sign * out


def projector_diagonal(B: BasisSet) -> np.ndarray:
    diag = np.zeros(1 << B.n)
    diag[B.values()] = 1
    return diag


def exact_evolution(
    sigma: PauliString, B: BasisSet, t: float, dense_cap: int = DEFAULT_DENSE_CAP
) -> np.ndarray:
    """``exp(i t sigma P_B) = I + (cos t - 1) P_B + i sin t sigma P_B``."""
    if sigma.n != B.n:
        raise ValueError("length mismatch between sigma and B")
    _check_cap(B.n, dense_cap)
    bad = projector_violation(sigma, B)
    if bad is not None:
        raise ValueError(f"sigma does not commute with P_B: {bad} maps outside B")
    dim = 1 << B.n
    p = projector_diagonal(B)
    sigma_p = pauli_matrix(sigma) * p[None, :]
    return np.eye(dim) + (np.cos(t) - 1) * np.diag(p) + 1j * np.sin(t) * sigma_p


def max_deviation(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.max(np.abs(u - v))) if u.size else 0.0


def verify_circuit(
    sigma: PauliString,
    B: BasisSet,
    t: float,
    c: Circuit,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> float:
    """Max-entry deviation of ``c`` from the closed form (no phase freedom)."""
    if c.n != B.n:
        raise ValueError(f"circuit has {c.n} qubits, instance has {B.n}")
    return max_deviation(circuit_unitary(c, dense_cap), exact_evolution(sigma, B, t, dense_cap))


def expm_taylor(a: np.ndarray, order: int = 20, squarings: int = 10) -> np.ndarray:
    """Matrix exponential by scaling, truncated Taylor series and squaring."""
    scaled = a / (1 << squarings)
    term = np.eye(a.shape[0], dtype=complex)
    out = term.copy()
    for k in range(1, order + 1):
        term = term @ scaled / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


# ------------------------------------------------------------------ baseline


def walsh_hadamard(values: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along the only axis."""
    h = np.array(values, dtype=np.int64 if values.dtype.kind in "iub" else float)
    n = h.size.bit_length() - 1
    for j in range(n):
        h = h.reshape(-1, 2, 1 << j)
        h = np.concatenate([h[:, :1] + h[:, 1:], h[:, :1] - h[:, 1:]], axis=1)
    return h.reshape(-1)


def projector_z_coefficients(B: BasisSet) -> np.ndarray:
    """Integer coefficients ``2**n c_b`` of ``P_B = sum_b c_b Z**b``."""
    if B.n > 20:
        raise ValueError("baseline term count limited to n <= 20")
    ind = np.zeros(1 << B.n, dtype=np.int64)
    ind[B.values()] = 1
    return walsh_hadamard(ind)


def baseline_pauli_terms(sigma: PauliString, B: BasisSet) -> int:
    """Number of Pauli strings in the expansion of ``sigma P_B``.

    Left multiplication by ``sigma`` permutes Pauli strings, so this is the
    number of nonzero Z-string coefficients of ``P_B``.
    """
    if sigma.n != B.n:
        raise ValueError("length mismatch between sigma and B")
    return int(np.count_nonzero(projector_z_coefficients(B)))


def cover_pauli_terms(sigma: PauliString, B: BasisSet) -> int:
    """Pauli terms when every orbit part of the greedy cover is expanded on its own.

    Parts overlap in Z-strings, so this is at least ``baseline_pauli_terms``.
    """
    return sum(baseline_pauli_terms(sigma, part.basis_set()) for part in cover_by_orbits(B, sigma))


@dataclass(frozen=True)
class BaselineCost:
    terms: int
    rotations: int
    cx: int
    t_count: int


def baseline_cost(
    sigma: PauliString, B: BasisSet, epsilon: float = 1e-10, t_model_constant: float = 3.0
) -> BaselineCost:
    """Cost of evolving every Pauli term separately with a CX parity chain.

    Each term of weight ``w`` costs one rotation and ``2 (w - 1)`` CX gates.
    """
    coeffs = projector_z_coefficients(B)
    terms = rotations = cx = 0
    for b in np.flatnonzero(coeffs):
        terms += 1
        zb = BitString(B.n, int(b))
        w = (sigma.a | (sigma.b ^ zb)).weight()
        if w == 0:
            continue  # global phase
        rotations += 1
        cx += 2 * (w - 1)
    return BaselineCost(terms, rotations, cx, rotations * rotation_t_cost(epsilon, t_model_constant))
