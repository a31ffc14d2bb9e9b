"""Ready-made instances: excitation operators, the dihedral trace gate, the
MAX k-CUT phase oracle and subspace mixers.

Each generator returns an :class:`ExampleSpec`, a list of commuting terms
``(sigma, B, angle)`` whose product ``prod exp(i angle sigma P_B)`` is the
target unitary, together with a way to synthesize it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bitpauli import BitString, PauliString, apply_to_basis, commutes, parse_pauli
from .circuit import Circuit, lower_transposition
from .subspace import BasisSet, OrbitStructure, detect_orbit, projector_violation, rref
from .synth import synth_orbit_terms, synthesize
from .verify import DEFAULT_DENSE_CAP, exact_evolution


@dataclass
class ExampleSpec:
    name: str
    parameters: dict
    terms: list  # (PauliString, BasisSet, angle)
    n: int
    shared_orbit: OrbitStructure | None = None
    fixed_circuit: Circuit | None = None
    notes: list = field(default_factory=list)

    def check(self) -> None:
        """Every term commutes with its projector and the terms commute."""
        for sigma, B, _ in self.terms:
            bad = projector_violation(sigma, B)
            if bad is not None:
                raise ValueError(f"{self.name}: {sigma} maps {bad} outside its basis set")
        for i, (s, _, _) in enumerate(self.terms):
            for r, _, _ in self.terms[:i]:
                if not commutes(s, r):
                    raise ValueError(f"{self.name}: terms {r} and {s} do not commute")

    def circuit(self, strategy: str = "auto") -> Circuit:
        if self.fixed_circuit is not None:
            return self.fixed_circuit
        if self.shared_orbit is not None and strategy in ("auto", "orbit"):
            return synth_orbit_terms([(s, a) for s, _, a in self.terms], self.shared_orbit)
        gates: list = []
        for sigma, B, angle in self.terms:
            gates += list(synthesize(sigma, B, angle, strategy).circuit.gates)
        return Circuit(self.n, tuple(gates))

    def oracle(self, dense_cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
        """Product of the closed-form evolutions of all terms."""
        u = np.eye(1 << self.n, dtype=complex)
        for sigma, B, angle in self.terms:
            u = exact_evolution(sigma, B, angle, dense_cap) @ u
        return u

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "parameters": self.parameters,
            "n": self.n,
            "terms": [
                {"sigma": str(s), "basis": [str(z) for z in B], "angle": float(a)} for s, B, a in self.terms
            ],
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------- excitation


def _excitation_states(occupied, virtual, n):
    o = BitString.from_bits(1 if q in occupied else 0 for q in range(n))
    v = BitString.from_bits(1 if q in virtual else 0 for q in range(n))
    return o, v


def _check_indices(occupied, virtual, n_exc, total_qubits):
    occupied, virtual = list(occupied), list(virtual)
    if len(occupied) != n_exc or len(virtual) != n_exc:
        raise ValueError(f"need {n_exc} occupied and {n_exc} virtual indices")
    if set(occupied) & set(virtual) or len(set(occupied)) != n_exc or len(set(virtual)) != n_exc:
        raise ValueError("occupied and virtual indices must be distinct")
    if any(not 0 <= q < total_qubits for q in occupied + virtual):
        raise ValueError("excitation index outside the register")
    return occupied, virtual


def _excitation_sigma(occupied, virtual, n, o, v):
    """Pauli string with ``sigma |o> = -i |v>`` (so ``i sigma P_B = |v><o| - |o><v|``)."""
    a = o ^ v
    b = BitString.unit(n, min(occupied))
    sigma = PauliString(a, b)
    image = apply_to_basis(sigma, o)
    assert image.state == v and image.power in (1, 3)
    return sigma if image.power == 3 else sigma.negate()


def qubit_excitation(
    n_exc: int,
    occupied: Sequence[int] | None = None,
    virtual: Sequence[int] | None = None,
    total_qubits: int | None = None,
    t: float = 0.3,
) -> ExampleSpec:
    """``exp(t T)`` for ``T = prod Q+_k Q_i - prod Q+_i Q_k`` on qubits.

    ``T = i sigma P_B`` with ``B = {occupied filled, virtual filled}`` on the
    involved qubits, so only the involved qubits are acted on. Defaults:
    virtual qubits ``0..n_exc-1``, occupied ``n_exc..2 n_exc-1``.
    """
    if n_exc < 1:
        raise ValueError("n_exc must be positive")
    virtual = list(range(n_exc)) if virtual is None else list(virtual)
    occupied = list(range(n_exc, 2 * n_exc)) if occupied is None else list(occupied)
    total_qubits = 2 * n_exc if total_qubits is None else total_qubits
    occupied, virtual = _check_indices(occupied, virtual, n_exc, total_qubits)
    involved = sorted(occupied + virtual)
    rest = [q for q in range(total_qubits) if q not in involved]
    o, v = _excitation_states(occupied, virtual, total_qubits)
    sigma = _excitation_sigma(occupied, virtual, total_qubits, o, v)
    params = {"n_exc": n_exc, "occupied": occupied, "virtual": virtual, "total_qubits": total_qubits, "t": t}
    gens = [o ^ v] + [BitString.unit(total_qubits, q) for q in rest]
    orbit = OrbitStructure(o, tuple(rref(gens, total_qubits)))
    return ExampleSpec("excitation", params, [(sigma, orbit.basis_set(), t)], total_qubits, orbit)


def excitation_operator_matrix(occupied, virtual, n, fermionic: bool = False) -> np.ndarray:
    """Dense ``T`` built from ladder-operator matrices (Jordan-Wigner if fermionic)."""
    lower_ = np.array([[0, 1], [0, 0]], dtype=complex)  # |0><1|
    z = np.diag([1.0, -1.0]).astype(complex)

    def ladder(q, dagger):
        mats = [z if (fermionic and r < q) else np.eye(2) for r in range(n)]
        mats[q] = lower_.T if dagger else lower_
        out = np.array([[1.0 + 0j]])
        for m in mats:
            out = np.kron(out, m)
        return out

    fwd = np.eye(1 << n, dtype=complex)
    bwd = np.eye(1 << n, dtype=complex)
    for i, k in zip(occupied, virtual):
        fwd = fwd @ ladder(k, True) @ ladder(i, False)
        bwd = bwd @ ladder(i, True) @ ladder(k, False)
    return fwd - bwd


def fermionic_excitation(
    n_exc: int,
    occupied: Sequence[int] | None = None,
    virtual: Sequence[int] | None = None,
    total_qubits: int | None = None,
    t: float = 0.3,
) -> ExampleSpec:
    """Jordan-Wigner fermionic excitation as a single orbit term.

    The string operators only multiply the qubit excitation by a sign that
    depends on the spectator qubits, ``s (-1)**(c.rest)``. Reading ``s`` and
    ``c`` off the ladder action turns the generator into ``i sigma' P_B'``
    with ``sigma' = s Z**c sigma`` and ``B'`` the orbit with free spectators.
    """
    base = qubit_excitation(n_exc, occupied, virtual, total_qubits, t)
    p = base.parameters
    occupied, virtual, n = p["occupied"], p["virtual"], p["total_qubits"]
    o, v = _excitation_states(occupied, virtual, n)
    involved = set(occupied) | set(virtual)
    rest = [q for q in range(n) if q not in involved]

    def sign(extra: BitString) -> int:
        return _jw_sign(o ^ extra, list(zip(occupied, virtual)))

    s0 = sign(BitString.zeros(n))
    c = BitString.zeros(n)
    for q in rest:
        if sign(BitString.unit(n, q)) != s0:
            c = c.flip(q)
    sigma, B, _ = base.terms[0]
    zc = PauliString(sigma.a, sigma.b ^ c, sigma.sign * s0)
    # sigma and Z**c act on disjoint qubits, so the product keeps the i**(a.b) factor
    assert zc.a.dot(c) == 0
    params = dict(p, fermionic=True)
    spec = ExampleSpec("fermionic_excitation", params, [(zc, B, t)], n, base.shared_orbit)
    spec.notes.append(f"spectator sign s={s0}, Z mask {c}")
    return spec


def _jw_sign(z: BitString, pairs) -> int:
    """Sign of ``prod_j a+_{k_j} a_{i_j} |z>`` (operators act right to left)."""
    ops = []
    for i, k in pairs:
        ops += [(k, True), (i, False)]
    sign = 1
    state = z
    for q, dagger in reversed(ops):
        if state[q] == (1 if dagger else 0):
            raise ValueError("ladder operator annihilates the state")
        parity = sum(state[r] for r in range(q)) % 2
        sign *= -1 if parity else 1
        state = state.flip(q)
    return sign


# ---------------------------------------------------------------- trace gate


def trace_gate_spec(n: int, t: float = 0.3) -> ExampleSpec:
    """Terms of ``exp(i t |0><0| (x) sum_k cos(2 pi k / 2**n) |k><k|)``.

    Qubit 0 is the control (the projector ``|0><0|``), qubits 1..n hold
    ``k``. One boundary term covers ``k = 0, 2**(n-1)``; term ``k`` for
    ``1 <= k < 2**(n-2)`` covers the four states ``k, N/2 + k, N - k,
    N/2 - k`` with ``sigma = Z Z`` on the two leading bits of ``k``.
    """
    if n < 2:
        raise ValueError("trace gate needs n >= 2")
    N = 1 << n
    width = n + 1

    def state(k):
        return BitString(width, k)  # control bit 0 is the leading zero

    boundary = PauliString(BitString.zeros(width), BitString.unit(width, 1))
    terms = [(boundary, BasisSet(width, (state(0), state(N // 2))), t)]
    zz = PauliString(BitString.zeros(width), BitString.unit(width, 1) | BitString.unit(width, 2))
    for k in range(1, N // 4):
        B = BasisSet(width, tuple(state(j) for j in (k, N // 2 + k, N - k, N // 2 - k)))
        terms.append((zz, B, t * math.cos(2 * math.pi * k / N)))
    return ExampleSpec("trace", {"n": n, "t": t}, terms, width)


def trace_gate(n: int, t: float = 0.3, strategy: str = "auto") -> Circuit:
    return trace_gate_spec(n, t).circuit(strategy)


def trace_gate_diagonal(n: int, t: float) -> np.ndarray:
    """Direct diagonal of the trace-gate evolution on ``n + 1`` qubits."""
    N = 1 << n
    k = np.arange(N)
    return np.concatenate([np.exp(1j * t * np.cos(2 * np.pi * k / N)), np.ones(N)])


# ----------------------------------------------------------------- MAX k-CUT


def default_color_pairs(k: int) -> list[tuple[int, int]]:
    """Pairs of equal colors, with codes ``>= k`` identified with color ``k-1``."""
    L = max(1, math.ceil(math.log2(k)))
    codes = range(1 << L)
    color = lambda c: min(c, k - 1)  # noqa: E731
    diag = [(c, c) for c in codes]
    off = [(i, j) for i in codes for j in codes if i != j and color(i) == color(j)]
    return diag + off


def maxkcut_oracle(k: int, pairs=None, t: float = 0.3) -> ExampleSpec:
    """Phase ``exp(i t)`` on the edge states whose two colors are equivalent."""
    if k < 2:
        raise ValueError("k must be at least 2")
    L = max(1, math.ceil(math.log2(k)))
    pairs = default_color_pairs(k) if pairs is None else [tuple(p) for p in pairs]
    for i, j in pairs:
        if not (0 <= i < 1 << L and 0 <= j < 1 << L):
            raise ValueError(f"color pair {(i, j)} outside 0..{(1 << L) - 1}")
    n = 2 * L
    B = BasisSet.from_ints(n, [(i << L) | j for i, j in pairs])
    spec = ExampleSpec("maxkcut", {"k": k, "pairs": [list(p) for p in pairs], "t": t}, [], n)
    spec.terms.append((PauliString.identity(n), B, t))
    return spec


# ---------------------------------------------------------------- LX mixers


def lx_mixer(B: BasisSet, generators, angles, parts=None) -> ExampleSpec:
    """``exp(i sum_j angle_j lambda_j P_j)`` for X-type generators ``lambda_j``.

    ``P_j`` is the projector on ``parts[j]`` (default: all of ``B``). When
    every part is ``B`` and ``B`` is one orbit, all terms share the orbit
    network.
    """
    gens = [parse_pauli(g) if isinstance(g, str) else g for g in generators]
    angles = list(angles)
    if len(angles) != len(gens):
        raise ValueError("one angle per generator required")
    parts = [B] * len(gens) if parts is None else list(parts)
    terms = []
    for g, angle, part in zip(gens, angles, parts):
        if g.n != B.n or part.n != B.n:
            raise ValueError(f"generator {g} has the wrong length")
        if any(z not in B for z in part):
            raise ValueError("generator part is not a subset of B")
        bad = projector_violation(g, part)
        if bad is not None:
            raise ValueError(f"generator {g} maps {bad} outside its part")
        terms.append((g, part, angle))
    params = {
        "basis": [str(z) for z in B],
        "generators": [str(g) for g in gens],
        "angles": angles,
    }
    orbit = detect_orbit(B) if all(p == B for p in parts) else None
    spec = ExampleSpec("lxmixer", params, terms, B.n, orbit)
    spec.check()
    return spec


def orbit_mixer_example(t1: float = 0.3, t2: float = 0.5) -> ExampleSpec:
    """Two X-generators on the orbit ``<XIXI, IXXX>|0000>``."""
    B = BasisSet.from_strings(["0000", "1010", "0111", "1101"])
    return lx_mixer(B, ["XIXI", "IXXX"], [t1, t2])


def lx_mixer_example(t: float = 0.3) -> ExampleSpec:
    """Generator ``XIII`` on a six-state basis set that is not an orbit."""
    B = BasisSet.from_strings(["0000", "1000", "0100", "1100", "0010", "1010"])
    return lx_mixer(B, ["XIII"], [t])


# -------------------------------------------------------------- transposition


def transposition_example(x: str = "0000", y: str = "1111") -> ExampleSpec:
    xb, yb = BitString.from_str(x), BitString.from_str(y)
    spec = ExampleSpec("transposition", {"x": x, "y": y}, [], xb.n)
    spec.fixed_circuit = lower_transposition(xb, yb)
    return spec


EXAMPLES = ("transposition", "excitation", "trace", "maxkcut", "lxmixer")
