"""Circuits for ``exp(i t sigma P_B)``.

Three routes are available:

* ``orbit``: ``B`` is an X-orbit coset. A CX network ``M`` maps it onto a
  block with ``k`` free qubits and a fixed word ``x`` on the others, and the
  evolution becomes one Pauli rotation controlled on ``x``.
* ``cover``: ``B`` is split into sigma-invariant orbit cosets that are
  handled one by one. The factors commute, so their product is exact.
* ``general``: ``B`` is permuted onto the first computational basis states
  with transpositions and the evolution becomes a low-pass controlled
  phase or rotation.

Every route keeps the global phase, so circuits equal the closed form
``I + (cos t - 1) P_B + i sin t sigma P_B`` exactly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .bitpauli import BitString, PauliString, apply_to_basis, apply_xcx, commutes, conjugate_through
from .circuit import (
    CPauliRot,
    CPhase,
    CRot,
    Circuit,
    GPhase,
    ResourceCount,
    Transposition,
    circuit_to_dict,
    count_resources,
    ghz_compress,
    perm_to_prefix_transpositions,
)
from .subspace import (
    BasisSet,
    OrbitStructure,
    cover_by_orbits,
    detect_orbit,
    projector_violation,
)

STRATEGIES = ("auto", "orbit", "general", "cover")
CASES = ("identity", "diagonal", "anticommuting", "commuting", "orbit", "orbit_cover")


class CommutationError(ValueError):
    """``sigma`` does not commute with ``P_B``; ``state`` is a witness."""

    def __init__(self, state: BitString, sigma: PauliString):
        self.state = state
        super().__init__(f"sigma={sigma} maps basis state {state} outside B")


# ------------------------------------------------------------------ low-pass


@dataclass(frozen=True)
class LowPassPlan:
    """Control patterns for a gate applied on the first ``K`` states.

    ``patterns`` are tuples of ``(qubit, value)`` over the local control
    register ``0..n-1``. If ``complemented`` the realization is an
    uncontrolled gate followed by its inverse on each of ``patterns``, which
    then describe the last ``2**n - K`` states.
    """

    K: int
    n: int
    patterns: tuple
    complemented: bool = False

    @property
    def total_controls(self) -> int:
        return sum(len(p) for p in self.patterns)


def _binary_powers(K: int) -> list[int]:
    return [k for k in range(K.bit_length() - 1, -1, -1) if K >> k & 1]


def _direct_patterns(K: int, n: int) -> tuple:
    patterns = []
    prefix = 0
    for k in _binary_powers(K):
        width = n - k
        word = prefix >> k
        patterns.append(tuple((q, (word >> (width - 1 - q)) & 1) for q in range(width)))
        prefix += 1 << k
    return tuple(patterns)


def _check_K(K: int, n: int, low: int = 1) -> None:
    if not low <= K <= (1 << n):
        raise ValueError(f"K={K} outside [{low}, {1 << n}] for n={n}")


def lowpass_patterns(K: int, n: int, allow_complement: bool = True) -> LowPassPlan:
    """Plan for ``C_{<=K}``: one pattern per set bit of ``K``.

    The complemented form (uncontrolled gate, then the inverse gate on the
    last ``2**n - K`` states) is used when it needs strictly fewer controls.
    """
    _check_K(K, n)
    direct = LowPassPlan(K, n, _direct_patterns(K, n))
    if not allow_complement or K == 1 << n:
        return direct
    high = highpass_patterns((1 << n) - K, n)
    if high.total_controls < direct.total_controls:
        return LowPassPlan(K, n, high.patterns, complemented=True)
    return direct


def highpass_patterns(K: int, n: int) -> LowPassPlan:
    """Patterns selecting the last ``K`` states: low-pass patterns, bits flipped."""
    _check_K(K, n)
    flipped = tuple(tuple((q, 1 - v) for q, v in p) for p in _direct_patterns(K, n))
    return LowPassPlan(K, n, flipped)


def _gate_with_controls(gate, controls):
    if isinstance(gate, CRot):
        return CRot(gate.axis, gate.angle, controls, gate.target)
    if isinstance(gate, CPhase):
        return CPhase(gate.angle, controls) if controls else GPhase(gate.angle)
    raise TypeError("low-pass target must be a CRot or a CPhase template")


def synth_lowpass_unitary(
    K: int,
    n: int,
    gate,
    control_qubits=None,
    total_qubits: int | None = None,
    allow_complement: bool = True,
) -> Circuit:
    """``C_{<=K} gate`` with the control register ``control_qubits``.

    ``gate`` is an uncontrolled ``CRot`` (its target must lie outside the
    control register) or a ``CPhase`` template whose angle is applied to the
    first ``K`` states of the register.
    """
    control_qubits = list(range(n)) if control_qubits is None else list(control_qubits)
    if len(control_qubits) != n:
        raise ValueError("control register size differs from n")
    plan = lowpass_patterns(K, n, allow_complement)
    glob = lambda p: tuple((control_qubits[q], v) for q, v in p)  # noqa: E731
    gates = []
    if plan.complemented:
        gates.append(_gate_with_controls(gate, ()))
        inv = gate.inverse()
        gates += [_gate_with_controls(inv, glob(p)) for p in plan.patterns]
    else:
        gates += [_gate_with_controls(gate, glob(p)) for p in plan.patterns]
    if total_qubits is None:
        used = control_qubits + ([gate.target] if isinstance(gate, CRot) else [])
        total_qubits = 1 + max(used) if used else 0
    return Circuit(total_qubits, tuple(gates))


# --------------------------------------------------------------------- orbit


@dataclass(frozen=True)
class OrbitFrame:
    """The CX network ``M`` of an orbit and the block it produces.

    ``M`` maps the orbit onto the states with ``residual`` on
    ``residual_qubits`` and anything on ``pivots``.
    """

    n: int
    network: tuple
    pivots: tuple
    residual_qubits: tuple
    residual: BitString


def orbit_frame(orbit: OrbitStructure) -> OrbitFrame:
    n = orbit.n
    network: list = []
    pivots: list[int] = []
    for g in orbit.generators:
        v = apply_xcx(g, network)
        for p in pivots:
            if v[p]:
                v = v.flip(p)
        support = v.support()
        if not support:
            raise ValueError("orbit generators are linearly dependent")
        pivot = support[0]
        network += ghz_compress(pivot, support)
        pivots.append(pivot)
    image = apply_xcx(orbit.reference, network)
    rest = tuple(q for q in range(n) if q not in pivots)
    return OrbitFrame(n, tuple(network), tuple(sorted(pivots)), rest, image.restrict(rest))


def _orbit_core(sigma: PauliString, frame: OrbitFrame, t: float):
    """Controlled rotation realizing ``exp(i t sigma' P')`` in the frame."""
    inv = list(reversed(frame.network))
    moved = conjugate_through(sigma, inv)
    res_q, piv = frame.residual_qubits, frame.pivots
    if any(moved.a[q] for q in res_q):
        raise CommutationError(frame.residual, sigma)
    b_res = moved.b.restrict(res_q)
    eps = moved.sign * (-1 if b_res.dot(frame.residual) % 2 else 1)
    controls = tuple(zip(res_q, frame.residual.bits))
    target = moved.restrict(piv)
    active = [(q, ch) for q, ch in zip(piv, target.letters()) if ch != "I"]
    if not active:
        return CPhase(eps * t, controls) if controls else GPhase(eps * t)
    angle = -2 * eps * t
    if len(active) == 1:
        q, ch = active[0]
        return CRot(ch, angle, controls, q)
    qs = tuple(q for q, _ in active)
    return CPauliRot(target.restrict([piv.index(q) for q in qs]), qs, angle, controls)


def synth_orbit_terms(terms, orbit: OrbitStructure) -> Circuit:
    """``prod_j exp(i t_j sigma_j P_B)`` for pairwise commuting ``sigma_j``.

    All terms share one network ``M``; the circuit is ``M``, one controlled
    rotation per term, then ``M`` undone.
    """
    terms = [(s, float(t)) for s, t in terms]
    B = orbit.basis_set()
    for i, (s, _) in enumerate(terms):
        if s.n != orbit.n:
            raise ValueError("Pauli length differs from the orbit register")
        bad = projector_violation(s, B)
        if bad is not None:
            raise CommutationError(bad, s)
        for r, _ in terms[:i]:
            if not commutes(s, r):
                raise ValueError(f"terms {r} and {s} do not commute")
    frame = orbit_frame(orbit)
    core = [_orbit_core(s, frame, t) for s, t in terms]
    return Circuit(orbit.n, frame.network + tuple(core) + tuple(reversed(frame.network)))


def synth_orbit(sigma: PauliString, orbit: OrbitStructure, t: float) -> Circuit:
    return synth_orbit_terms([(sigma, t)], orbit)


# ------------------------------------------------------------------- general


def _prefix_transpositions(states, qubits) -> list:
    B = BasisSet(len(qubits), tuple(states))
    return [Transposition(x, y, tuple(qubits)) for x, y in perm_to_prefix_transpositions(B)]


def _conjugated(M: list, core: list) -> list:
    return M + core + list(reversed(M))


def _real_sign(power: int) -> int:
    assert power in (0, 2), "expected a real eigenvalue"
    return 1 if power == 0 else -1


def synth_general(sigma: PauliString, B: BasisSet, t: float, allow_complement: bool = True) -> Circuit:
    """Transposition-based circuit for any sigma commuting with ``P_B``."""
    n = B.n
    if sigma.n != n:
        raise ValueError("length mismatch between sigma and B")
    bad = projector_violation(sigma, B)
    if bad is not None:
        raise CommutationError(bad, sigma)
    if len(B) == 0:
        return Circuit(n)
    gates: list = []
    if sigma.a.value == 0:
        groups: dict[int, list] = {1: [], -1: []}
        for z in B:
            groups[_real_sign(apply_to_basis(sigma, z).power)].append(z)
        for s in (1, -1):
            if groups[s]:
                M = _prefix_transpositions(groups[s], range(n))
                core = synth_lowpass_unitary(len(groups[s]), n, CPhase(s * t, ()), None, n, allow_complement)
                gates += _conjugated(M, list(core.gates))
        return Circuit(n, tuple(gates))

    pivot = sigma.a.support()[0]
    F = ghz_compress(pivot, sigma.a.support())
    moved = conjugate_through(sigma, list(reversed(F)))
    others = [q for q in range(n) if q != pivot]
    axis = None
    groups = {1: [], -1: []}
    seen = set()
    for z in B:
        w = apply_xcx(z, F)
        if w[pivot]:
            w = w.flip(pivot)
        r = w.restrict(others)
        if r in seen:
            continue
        seen.add(r)
        image = apply_to_basis(moved, w)
        letter = "X" if image.power % 2 == 0 else "Y"
        if axis is None:
            axis = letter
        assert axis == letter, "pair phases changed type across B"
        groups[1 if image.power in (0, 1) else -1].append(r)
    for s in (1, -1):
        if groups[s]:
            M = _prefix_transpositions(groups[s], others)
            core = synth_lowpass_unitary(
                len(groups[s]), n - 1, CRot(axis, -2 * s * t, (), pivot), others, n, allow_complement
            )
            gates += _conjugated(M, list(core.gates))
    return Circuit(n, tuple(_conjugated(list(F), gates)))


def general_case(sigma: PauliString) -> str:
    if sigma.a.value == 0:
        return "identity" if sigma.b.value == 0 else "diagonal"
    return "anticommuting" if sigma.x_part_anticommutes() else "commuting"


# ---------------------------------------------------------------- dispatcher


@dataclass
class SynthesisReport:
    case: str
    circuit: Circuit
    resources: ResourceCount
    verification_residual: float | str = "skipped"
    strategy: str = "auto"
    parts: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "case": self.case,
            "strategy": self.strategy,
            "n": self.circuit.n,
            "gate_count": len(self.circuit),
            "resources": self.resources.to_dict(),
            "verification_residual": self.verification_residual,
            "parts": [
                {"reference": str(p.reference), "generators": [str(g) for g in p.generators]} for p in self.parts
            ],
            "circuit": circuit_to_dict(self.circuit),
        }


def synth_cover(sigma: PauliString, B: BasisSet, t: float) -> tuple[Circuit, list]:
    parts = cover_by_orbits(B, sigma)
    gates: list = []
    for part in parts:
        gates += list(synth_orbit(sigma, part, t).gates)
    return Circuit(B.n, tuple(gates)), parts


def synthesize(
    sigma: PauliString,
    B: BasisSet,
    t: float,
    strategy: str = "auto",
    *,
    cover_fraction: float = 0.5,
    epsilon: float = 1e-10,
    t_model_constant: float = 3.0,
    verify: bool = False,
    dense_cap: int = 12,
    tolerance: float = 1e-9,
) -> SynthesisReport:
    """Build a circuit for ``exp(i t sigma P_B)``.

    ``auto`` takes the orbit route when ``B`` is a single orbit, the cover
    route when the greedy cover has at most ``cover_fraction * |B|`` parts
    of size at least 2, and the general route otherwise. With ``verify``
    the dense residual against the closed form is stored (and must not
    exceed ``tolerance``).
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if sigma.n != B.n:
        raise ValueError(f"sigma acts on {sigma.n} qubits but B lives on {B.n}")
    bad = projector_violation(sigma, B)
    if bad is not None:
        raise CommutationError(bad, sigma)

    parts: list = []
    if len(B) == 0:
        warnings.warn("empty basis set: the evolution is the identity", stacklevel=2)
        circuit, case = Circuit(B.n), "identity"
    elif strategy == "orbit" or (strategy == "auto" and detect_orbit(B) is not None):
        orbit = detect_orbit(B)
        if orbit is None:
            raise ValueError("B is not an X-orbit; use another strategy")
        circuit, case, parts = synth_orbit(sigma, orbit, t), "orbit", [orbit]
    else:
        use_cover = strategy == "cover"
        if strategy == "auto":
            cover = cover_by_orbits(B, sigma)
            use_cover = len(cover) <= cover_fraction * len(B) and all(p.k >= 1 for p in cover)
        if use_cover:
            (circuit, parts), case = synth_cover(sigma, B, t), "orbit_cover"
        else:
            circuit, case = synth_general(sigma, B, t), general_case(sigma)

    report = SynthesisReport(
        case=case,
        circuit=circuit,
        resources=count_resources(circuit, epsilon, t_model_constant),
        strategy=strategy,
        parts=parts,
    )
    if verify:
        from .verify import verify_circuit

        res = verify_circuit(sigma, B, t, circuit, dense_cap)
        report.verification_residual = res
        if res > tolerance:
            raise AssertionError(f"synthesized circuit deviates by {res:.3e} > {tolerance:.1e}")
    return report
