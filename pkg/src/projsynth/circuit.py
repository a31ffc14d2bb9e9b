"""Gate-level intermediate representation.

Gate semantics (``leftmost gate acts first`` on the state):

* ``X(q)``, ``CX(c, t)``, ``MCX(controls, t)``: bit flips; controls are
  ``(qubit, value)`` pairs, value 1 fires on ``|1>`` (closed) and value 0 on
  ``|0>`` (open).
* ``CRot(axis, angle, controls, t)``: ``exp(-i angle A / 2)`` on ``t`` for
  ``A`` in X/Y/Z, applied when every control matches.
* ``CPauliRot(pauli, targets, angle, controls)``: ``exp(-i angle P / 2)``
  on the target register.
* ``CPhase(angle, controls)``: multiplies the matching basis states by
  ``exp(i angle)``; there is no target.
* ``GPhase(angle)``: global ``exp(i angle)``.
* ``Transposition(x, y, qubits)`` and ``PermToPrefix(basis, qubits)`` are
  permutation macros on a (sub)register, lowered to X/CX/MCX.

The text format writes one gate per line, e.g. ``MCX [-1,+2,-4] 0`` where the
sign gives the control polarity (``-`` open, ``+`` closed).
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .bitpauli import BitString, PauliString, apply_xcx, parse_pauli
from .subspace import BasisSet

Controls = tuple  # tuple[tuple[int, int], ...]


def make_controls(qubits: Sequence[int], bits: Iterable[int]) -> Controls:
    return tuple((int(q), int(v)) for q, v in zip(qubits, bits))


def _check_controls(controls: Controls) -> None:
    qs = [q for q, _ in controls]
    if len(set(qs)) != len(qs):
        raise ValueError(f"repeated control qubit in {controls}")
    for _, v in controls:
        if v not in (0, 1):
            raise ValueError(f"control polarity must be 0 or 1, got {v}")


# --------------------------------------------------------------------- gates


@dataclass(frozen=True)
class X:
    q: int

    def qubits(self):
        return (self.q,)

    def inverse(self):
        return self


@dataclass(frozen=True)
class CX:
    control: int
    target: int

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError("CX control equals target")

    def qubits(self):
        return (self.control, self.target)

    def inverse(self):
        return self


@dataclass(frozen=True)
class MCX:
    controls: Controls
    target: int

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(tuple(c) for c in self.controls))
        _check_controls(self.controls)
        if self.target in (q for q, _ in self.controls):
            raise ValueError("MCX target is also a control")

    def qubits(self):
        return tuple(q for q, _ in self.controls) + (self.target,)

    def inverse(self):
        return self


@dataclass(frozen=True)
class CRot:
    axis: str
    angle: float
    controls: Controls
    target: int

    def __post_init__(self):
        if self.axis not in ("X", "Y", "Z"):
            raise ValueError(f"unknown rotation axis {self.axis!r}")
        object.__setattr__(self, "controls", tuple(tuple(c) for c in self.controls))
        object.__setattr__(self, "angle", float(self.angle))
        _check_controls(self.controls)
        if self.target in (q for q, _ in self.controls):
            raise ValueError("rotation target is also a control")

    def qubits(self):
        return tuple(q for q, _ in self.controls) + (self.target,)

    def inverse(self):
        return replace(self, angle=-self.angle)


@dataclass(frozen=True)
class CPhase:
    angle: float
    controls: Controls

    def __post_init__(self):
        object.__setattr__(self, "controls", tuple(tuple(c) for c in self.controls))
        object.__setattr__(self, "angle", float(self.angle))
        _check_controls(self.controls)

    def qubits(self):
        return tuple(q for q, _ in self.controls)

    def inverse(self):
        return replace(self, angle=-self.angle)


@dataclass(frozen=True)
class CPauliRot:
    pauli: PauliString
    targets: tuple
    angle: float
    controls: Controls = ()

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "controls", tuple(tuple(c) for c in self.controls))
        object.__setattr__(self, "angle", float(self.angle))
        _check_controls(self.controls)
        if self.pauli.n != len(self.targets):
            raise ValueError("Pauli length does not match the target register")
        if len(set(self.targets)) != len(self.targets):
            raise ValueError("repeated target qubit")
        if set(self.targets) & {q for q, _ in self.controls}:
            raise ValueError("target register overlaps the controls")

    def qubits(self):
        return tuple(q for q, _ in self.controls) + self.targets

    def inverse(self):
        return replace(self, angle=-self.angle)


@dataclass(frozen=True)
class GPhase:
    angle: float

    def __post_init__(self):
        object.__setattr__(self, "angle", float(self.angle))

    def qubits(self):
        return ()

    def inverse(self):
        return GPhase(-self.angle)


@dataclass(frozen=True)
class Transposition:
    """Exchange ``|x>`` and ``|y>`` on ``qubits`` (default: all, in order)."""

    x: BitString
    y: BitString
    qubits_: tuple | None = None

    def __post_init__(self):
        if self.x.n != self.y.n:
            raise ValueError("transposition states differ in length")
        if self.x == self.y:
            raise ValueError("transposition requires x != y")
        if self.qubits_ is not None:
            object.__setattr__(self, "qubits_", tuple(self.qubits_))
            if len(self.qubits_) != self.x.n:
                raise ValueError("register size does not match the states")

    def qubits(self):
        return self.qubits_ if self.qubits_ is not None else tuple(range(self.x.n))

    def inverse(self):
        return self


@dataclass(frozen=True)
class PermToPrefix:
    """Send the j-th state of ``basis`` to ``|j>`` on ``qubits``.

    The full permutation is the one realized by
    :func:`perm_to_prefix_transpositions`; ``inverse`` marks the adjoint.
    """

    basis: BasisSet
    qubits_: tuple | None = None
    inverse_: bool = False

    def __post_init__(self):
        if len(self.basis) == 0:
            raise ValueError("PermToPrefix needs a nonempty basis set")
        if self.qubits_ is not None:
            object.__setattr__(self, "qubits_", tuple(self.qubits_))
            if len(self.qubits_) != self.basis.n:
                raise ValueError("register size does not match the basis set")

    def qubits(self):
        return self.qubits_ if self.qubits_ is not None else tuple(range(self.basis.n))

    def inverse(self):
        return replace(self, inverse_=not self.inverse_)


MACROS = (Transposition, PermToPrefix, CPauliRot)


# ------------------------------------------------------------------- circuit


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            for q in g.qubits():
                if not 0 <= q < self.n:
                    raise ValueError(f"{g} touches qubit {q} outside 0..{self.n - 1}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if other.n != self.n:
            raise ValueError("cannot concatenate circuits of different width")
        return Circuit(self.n, self.gates + other.gates)

    def then(self, *gates) -> "Circuit":
        return Circuit(self.n, self.gates + tuple(gates))

    def adjoint(self) -> "Circuit":
        return adjoint(self)

    def lowered(self) -> "Circuit":
        return lower(self)

    def count(self, kind) -> int:
        return sum(isinstance(g, kind) for g in self.gates)

    def embed(self, qubits: Sequence[int], n: int) -> "Circuit":
        """Relabel local qubit j as ``qubits[j]`` in an ``n``-qubit circuit."""
        return Circuit(n, tuple(_relabel(g, list(qubits)) for g in self.gates))

    def to_text(self) -> str:
        return to_text(self)

    def to_json(self) -> str:
        return json.dumps(circuit_to_dict(self), indent=1)


def adjoint(c: Circuit) -> Circuit:
    return Circuit(c.n, tuple(g.inverse() for g in reversed(c.gates)))


def _relabel(g, m):
    rc = lambda cs: tuple((m[q], v) for q, v in cs)  # noqa: E731
    if isinstance(g, X):
        return X(m[g.q])
    if isinstance(g, CX):
        return CX(m[g.control], m[g.target])
    if isinstance(g, MCX):
        return MCX(rc(g.controls), m[g.target])
    if isinstance(g, CRot):
        return CRot(g.axis, g.angle, rc(g.controls), m[g.target])
    if isinstance(g, CPhase):
        return CPhase(g.angle, rc(g.controls))
    if isinstance(g, CPauliRot):
        return CPauliRot(g.pauli, tuple(m[q] for q in g.targets), g.angle, rc(g.controls))
    if isinstance(g, GPhase):
        return g
    if isinstance(g, Transposition):
        return Transposition(g.x, g.y, tuple(m[q] for q in g.qubits()))
    if isinstance(g, PermToPrefix):
        return PermToPrefix(g.basis, tuple(m[q] for q in g.qubits()), g.inverse_)
    raise TypeError(f"unknown gate {g!r}")


# ------------------------------------------------------------------ lowering


def fanout_layers(root: int, others: Sequence[int]) -> list[list[CX]]:
    """Balanced CX fan-out copying ``root`` onto ``others``, grouped in layers.

    Each round every qubit holding the value copies it to one fresh qubit,
    so the depth is ``ceil(log2(len(others) + 1))``.
    """
    layers: list[list[CX]] = []

    def grow(r, rest, depth):
        if not rest:
            return
        keep = (len(rest) + 2) // 2 - 1
        near, far = rest[:keep], rest[keep:]
        new_root = far[-1]
        while len(layers) <= depth:
            layers.append([])
        layers[depth].append(CX(r, new_root))
        grow(r, near, depth + 1)
        grow(new_root, far[:-1], depth + 1)

    grow(root, list(others), 0)
    return [sorted(layer, key=lambda g: (g.control, g.target)) for layer in layers]


def ghz_compress(pivot: int, support: Sequence[int]) -> list[CX]:
    """CX network mapping the X-string on ``support`` (incl. pivot) to ``X_pivot``.

    This is the inverse of the GHZ fan-out, so as a basis-state map it sends
    ``z`` and ``z ^ support`` to two states differing only on ``pivot``.
    """
    others = [q for q in support if q != pivot]
    return [g for layer in reversed(fanout_layers(pivot, others)) for g in layer]


def _transposition_gates(x: BitString, y: BitString, qubits: Sequence[int]) -> list:
    d = x ^ y
    local = d.support()
    pivot = local[0]
    compress = ghz_compress(pivot, local)
    image = apply_xcx(x, compress)
    rest = [j for j in range(x.n) if j != pivot]
    m = list(qubits)
    if not rest:
        return [X(m[pivot])]
    glob = lambda g: CX(m[g.control], m[g.target])  # noqa: E731
    M = [glob(g) for g in compress]
    mcx = MCX(tuple((m[j], image[j]) for j in rest), m[pivot])
    return M + [mcx] + list(reversed(M))


def lower_transposition(x, y, qubits: Sequence[int] | None = None, n: int | None = None) -> Circuit:
    """X/CX/MCX circuit for the transposition of ``|x>`` and ``|y>``.

    Pivot is the lowest-index qubit where ``x`` and ``y`` differ; a CX fan-in
    tree over the differing qubits makes the two states adjacent on the pivot
    and a single MCX with polarity-matched controls on every other qubit
    swaps them. No X gates and no ancilla are used.
    """
    x = x if isinstance(x, BitString) else BitString.from_str(x)
    y = y if isinstance(y, BitString) else BitString.from_str(y)
    if x.n != y.n:
        raise ValueError("length mismatch")
    if x == y:
        raise ValueError("transposition requires x != y")
    qubits = list(range(x.n)) if qubits is None else list(qubits)
    return Circuit(n if n is not None else x.n, tuple(_transposition_gates(x, y, qubits)))


def perm_to_prefix_transpositions(B: BasisSet) -> list[tuple[BitString, BitString]]:
    """Transpositions (in circuit order) sending the j-th state of B to |j>.

    Transposition j exchanges the current location of ``z_j`` with ``j`` and
    is skipped when ``z_j`` is already there.
    """
    n = B.n
    location = {}  # original state -> current location (only for moved states)
    occupant = {}  # current location -> original state
    out = []
    for j, z in enumerate(B.states):
        loc = location.get(z.value, z.value)
        if loc == j:
            continue
        other = occupant.get(j, j)
        out.append((BitString(n, loc), BitString(n, j)))
        location[z.value], occupant[j] = j, z.value
        location[other], occupant[loc] = loc, other
    return out


def lower_perm_to_prefix(B: BasisSet, qubits: Sequence[int] | None = None, n: int | None = None) -> Circuit:
    qubits = list(range(B.n)) if qubits is None else list(qubits)
    gates = []
    for x, y in perm_to_prefix_transpositions(B):
        gates += _transposition_gates(x, y, qubits)
    return Circuit(n if n is not None else B.n, tuple(gates))


# single-qubit rotations U with U P U^dagger = Z, written in circuit order
_TO_Z = {"X": ("Y", -math.pi / 2), "Y": ("X", math.pi / 2)}


def lower_cpaulirot(g: CPauliRot, n: int | None = None) -> Circuit:
    """Basis change, CX parity chain, one controlled Z-rotation, and undo."""
    letters = g.pauli.letters()
    active = [(q, ch) for q, ch in zip(g.targets, letters) if ch != "I"]
    if not active:
        raise ValueError("identity Pauli on the target register")
    angle = g.angle * g.pauli.sign
    n = n if n is not None else 1 + max(g.qubits())
    if len(active) == 1:
        q, ch = active[0]
        return Circuit(n, (CRot(ch, angle, g.controls, q),))
    basis = [CRot(_TO_Z[ch][0], _TO_Z[ch][1], (), q) for q, ch in active if ch != "Z"]
    qs = [q for q, _ in active]
    chain = [CX(qs[i], qs[i + 1]) for i in range(len(qs) - 1)]
    core = CRot("Z", angle, g.controls, qs[-1])
    undo_basis = [b.inverse() for b in reversed(basis)]
    return Circuit(n, tuple(basis + chain + [core] + list(reversed(chain)) + undo_basis))


def lower(c: Circuit) -> Circuit:
    """Expand every macro down to X, CX, MCX, CRot, CPhase and GPhase."""
    out = []
    for g in c.gates:
        if isinstance(g, Transposition):
            out += _transposition_gates(g.x, g.y, g.qubits())
        elif isinstance(g, PermToPrefix):
            sub = lower_perm_to_prefix(g.basis, g.qubits(), c.n)
            out += list(adjoint(sub).gates if g.inverse_ else sub.gates)
        elif isinstance(g, CPauliRot):
            out += list(lower_cpaulirot(g, c.n).gates)
        else:
            out.append(g)
    return Circuit(c.n, tuple(out))


# ----------------------------------------------------------------- resources


@dataclass(frozen=True)
class ResourceCount:
    """Model-based Clifford+T cost estimate of a circuit.

    ``rotation_count`` counts arbitrary-angle rotation and phase gates in the
    lowered IR; ``cx`` and ``t_count`` include the modelled cost of
    multi-controlled gates. ``ir_depth`` is the ASAP layer count of the
    lowered IR with every gate (MCX included) taken as a single layer.
    """

    cx: int = 0
    t_count: int = 0
    rotation_count: int = 0
    mcx_count: int = 0
    ancillas: int = 0
    epsilon: float = 1e-10
    t_model_constant: float = 3.0
    ir_gates: int = 0
    ir_depth: int = 0
    model_based: bool = True

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def rotation_t_cost(epsilon: float, c_t: float = 3.0) -> int:
    """T gates per arbitrary rotation: ``ceil(c_t * log2(1/epsilon))``."""
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    return math.ceil(c_t * math.log2(1 / epsilon) - 1e-9)


def toffoli_count(m: int) -> int:
    """Toffolis for an m-controlled X under the linear one-ancilla model."""
    if m <= 1:
        return 0
    if m == 2:
        return 1
    return 4 * (m - 2)


def mcx_cost(m: int) -> tuple[int, int, int]:
    """(cx, t, ancillas) of an m-controlled X; open controls cost only X gates."""
    if m == 0:
        return 0, 0, 0
    if m == 1:
        return 1, 0, 0
    tof = toffoli_count(m)
    return 6 * tof, 7 * tof, 1 if m >= 3 else 0


def _is_clifford_angle(angle: float, period: float) -> bool:
    r = math.remainder(angle, period)
    return abs(r) < 1e-12


def count_resources(c: Circuit, epsilon: float = 1e-10, t_model_constant: float = 3.0) -> ResourceCount:
    """Estimate CX, T, rotation and ancilla counts after macro lowering.

    Model: an uncontrolled rotation costs ``rotation_t_cost`` T gates unless
    its angle is a multiple of pi/2 (Clifford up to phase). A rotation with
    m controls costs two rotations plus two m-controlled X gates. An
    m-controlled phase is an (m-1)-controlled phase rotation on its last
    control qubit. MCX gates use :func:`mcx_cost`. ``ancillas`` is what
    the MCX decomposition would borrow; the IR itself never adds qubits.
    """
    rot_t = rotation_t_cost(epsilon, t_model_constant)
    low = lower(c)
    cx = t = rots = mcx = anc = 0
    for g in low.gates:
        if isinstance(g, CX):
            cx += 1
        elif isinstance(g, MCX):
            mcx += 1
            gcx, gt, ga = mcx_cost(len(g.controls))
            cx, t, anc = cx + gcx, t + gt, max(anc, ga)
        elif isinstance(g, (CRot, CPhase)):
            m = len(g.controls)
            if isinstance(g, CPhase):
                if m == 0:
                    continue  # global phase
                m -= 1
            if _is_clifford_angle(g.angle, 4 * math.pi if isinstance(g, CRot) else 2 * math.pi):
                continue  # identity
            if m == 0:
                if _is_clifford_angle(g.angle, math.pi / 2):
                    continue
                rots += 1
                t += rot_t
            else:
                rots += 1
                gcx, gt, ga = mcx_cost(m)
                cx, t, anc = cx + 2 * gcx, t + 2 * rot_t + 2 * gt, max(anc, ga)
    return ResourceCount(
        cx=cx,
        t_count=t,
        rotation_count=rots,
        mcx_count=mcx,
        ancillas=anc,
        epsilon=epsilon,
        t_model_constant=t_model_constant,
        ir_gates=len(low),
        ir_depth=ir_depth(low),
    )


def ir_depth(c: Circuit) -> int:
    level = [0] * c.n
    depth = 0
    for g in c.gates:
        qs = g.qubits()
        if not qs:
            continue
        d = 1 + max(level[q] for q in qs)
        for q in qs:
            level[q] = d
        depth = max(depth, d)
    return depth


# ------------------------------------------------------------- serialization


def _fmt(x: float) -> str:
    return repr(float(x))


def _fmt_controls(controls: Controls) -> str:
    return "[" + ",".join(("+" if v else "-") + str(q) for q, v in controls) + "]"


def _fmt_list(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


def gate_to_text(g) -> str:
    if isinstance(g, X):
        return f"X {g.q}"
    if isinstance(g, CX):
        return f"CX {g.control} {g.target}"
    if isinstance(g, MCX):
        return f"MCX {_fmt_controls(g.controls)} {g.target}"
    if isinstance(g, CRot):
        return f"CR{g.axis}({_fmt(g.angle)}) {_fmt_controls(g.controls)} {g.target}"
    if isinstance(g, CPhase):
        return f"CP({_fmt(g.angle)}) {_fmt_controls(g.controls)}"
    if isinstance(g, GPhase):
        return f"GPHASE({_fmt(g.angle)})"
    if isinstance(g, CPauliRot):
        return f"CPAULI({_fmt(g.angle)}) {g.pauli} {_fmt_list(g.targets)} {_fmt_controls(g.controls)}"
    if isinstance(g, Transposition):
        return f"TRANSPOSITION {g.x} {g.y} {_fmt_list(g.qubits())}"
    if isinstance(g, PermToPrefix):
        name = "PERM_FROM_PREFIX" if g.inverse_ else "PERM_TO_PREFIX"
        return f"{name} {_fmt_list(g.basis.states)} {_fmt_list(g.qubits())}"
    raise TypeError(f"unknown gate {g!r}")


def to_text(c: Circuit) -> str:
    lines = [f"QUBITS {c.n}"] + [gate_to_text(g) for g in c.gates]
    return "\n".join(lines) + "\n"


_CTRL = r"\[([^\]]*)\]"


def _parse_controls(text: str) -> Controls:
    text = text.strip()
    if not text:
        return ()
    out = []
    for item in text.split(","):
        item = item.strip()
        if item[0] not in "+-":
            raise ValueError(f"control {item!r} lacks a polarity sign")
        out.append((int(item[1:]), 1 if item[0] == "+" else 0))
    return tuple(out)


def _parse_ints(text: str) -> tuple:
    text = text.strip()
    return tuple(int(s) for s in text.split(",")) if text else ()


def gate_from_text(line: str):
    line = line.strip()
    if m := re.fullmatch(r"X (\d+)", line):
        return X(int(m[1]))
    if m := re.fullmatch(r"CX (\d+) (\d+)", line):
        return CX(int(m[1]), int(m[2]))
    if m := re.fullmatch(r"MCX " + _CTRL + r" (\d+)", line):
        return MCX(_parse_controls(m[1]), int(m[2]))
    if m := re.fullmatch(r"CR([XYZ])\(([^)]*)\) " + _CTRL + r" (\d+)", line):
        return CRot(m[1], float(m[2]), _parse_controls(m[3]), int(m[4]))
    if m := re.fullmatch(r"CP\(([^)]*)\) " + _CTRL, line):
        return CPhase(float(m[1]), _parse_controls(m[2]))
    if m := re.fullmatch(r"GPHASE\(([^)]*)\)", line):
        return GPhase(float(m[1]))
    if m := re.fullmatch(r"CPAULI\(([^)]*)\) ([-+]?[IXYZ]+) " + _CTRL + " " + _CTRL, line):
        return CPauliRot(parse_pauli(m[2]), _parse_ints(m[3]), float(m[1]), _parse_controls(m[4]))
    if m := re.fullmatch(r"TRANSPOSITION ([01]+) ([01]+) " + _CTRL, line):
        return Transposition(BitString.from_str(m[1]), BitString.from_str(m[2]), _parse_ints(m[3]))
    if m := re.fullmatch(r"(PERM_TO_PREFIX|PERM_FROM_PREFIX) " + _CTRL + " " + _CTRL, line):
        basis = BasisSet.from_strings([s.strip() for s in m[2].split(",")])
        return PermToPrefix(basis, _parse_ints(m[3]), m[1] == "PERM_FROM_PREFIX")
    raise ValueError(f"cannot parse gate line {line!r}")


def from_text(text: str) -> Circuit:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not (m := re.fullmatch(r"QUBITS (\d+)", lines[0])):
        raise ValueError("circuit text must start with 'QUBITS <n>'")
    return Circuit(int(m[1]), tuple(gate_from_text(ln) for ln in lines[1:]))


def gate_to_dict(g) -> dict:
    kind = type(g).__name__
    ctrl = lambda cs: [[q, v] for q, v in cs]  # noqa: E731
    if isinstance(g, X):
        return {"kind": kind, "qubit": g.q}
    if isinstance(g, CX):
        return {"kind": kind, "control": g.control, "target": g.target}
    if isinstance(g, MCX):
        return {"kind": kind, "controls": ctrl(g.controls), "target": g.target}
    if isinstance(g, CRot):
        return {"kind": kind, "axis": g.axis, "angle": g.angle, "controls": ctrl(g.controls), "target": g.target}
    if isinstance(g, CPhase):
        return {"kind": kind, "angle": g.angle, "controls": ctrl(g.controls)}
    if isinstance(g, GPhase):
        return {"kind": kind, "angle": g.angle}
    if isinstance(g, CPauliRot):
        return {
            "kind": kind,
            "pauli": str(g.pauli),
            "targets": list(g.targets),
            "angle": g.angle,
            "controls": ctrl(g.controls),
        }
    if isinstance(g, Transposition):
        return {"kind": kind, "x": str(g.x), "y": str(g.y), "qubits": list(g.qubits())}
    if isinstance(g, PermToPrefix):
        return {
            "kind": kind,
            "basis": [str(z) for z in g.basis],
            "qubits": list(g.qubits()),
            "inverse": g.inverse_,
        }
    raise TypeError(f"unknown gate {g!r}")


def gate_from_dict(d: dict):
    kind = d["kind"]
    ctrl = lambda cs: tuple((int(q), int(v)) for q, v in cs)  # noqa: E731
    if kind == "X":
        return X(d["qubit"])
    if kind == "CX":
        return CX(d["control"], d["target"])
    if kind == "MCX":
        return MCX(ctrl(d["controls"]), d["target"])
    if kind == "CRot":
        return CRot(d["axis"], d["angle"], ctrl(d["controls"]), d["target"])
    if kind == "CPhase":
        return CPhase(d["angle"], ctrl(d["controls"]))
    if kind == "GPhase":
        return GPhase(d["angle"])
    if kind == "CPauliRot":
        return CPauliRot(parse_pauli(d["pauli"]), tuple(d["targets"]), d["angle"], ctrl(d["controls"]))
    if kind == "Transposition":
        return Transposition(BitString.from_str(d["x"]), BitString.from_str(d["y"]), tuple(d["qubits"]))
    if kind == "PermToPrefix":
        return PermToPrefix(BasisSet.from_strings(d["basis"]), tuple(d["qubits"]), bool(d.get("inverse", False)))
    raise ValueError(f"unknown gate kind {kind!r}")


def circuit_to_dict(c: Circuit) -> dict:
    return {"n": c.n, "gates": [gate_to_dict(g) for g in c.gates]}


def circuit_from_dict(d: dict) -> Circuit:
    return Circuit(int(d["n"]), tuple(gate_from_dict(g) for g in d["gates"]))


def from_json(text: str) -> Circuit:
    return circuit_from_dict(json.loads(text))
