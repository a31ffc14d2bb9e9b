"""Bitstrings and Pauli strings in symplectic form.

Conventions used throughout the package:

* Qubit 0 is the leftmost character of a textual bitstring and the most
  significant bit of its integer value (big-endian).
* A Pauli string is stored as ``sign * i**(a.b) X**a Z**b`` with bit vectors
  ``a`` (X-part) and ``b`` (Z-part). With ``sign=+1`` this is exactly the
  tensor product of the letters I, X, Y, Z, since ``Y = i X Z``.
* Phases are tracked exactly as powers of ``i``; no floating point here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

_I_POWERS = (1, 1j, -1, -1j)


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, order=True)
class BitString:
    """Fixed-length binary word; ``value`` holds the big-endian integer."""

    n: int
    value: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("bitstring length must be nonnegative")
        if not 0 <= self.value < (1 << self.n) and not (self.n == 0 and self.value == 0):
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")

    @classmethod
    def from_str(cls, text: str) -> "BitString":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a bitstring: {text!r}")
        return cls(len(text), int(text, 2) if text else 0)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitString":
        bits = list(bits)
        value = 0
        for bit in bits:
            if bit not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {bit}")
            value = (value << 1) | bit
        return cls(len(bits), value)

    @classmethod
    def zeros(cls, n: int) -> "BitString":
        return cls(n, 0)

    @classmethod
    def unit(cls, n: int, j: int) -> "BitString":
        return cls(n, 1 << (n - 1 - j))

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b") if self.n else ""

    def __repr__(self) -> str:
        return f"BitString('{self}')"

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> int:
        if not -self.n <= j < self.n:
            raise IndexError(j)
        j %= self.n
        return (self.value >> (self.n - 1 - j)) & 1

    def __iter__(self):
        return (self[j] for j in range(self.n))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self)

    def _check(self, other: "BitString") -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")

    def __xor__(self, other: "BitString") -> "BitString":
        self._check(other)
        return BitString(self.n, self.value ^ other.value)

    def __and__(self, other: "BitString") -> "BitString":
        self._check(other)
        return BitString(self.n, self.value & other.value)

    def __or__(self, other: "BitString") -> "BitString":
        self._check(other)
        return BitString(self.n, self.value | other.value)

    def dot(self, other: "BitString") -> int:
        """Integer inner product (not reduced)."""
        self._check(other)
        return _popcount(self.value & other.value)

    def weight(self) -> int:
        return _popcount(self.value)

    def support(self) -> list[int]:
        return [j for j in range(self.n) if self[j]]

    def flip(self, j: int) -> "BitString":
        return BitString(self.n, self.value ^ (1 << (self.n - 1 - j)))

    def restrict(self, qubits: Sequence[int]) -> "BitString":
        """Sub-word on ``qubits`` (in the given order)."""
        return BitString.from_bits(self[q] for q in qubits)


def as_bitstring(x) -> BitString:
    if isinstance(x, BitString):
        return x
    if isinstance(x, str):
        return BitString.from_str(x)
    raise TypeError(f"cannot interpret {x!r} as a bitstring")


@dataclass(frozen=True)
class PauliString:
    """``sign * i**(a.b) X**a Z**b``."""

    a: BitString
    b: BitString
    sign: int = 1

    def __post_init__(self):
        if self.a.n != self.b.n:
            raise ValueError("X- and Z-parts must have equal length")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def n(self) -> int:
        return self.a.n

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(BitString.zeros(n), BitString.zeros(n))

    @classmethod
    def from_parts(cls, a, b, sign: int = 1) -> "PauliString":
        return cls(as_bitstring(a), as_bitstring(b), sign)

    def letters(self) -> str:
        out = []
        for x, z in zip(self.a, self.b):
            out.append("IZXY"[2 * x + z])
        return "".join(out)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + self.letters()

    def __repr__(self) -> str:
        return f"PauliString('{self}')"

    def is_identity(self) -> bool:
        return self.a.value == 0 and self.b.value == 0

    def weight(self) -> int:
        return (self.a | self.b).weight()

    def restrict(self, qubits: Sequence[int]) -> "PauliString":
        """Letters on ``qubits`` with sign +1."""
        return PauliString(self.a.restrict(qubits), self.b.restrict(qubits))

    def x_part_anticommutes(self) -> bool:
        """True iff ``X**a`` and ``Z**b`` anticommute."""
        return self.a.dot(self.b) % 2 == 1

    def negate(self) -> "PauliString":
        return PauliString(self.a, self.b, -self.sign)


def parse_pauli(text: str) -> PauliString:
    """Parse ``[+|-]`` followed by a word over ``IXYZ``."""
    text = text.strip()
    sign = 1
    if text[:1] in ("+", "-", "−"):
        sign = 1 if text[0] == "+" else -1
        text = text[1:]
    if not text:
        raise ValueError("empty Pauli string")
    a, b = [], []
    for ch in text:
        if ch not in "IXYZ":
            raise ValueError(f"invalid Pauli letter {ch!r}")
        a.append(1 if ch in "XY" else 0)
        b.append(1 if ch in "ZY" else 0)
    return PauliString(BitString.from_bits(a), BitString.from_bits(b), sign)


def as_pauli(x) -> PauliString:
    if isinstance(x, PauliString):
        return x
    if isinstance(x, str):
        return parse_pauli(x)
    raise TypeError(f"cannot interpret {x!r} as a Pauli string")


@dataclass(frozen=True)
class PhasedState:
    """A basis state with a fourth-root-of-unity phase, ``i**power |state>``."""

    power: int
    state: BitString

    def __post_init__(self):
        object.__setattr__(self, "power", self.power % 4)

    @property
    def phase(self) -> complex:
        return _I_POWERS[self.power]


def apply_to_basis(sigma: PauliString, z: BitString) -> PhasedState:
    """Return ``sigma |z>`` as a phased basis state."""
    if sigma.n != z.n:
        raise ValueError(f"length mismatch: {sigma.n} != {z.n}")
    power = sigma.a.dot(sigma.b) + 2 * (sigma.b.dot(z) % 2)
    if sigma.sign < 0:
        power += 2
    return PhasedState(power, z ^ sigma.a)


def commutes(p: PauliString, q: PauliString) -> bool:
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} != {q.n}")
    return (p.a.dot(q.b) + q.a.dot(p.b)) % 2 == 0


def _conjugate_cx(sigma: PauliString, c: int, t: int) -> PauliString:
    a, b = sigma.a, sigma.b
    if a[c]:
        a = a.flip(t)
    if b[t]:
        b = b.flip(c)
    # X^a Z^b maps without sign; only the i^(a.b) prefactor can disagree.
    diff = (sigma.a.dot(sigma.b) - a.dot(b)) % 4
    assert diff in (0, 2), "CX conjugation left the Hermitian class"
    sign = sigma.sign * (-1 if diff == 2 else 1)
    return PauliString(a, b, sign)


def conjugate_through(sigma: PauliString, gates: Sequence) -> PauliString:
    """Return ``s`` with ``M s = sigma M`` for the X/CX circuit ``gates``.

    ``gates`` is in circuit order (first element applied first), so
    ``s = M^dagger sigma M`` is obtained by conjugating with the last gate
    first. Accepts the ``X`` and ``CX`` gate objects of :mod:`projsynth.circuit`
    or plain tuples ``("X", q)`` / ``("CX", c, t)``.
    """
    for gate in reversed(list(gates)):
        kind, qubits = _xcx_kind(gate)
        if kind == "X":
            (q,) = qubits
            if sigma.b[q]:
                sigma = sigma.negate()
        elif kind == "CX":
            c, t = qubits
            sigma = _conjugate_cx(sigma, c, t)
        else:
            raise ValueError(f"unsupported gate for Pauli conjugation: {gate!r}")
    return sigma


def _xcx_kind(gate):
    if isinstance(gate, tuple):
        return gate[0], tuple(gate[1:])
    name = type(gate).__name__
    if name == "X":
        return "X", (gate.q,)
    if name == "CX":
        return "CX", (gate.control, gate.target)
    return name, ()


def apply_xcx(z: BitString, gates: Sequence) -> BitString:
    """Image of a basis state under an X/CX circuit."""
    for gate in gates:
        kind, qubits = _xcx_kind(gate)
        if kind == "X":
            z = z.flip(qubits[0])
        elif kind == "CX":
            c, t = qubits
            if z[c]:
                z = z.flip(t)
        else:
            raise ValueError(f"not an X/CX gate: {gate!r}")
    return z
