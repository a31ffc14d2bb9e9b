"""Structure of a set ``B`` of computational basis states.

Covers the projector-commutation test, eigenvalue splits under a Z-string,
pairings under an X-string, Pauli X-orbit (affine GF(2) coset) detection and
a greedy cover of ``B`` by disjoint X-orbits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bitpauli import BitString, PauliString, as_bitstring


@dataclass(frozen=True)
class BasisSet:
    """Ordered set of distinct basis states on ``n`` qubits."""

    n: int
    states: tuple[BitString, ...] = ()

    def __post_init__(self):
        states = tuple(self.states)
        object.__setattr__(self, "states", states)
        for z in states:
            if z.n != self.n:
                raise ValueError(f"state {z} has length {z.n}, expected {self.n}")
        if len(set(states)) != len(states):
            raise ValueError("basis states must be distinct")

    @classmethod
    def from_strings(cls, strings: Iterable[str], n: int | None = None) -> "BasisSet":
        states = [as_bitstring(s) for s in strings]
        if n is None:
            if not states:
                raise ValueError("cannot infer n from an empty list")
            n = states[0].n
        return cls(n, tuple(states))

    @classmethod
    def from_ints(cls, n: int, values: Iterable[int]) -> "BasisSet":
        return cls(n, tuple(BitString(n, v) for v in values))

    @classmethod
    def full(cls, n: int) -> "BasisSet":
        return cls.from_ints(n, range(1 << n))

    def __len__(self) -> int:
        return len(self.states)

    def __iter__(self):
        return iter(self.states)

    def __contains__(self, z) -> bool:
        return z in self._lookup

    @property
    def _lookup(self) -> frozenset:
        # cached lazily on the frozen instance
        try:
            return self.__dict__["_set"]
        except KeyError:
            s = frozenset(self.states)
            object.__setattr__(self, "_set", s)
            return s

    def values(self) -> list[int]:
        return [z.value for z in self.states]

    def to_json(self) -> str:
        return json.dumps([str(z) for z in self.states])

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> "BasisSet":
        return cls.from_strings(json.loads(text), n)

    def __str__(self) -> str:
        return "{" + ", ".join(str(z) for z in self.states) + "}"


@dataclass(frozen=True)
class OrbitStructure:
    """``B = reference XOR span(generators)`` with generators in GF(2) RREF."""

    reference: BitString
    generators: tuple[BitString, ...]

    @property
    def k(self) -> int:
        return len(self.generators)

    @property
    def n(self) -> int:
        return self.reference.n

    def states(self) -> list[BitString]:
        """Enumerate the orbit (reference first)."""
        out = [self.reference]
        for g in self.generators:
            out += [z ^ g for z in out]
        return out

    def basis_set(self) -> BasisSet:
        return BasisSet(self.n, tuple(self.states()))


@dataclass(frozen=True)
class PairSet:
    pairs: tuple[tuple[BitString, BitString], ...]
    ordered: bool

    def __len__(self) -> int:
        return len(self.pairs)

    def states(self) -> list[BitString]:
        return [z for pair in self.pairs for z in pair]


def _check_lengths(sigma: PauliString, B: BasisSet) -> None:
    if sigma.n != B.n:
        raise ValueError(f"length mismatch: Pauli on {sigma.n} qubits, basis on {B.n}")


def projector_violation(sigma: PauliString, B: BasisSet) -> BitString | None:
    """First state ``z`` of ``B`` with ``z ^ a`` outside ``B``, if any."""
    _check_lengths(sigma, B)
    for z in B:
        if (z ^ sigma.a) not in B:
            return z
    return None


def commutes_with_projector(sigma: PauliString, B: BasisSet) -> bool:
    return projector_violation(sigma, B) is None


def split_by_z_eigenvalue(B: BasisSet, b: BitString) -> tuple[BasisSet, BasisSet]:
    """Split ``B`` into the +1 and -1 eigenstates of ``Z**b``."""
    if b.n != B.n:
        raise ValueError("length mismatch")
    plus = tuple(z for z in B if b.dot(z) % 2 == 0)
    minus = tuple(z for z in B if b.dot(z) % 2 == 1)
    return BasisSet(B.n, plus), BasisSet(B.n, minus)


def pair_by_x(B: BasisSet, sigma: PauliString):
    """Pair the states of ``B`` along ``X**a``.

    If ``X**a`` and ``Z**b`` anticommute, returns one ordered ``PairSet`` in
    which every first element is a +1 eigenstate of ``Z**b``. Otherwise
    returns ``(E_plus, E_minus)``, unordered pairs keyed by the common
    ``Z**b`` eigenvalue. Pairs appear in first-occurrence order.
    """
    _check_lengths(sigma, B)
    if sigma.a.value == 0:
        raise ValueError("X-part of sigma is trivial; nothing to pair")
    bad = projector_violation(sigma, B)
    if bad is not None:
        raise ValueError(f"sigma does not commute with P_B: {bad} maps outside B")
    a, b = sigma.a, sigma.b
    seen: set[BitString] = set()
    raw = []
    for z in B:
        if z in seen:
            continue
        w = z ^ a
        seen.update((z, w))
        raw.append((z, w))
    if sigma.x_part_anticommutes():
        pairs = tuple((x, y) if b.dot(x) % 2 == 0 else (y, x) for x, y in raw)
        return PairSet(pairs, ordered=True)
    plus = tuple(p for p in raw if b.dot(p[0]) % 2 == 0)
    minus = tuple(p for p in raw if b.dot(p[0]) % 2 == 1)
    return PairSet(plus, ordered=False), PairSet(minus, ordered=False)


def rref(vectors: Iterable[BitString], n: int) -> list[BitString]:
    """Reduced row echelon basis over GF(2); pivots are leading (leftmost) bits."""
    rows: list[int] = []
    for v in vectors:
        x = v.value
        for r in rows:
            if x & _lead(r):
                x ^= r
        if x:
            lead = _lead(x)
            rows = [r ^ x if r & lead else r for r in rows]
            rows.append(x)
    rows.sort(reverse=True)
    return [BitString(n, r) for r in rows]


def _lead(x: int) -> int:
    return 1 << (x.bit_length() - 1)


def in_span(v: BitString, basis: Sequence[BitString]) -> bool:
    """Membership test against an RREF basis."""
    x = v.value
    for r in sorted((g.value for g in basis), reverse=True):
        if x & _lead(r):
            x ^= r
    return x == 0


def detect_orbit(B: BasisSet) -> OrbitStructure | None:
    """Return the X-orbit structure of ``B``, or ``None`` if it is not one."""
    if len(B) == 0:
        raise ValueError("empty basis set")
    size = len(B)
    if size & (size - 1):
        return None
    z0 = B.states[0]
    gens = rref((z ^ z0 for z in B), B.n)
    if (1 << len(gens)) != size:
        return None
    return OrbitStructure(z0, tuple(gens))


def cover_by_orbits(B: BasisSet, sigma: PauliString) -> list[OrbitStructure]:
    """Greedy partition of ``B`` into sigma-invariant X-orbit cosets.

    Each part is anchored at the first uncovered state (input order) and
    grown to the largest coset inside the uncovered remainder that contains
    the X-part of ``sigma`` in its difference space. Candidate difference
    vectors are tried in the order their states occur in ``B``; among equally
    large cosets the first one found wins. Not guaranteed to be minimal.
    """
    bad = projector_violation(sigma, B)
    if bad is not None:
        raise ValueError(f"sigma does not commute with P_B: {bad} maps outside B")
    a = sigma.a
    remaining = list(B.states)
    parts = []
    while remaining:
        rem_set = set(remaining)
        z = remaining[0]
        gens = [a] if a.value else []
        coset = {z, z ^ a}
        coset, gens = _largest_coset(z, coset, gens, remaining, rem_set)
        parts.append(OrbitStructure(z, tuple(rref(gens, B.n))))
        remaining = [w for w in remaining if w not in coset]
    return parts


def _largest_coset(z, coset, gens, remaining, rem_set):
    cap = 1 << (len(rem_set).bit_length() - 1)
    candidates = [w ^ z for w in remaining]
    best = (coset, gens)

    def search(coset, gens, start):
        nonlocal best
        if len(coset) > len(best[0]):
            best = (coset, gens)
        if len(best[0]) >= cap or 2 * len(coset) > cap:
            return
        basis = rref(gens, z.n)
        for i in range(start, len(candidates)):
            v = candidates[i]
            if v.value == 0 or in_span(v, basis):
                continue
            shifted = {w ^ v for w in coset}
            if shifted <= rem_set:
                search(coset | shifted, gens + [v], i + 1)
                if len(best[0]) >= cap:
                    return

    search(coset, gens, 0)
    return best
