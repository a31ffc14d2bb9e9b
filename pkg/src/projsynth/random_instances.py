"""Random sigma-closed instances for property checks and benchmarks."""

from __future__ import annotations

import numpy as np

from .bitpauli import BitString, PauliString
from .subspace import BasisSet, OrbitStructure, rref


def random_pauli(rng: np.random.Generator, n: int, sign: bool = False) -> PauliString:
    a = BitString(n, int(rng.integers(1 << n)))
    b = BitString(n, int(rng.integers(1 << n)))
    s = int(rng.choice([1, -1])) if sign else 1
    return PauliString(a, b, s)


def random_closed_basis(rng: np.random.Generator, sigma: PauliString, max_size: int = 16) -> BasisSet:
    """Random nonempty B closed under the X-part of sigma, in random order."""
    n = sigma.n
    a = sigma.a
    cap = min(max_size, 1 << n)
    target = int(rng.integers(1, cap + 1))
    states: set = set()
    for _ in range(8 * cap):
        if len(states) >= target:
            break
        z = BitString(n, int(rng.integers(1 << n)))
        pair = {z, z ^ a}
        if len(states | pair) <= cap:
            states |= pair
    out = sorted(states, key=lambda z: z.value)
    rng.shuffle(out)
    return BasisSet(n, tuple(out))


def random_orbit(rng: np.random.Generator, n: int, k: int, must_contain: BitString | None = None) -> OrbitStructure:
    """Random k-dimensional X-orbit, optionally with ``must_contain`` in its span."""
    gens = [must_contain] if must_contain is not None and must_contain.value else []
    while len(rref(gens, n)) < k:
        gens.append(BitString(n, int(rng.integers(1, 1 << n))))
    z = BitString(n, int(rng.integers(1 << n)))
    return OrbitStructure(z, tuple(rref(gens, n)))


def random_orbit_instance(rng: np.random.Generator, n: int, max_k: int = 4, sign: bool = False):
    """Pauli string and shuffled orbit basis set with sigma's X-part inside the span."""
    sigma = random_pauli(rng, n, sign)
    k_min = 1 if sigma.a.value else 0
    k = int(rng.integers(k_min, max(k_min, min(n, max_k)) + 1))
    orbit = random_orbit(rng, n, k, sigma.a)
    states = orbit.states()
    rng.shuffle(states)
    return sigma, BasisSet(n, tuple(states))
