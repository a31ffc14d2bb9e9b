"""Exact circuits for ``exp(i t sigma P_B)``: a Pauli string restricted to a
subspace spanned by computational basis states."""

from .bitpauli import BitString, PauliString, apply_to_basis, commutes, conjugate_through, parse_pauli
from .circuit import (
    CPauliRot,
    CPhase,
    CRot,
    CX,
    Circuit,
    GPhase,
    MCX,
    PermToPrefix,
    ResourceCount,
    Transposition,
    X,
    adjoint,
    count_resources,
    lower,
    lower_cpaulirot,
    lower_perm_to_prefix,
    lower_transposition,
)
from .subspace import BasisSet, OrbitStructure, commutes_with_projector, cover_by_orbits, detect_orbit
from .synth import (
    CommutationError,
    LowPassPlan,
    SynthesisReport,
    highpass_patterns,
    lowpass_patterns,
    synth_general,
    synth_lowpass_unitary,
    synth_orbit,
    synth_orbit_terms,
    synthesize,
)
from .verify import baseline_pauli_terms, circuit_unitary, exact_evolution, verify_circuit

__version__ = "0.1.0"
