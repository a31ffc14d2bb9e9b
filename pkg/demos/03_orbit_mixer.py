"""A mixer on an X-orbit: one CX network shared by every generator."""

import numpy as np
from projsynth import examples as ex
from projsynth.circuit import count_resources, to_text
from projsynth.subspace import detect_orbit
from projsynth.synth import orbit_frame
from projsynth.verify import baseline_pauli_terms, circuit_unitary

spec = ex.orbit_mixer_example(t1=0.3, t2=0.5)
(sigma1, B, _), (sigma2, _, _) = spec.terms
orbit = detect_orbit(B)
print("reference", orbit.reference, "generators", [str(g) for g in orbit.generators])

frame = orbit_frame(orbit)
print("network:", frame.network)
print("pivots", frame.pivots, "fixed word", frame.residual, "on", frame.residual_qubits)

c = spec.circuit()
print(to_text(c), end="")
print("residual:", np.max(np.abs(circuit_unitary(c) - spec.oracle())))

# term-by-term Pauli evolution needs four rotations per generator
print("Pauli terms:", baseline_pauli_terms(sigma1, B), "+", baseline_pauli_terms(sigma2, B))
print("rotations here:", count_resources(c).rotation_count)
