"""Diagonal examples: the dihedral trace gate and the MAX 3-CUT phase oracle."""

import numpy as np

from projsynth import examples as ex
from projsynth.circuit import to_text
from projsynth.verify import circuit_unitary

t = 0.6
for n in (2, 3, 4):
    spec = ex.trace_gate_spec(n, t)
    u = circuit_unitary(spec.circuit().lowered())
    dev = np.max(np.abs(np.diag(u) - ex.trace_gate_diagonal(n, t)))
    print(f"trace gate n={n}: {len(spec.terms)} terms, deviation {dev:.1e}")
print(to_text(ex.trace_gate(3, t)), end="")

# two 2-bit colors per edge, code 3 counts as color 2
spec = ex.maxkcut_oracle(3, t=t)
_, B, _ = spec.terms[0]
print("\nequal-color states:", sorted(B.values()))
c = spec.circuit()
print(to_text(c), end="")
phases = np.angle(np.diag(circuit_unitary(c)))
print("states with phase t:", [int(i) for i in np.flatnonzero(np.isclose(phases, t))])
