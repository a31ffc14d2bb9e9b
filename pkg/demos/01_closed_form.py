"""Evolve a Pauli string restricted to a few basis states and check the circuit."""

import numpy as np

from projsynth import BasisSet, parse_pauli, synthesize
from projsynth.circuit import to_text
from projsynth.verify import circuit_unitary, exact_evolution

# X on the first qubit, restricted to six of the sixteen basis states
sigma = parse_pauli("XIII")
B = BasisSet.from_strings(["0000", "1000", "0100", "1100", "0010", "1010"])
t = 0.3

u_exact = exact_evolution(sigma, B, t)
print("closed form is unitary:", np.allclose(u_exact.conj().T @ u_exact, np.eye(16)))

# the three routes give different circuits for the same unitary
for strategy in ("general", "cover", "auto"):
    report = synthesize(sigma, B, t, strategy, verify=True)
    print(f"\n{strategy}: case={report.case} residual={report.verification_residual:.1e}")
    print(to_text(report.circuit), end="")

# lowering expands transpositions into CX and one MCX each
lowered = synthesize(sigma, B, t, "general").circuit.lowered()
print("\nlowered general circuit:", len(lowered), "gates")
print("max deviation:", np.max(np.abs(circuit_unitary(lowered) - u_exact)))
