"""Qubit and fermionic excitation operators against ladder-operator matrices."""

import numpy as np
from scipy.linalg import expm

from projsynth import examples as ex
from projsynth.circuit import count_resources, to_text
from projsynth.verify import baseline_pauli_terms, circuit_unitary

t = 0.25
for n_exc in (1, 2, 3):
    spec = ex.qubit_excitation(n_exc, t=t)
    p = spec.parameters
    T = ex.excitation_operator_matrix(p["occupied"], p["virtual"], 2 * n_exc)
    c = spec.circuit()
    dev = np.max(np.abs(circuit_unitary(c.lowered()) - expm(t * T)))
    sigma, B, _ = spec.terms[0]
    res = count_resources(c)
    print(f"n_exc={n_exc}: {len(c)} gates, {res.rotation_count} rotation, "
          f"{baseline_pauli_terms(sigma, B)} Pauli terms otherwise, deviation {dev:.1e}")

print("\ndouble excitation circuit:")
print(to_text(ex.qubit_excitation(2, t=t).circuit()), end="")

# Jordan-Wigner strings become a sign and a Z mask on the spectator qubits
spec = ex.fermionic_excitation(1, occupied=[0], virtual=[2], total_qubits=3, t=t)
T = ex.excitation_operator_matrix([0], [2], 3, fermionic=True)
print("\nfermionic:", spec.notes[0], "term", spec.terms[0][0])
print("deviation:", np.max(np.abs(circuit_unitary(spec.circuit().lowered()) - expm(t * T))))
