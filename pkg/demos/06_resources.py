"""Model-based cost of the compact circuits next to term-by-term Pauli evolution."""

from projsynth import BasisSet, parse_pauli, synthesize
from projsynth import examples as ex
from projsynth.circuit import Circuit, CRot, count_resources
from projsynth.verify import baseline_cost, cover_pauli_terms

print("one rotation at eps=1e-10:", count_resources(Circuit(1, (CRot("Z", 0.1, (), 0),))).t_count, "T")

cases = {
    "six-state mixer": (parse_pauli("XIII"), BasisSet.from_strings(["0000", "1000", "0100", "1100", "0010", "1010"])),
    "double excitation": ex.qubit_excitation(2).terms[0][:2],
    "triple excitation": ex.qubit_excitation(3).terms[0][:2],
    "MAX 3-CUT": ex.maxkcut_oracle(3).terms[0][:2],
}
print(f"{'':20s}{'rot':>5s}{'cx':>6s}{'T':>7s}   | {'terms':>5s}{'cx':>6s}{'T':>7s}")
for name, (sigma, B) in cases.items():
    r = synthesize(sigma, B, 0.3).resources
    b = baseline_cost(sigma, B)
    print(f"{name:20s}{r.rotation_count:5d}{r.cx:6d}{r.t_count:7d}   | {b.terms:5d}{b.cx:6d}{b.t_count:7d}")

sigma, B = cases["six-state mixer"]
print("\nsix-state mixer expanded part by part:", cover_pauli_terms(sigma, B), "terms")
