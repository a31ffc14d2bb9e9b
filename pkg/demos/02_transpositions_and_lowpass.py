"""Building blocks: basis-state transpositions and gates on the first K states."""

import numpy as np

from projsynth.bitpauli import BitString
from projsynth.circuit import CRot, CX, lower_transposition, to_text
from projsynth.synth import lowpass_patterns, synth_lowpass_unitary
from projsynth.verify import circuit_unitary

# swap |0000> and |1111>: three CX in, one MCX, three CX out
c = lower_transposition("0000", "1111")
print(to_text(c), end="")
perm = np.abs(circuit_unitary(c)).round().astype(int)
print("moves 0 ->", int(np.flatnonzero(perm[:, 0])[0]), "and 15 ->", int(np.flatnonzero(perm[:, 15])[0]))

# the CX count only depends on how many bits differ
for x, y in [("0000000", "0000011"), ("0101010", "1010101")]:
    d = (BitString.from_str(x) ^ BitString.from_str(y)).weight()
    print(x, y, "differ on", d, "bits, CX gates:", lower_transposition(x, y).count(CX))

# control patterns for "register value < K", one per set bit of K
for K in range(1, 9):
    plan = lowpass_patterns(K, 3)
    words = ["".join("c" if v else "o" for _, v in p) or "-" for p in plan.patterns]
    print(f"K={K}: {'U then U^-1 on ' if plan.complemented else ''}{words}")
print("K=42, n=6:", ["".join(str(v) for _, v in p) for p in lowpass_patterns(42, 6).patterns])

# a rotation applied on the first 5 of 8 control values
u = circuit_unitary(synth_lowpass_unitary(5, 3, CRot("X", 0.8, (), 3), [0, 1, 2], 4))
rotated = [k for k in range(8) if not np.allclose(u[2 * k : 2 * k + 2, 2 * k : 2 * k + 2], np.eye(2))]
print("rotated blocks:", rotated)
