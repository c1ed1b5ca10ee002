"""
Exhaustive cross-check on finite cyclic groups
==============================================

On Z_n everything is a finite vector and the determination question
can be settled by brute force, independent of the signed-measure
machinery. This script runs both routes against each other on random
probability vectors and shows an explicit ambiguous vector with its
witnesses.
"""

import numpy as np

from imchar.finite import (FiniteMeasureVector, brute_uniqueness, dft,
                           oracle_agreement)

for n in (4, 7, 12):
    report = oracle_agreement(n, 300, seed=1)
    print(f"Z_{n:<2} trials={report['trials']}  agreements={report['agreements']}"
          f"  witnesses validated={report['witnesses_validated']}"
          f"  norm range [{report['min_norm']:.3f}, {report['max_norm']:.3f}]")

print()

# the uniform vector on Z_6: fully symmetric, so Im of its transform
# vanishes and anything symmetric with the same mass shares it
v = FiniteMeasureVector.from_array([1 / 6] * 6)
rep = brute_uniqueness(v)
print("uniform on Z_6 unique:", rep.unique, " antisymmetric mass:", rep.anti_mass)
for w in rep.witnesses:
    gap = np.max(np.abs(dft(w).imag - dft(v).imag))
    print("  witness", [round(x, 4) for x in w.weights], " im gap", f"{gap:.1e}")

# and one mass distribution that *is* pinned down: everything on the
# strictly positive residues, nothing at the self-paired ones
u = FiniteMeasureVector.from_array([0.0, 0.7, 0.3, 0.0, 0.0])
print("\n[0, .7, .3, 0, 0] on Z_5 unique:", brute_uniqueness(u).unique)
