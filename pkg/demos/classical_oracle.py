"""
Checking the rewriting engine against blade arithmetic
======================================================

For a symmetric form the Clifford algebra has a classical description:
diagonalize b by congruence and multiply blades of the orthogonal basis.
The engine knows nothing of this, so agreement of the two tables is a strong
check on the engine.
"""

import random

from clifford_antiaut import clifford_form
from clifford_antiaut.classical import matches_classical, orthogonalize
from clifford_antiaut.selftest import random_form

rng = random.Random(11)
for n in (2, 3, 4):
    f = random_form(rng, n, symmetric=True)
    P, d = orthogonalize(f.B)
    Q = clifford_form(f)
    print(f"n={n} diagonal {[str(x) for x in d]} dim {Q.dim} oracle agrees: {matches_classical(f, Q)}")
