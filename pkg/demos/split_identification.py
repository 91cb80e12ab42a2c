"""
The adjoint antiautomorphism of a bilinear form
===============================================

A non-degenerate form b on V = Q^2 gives an antiautomorphism sigma_b of
End(V), with sigma_b(M) = B^-1 M^T B.  The map phi(v (x) w) = (x -> v b(w, x))
identifies V (x) V with End(V), and under it the defining relations of
C(End V, sigma_b) correspond to those of the even Clifford algebra of b/2.
"""

from fractions import Fraction

from clifford_antiaut import BilinearForm, adjoint_antiaut, clifford_antiaut, even_clifford
from clifford_antiaut.clifford import (
    form_side_generators,
    phi_map,
    pulled_back_generators,
    quadratic_summary,
    split_report,
)
from clifford_antiaut.tensor_engine import ideal_slice

f = BilinearForm.from_rows([[1, 2], [2, Fraction(1, 3)]])
for row in phi_map(f).rows:
    print(" ".join(f"{str(x):>4}" for x in row))

###############################################################################
# Both sides are computed independently.

left = quadratic_summary(clifford_antiaut(adjoint_antiaut(f)))
right = quadratic_summary(even_clifford(f.scaled(Fraction(1, 2))))
print("C(End V, sigma_b):", left[0], left[1])
print("C_0(V, b/2):      ", right[0], right[1])

###############################################################################
# The degree <= 2 parts of the two ideals agree exactly after substituting
# letters through phi.

same = ideal_slice(pulled_back_generators(f), 2) == ideal_slice(form_side_generators(f), 2)
print("ideal slices agree:", same)

###############################################################################
# The same comparison for a few non-symmetric forms, where both sides
# collapse or shrink together.

for rows in ([[0, 1], [Fraction(1, 2), 0]], [[0, 1], [-1, Fraction(-1, 2)]], [[1, 1], [2, 1]]):
    r = split_report(BilinearForm.from_rows(rows))
    print(rows, "->", r.antiaut_side[0], "vs", r.form_side[0], "ok" if r.ok else "MISMATCH")
