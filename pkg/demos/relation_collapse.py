"""
When the defining relations generate everything
===============================================

For the form b with matrix [[0, 1], [1/2, 0]] the asymmetry is diag(2, 1/2)
and the Clifford relations read

    2 e0 e0 = 0,    e1 e1 / 2 = 0,    2 e0 e1 + e1 e0 / 2 = 3/2.

Rewriting e1 e0 = 3 - 4 e0 e1 looks like it gives a 4-dimensional algebra
on 1, e0, e1, e0 e1, but that table is not associative:
(e1 e0) e0 = 3 e0 - 4 e0 (e1 e0) = -9 e0 while e1 (e0 e0) = 0.
So e0 lies in the ideal, and then 3/2 = 0.
"""

from fractions import Fraction

from clifford_antiaut import BilinearForm, IdealGenerators, TensorElement, clifford_form, quotient
from clifford_antiaut.forms import clifford_generators
from clifford_antiaut.tensor_engine import format_element

f = BilinearForm.from_rows([[0, 1], [Fraction(1, 2), 0]])
for g in clifford_generators(f).generators:
    print("relation:", format_element(g), "= 0")

print("dim C(V, b) =", clifford_form(f).dim)

###############################################################################
# Dropping the constant term keeps a 4-dimensional graded algebra.

homogeneous = IdealGenerators(
    2,
    (
        TensorElement({(0, 0): 1}),
        TensorElement({(1, 1): 1}),
        TensorElement({(0, 1): 2, (1, 0): Fraction(1, 2)}),
    ),
)
Q = quotient(homogeneous)
print("without the constant:", Q.dim, Q.labels())
