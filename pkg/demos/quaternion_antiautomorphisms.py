"""
Clifford algebras of antiautomorphisms of a quaternion algebra
==============================================================

Every antiautomorphism of a quaternion algebra is Int(u) composed with the
canonical involution rho.  For each one we build C(A, sigma), classify the
resulting quadratic algebra and compare it with the class of
Nrd(a + 1) * disc(sigma).
"""

from clifford_antiaut import antiaut_from_u, clifford_antiaut, make_quaternion, verify_deg2
from clifford_antiaut.clifford import build_J1, build_J2
from clifford_antiaut.csa import format_element as show
from clifford_antiaut.exactmath import format_poly
from clifford_antiaut.tensor_engine import format_element, q_minpoly

A = make_quaternion(2, 3)
names = list(A.labels)

###############################################################################
# The canonical involution (u = 1).  Its asymmetry is -1, the symmetric part of
# gamma is spanned by the pure quaternions, and 1_A squares to zero.

rho = antiaut_from_u(A, (1, 0, 0, 0))
print("a =", show(A, rho.a))
print("J1:", [format_element(g, names) for g in build_J1(rho)])
print("number of J2 generators:", len(build_J2(rho)))

Q = clifford_antiaut(rho)
print("basis:", Q.labels(names))
print("minimal polynomial of 1_A:", format_poly(q_minpoly(Q, Q.letter_images[0])))

###############################################################################
# Orthogonal involutions: u = i gives the field Q(sqrt(alpha)).

r = verify_deg2(antiaut_from_u(A, (0, 1, 0, 0)))
print(r.description, "->", r.classification, "predicted", r.predicted)

###############################################################################
# A non-involutive antiautomorphism: u = 1 + i.  The asymmetry is 3 + 2i.
# The predicted class is field(2), but J1 and J2 together generate the unit
# ideal, so the computed algebra is zero.

r = verify_deg2(antiaut_from_u(A, (1, 1, 0, 0)))
print(r.description, "a =", show(A, r.asymmetry))
print("dimension", r.dimension, "predicted", r.predicted, "match", r.match)
