from fractions import Fraction

import pytest
from hypothesis import given

from clifford_antiaut.errors import Degenerate, NoNondegenerateSolution
from clifford_antiaut.exactmath import QMatrix, SquareClass, det, inverse, is_similar
from clifford_antiaut.forms import (
    BilinearForm,
    asymmetry,
    clifford_form,
    clifford_generators,
    discriminant,
    even_clifford,
    form_from_asymmetry,
)
from clifford_antiaut.tensor_engine import TensorElement, element_image, q_minpoly, q_multiply

from strategies import forms, nonzero_rationals

F = Fraction


def form(rows):
    return BilinearForm.from_rows(rows)


def test_degenerate_rejected():
    with pytest.raises(Degenerate):
        form([[1, 2], [2, 4]])


@pytest.mark.parametrize(
    "B, A",
    [
        ([[1, 0], [0, 1]], [[1, 0], [0, 1]]),
        ([[0, 1], [-1, 0]], [[-1, 0], [0, -1]]),
        ([[0, 1], [F(1, 2), 0]], [[2, 0], [0, F(1, 2)]]),
    ],
)
def test_asymmetry_examples(B, A):
    assert asymmetry(form(B)) == QMatrix(A)


@pytest.mark.parametrize(
    "B, cls",
    [([[1, 0], [0, 1]], SquareClass(-1, 1)), ([[0, 1], [F(1, 2), 0]], SquareClass(1, 2)), ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], SquareClass(-1, 1))],
)
def test_discriminant_examples(B, cls):
    assert discriminant(form(B)) == cls


@given(forms(3))
def test_asymmetry_invariants(f):
    A = asymmetry(f)
    assert f.B @ A == f.B.T
    assert det(A) == 1
    assert is_similar(A, inverse(A))
    for x in range(3):
        for y in range(3):
            ex = [int(i == x) for i in range(3)]
            ey = [int(i == y) for i in range(3)]
            assert f(ex, ey) == f(ey, A.apply(ex))


@given(forms(2), nonzero_rationals)
def test_asymmetry_scale_invariant(f, c):
    assert asymmetry(f.scaled(c)) == asymmetry(f)


def proportional(B, C):
    ratios = {C[i, j] / B[i, j] for i in range(B.nrows) for j in range(B.ncols) if B[i, j]}
    zeros_match = all((B[i, j] == 0) == (C[i, j] == 0) for i in range(B.nrows) for j in range(B.ncols))
    return zeros_match and len(ratios) == 1


@pytest.mark.parametrize(
    "A, B",
    [
        ([[2, 0], [0, F(1, 2)]], [[0, 1], [F(1, 2), 0]]),
        ([[-1, 1], [0, -1]], [[0, 1], [-1, F(-1, 2)]]),
        ([[0, -1], [1, 3]], [[1, 1], [2, 1]]),
    ],
)
def test_form_from_asymmetry(A, B):
    f = form_from_asymmetry(QMatrix(A))
    assert asymmetry(f) == QMatrix(A)
    assert proportional(QMatrix(B), f.B)


def test_unipotent_matrix_is_not_an_asymmetry():
    with pytest.raises(NoNondegenerateSolution):
        form_from_asymmetry(QMatrix([[1, 1], [0, 1]]))


def test_identity_form_gives_classical_algebra():
    Q = clifford_form(form([[1, 0], [0, 1]]))
    assert Q.dim == 4
    e0, e1 = Q.letter_images
    assert q_multiply(Q, e0, e0) == Q.unit()
    assert q_multiply(Q, e0, e1) == tuple(-x for x in q_multiply(Q, e1, e0))
    E = even_clifford(form([[1, 0], [0, 1]]))
    assert E.dim == 2 and q_minpoly(E, E.basis_vector(1)) == (1, 0, 1)


def test_generators_are_polarized_relations():
    f = form([[1, 2], [0, 3]])
    g = clifford_generators(f)
    assert g.parity_graded and len(g.generators) == 3


def test_lambda2_form_collapses():
    # relations 2i^2 = 0, j^2/2 = 0, 2ij + ji/2 = 3/2 generate everything
    f = form([[0, 1], [F(1, 2), 0]])
    assert clifford_form(f).dim == 0
    assert even_clifford(f).dim == 0


def test_companion_form_collapses():
    # e1e0 = 1 and e0e1 = 3e1e1 - 1 force e0 = (3/2) e1 and then 3/2 = 2/3
    f = form([[1, 1], [2, 1]])
    assert clifford_form(f).dim == 0


def test_unipotent_asymmetry_form():
    # the correct relations force e0 = 0 and e1^2 = 1/2, so C is F[e1] and C_0 = F
    f = form([[0, 1], [-1, F(-1, 2)]])
    Q = clifford_form(f)
    assert Q.basis == ((), (1,))
    e1 = Q.letter_images[1]
    assert q_multiply(Q, e1, e1) == (F(1, 2), 0)
    assert not any(Q.letter_images[0])
    assert even_clifford(f).dim == 1
    # the relation a(e1) e1 - b(e1, e1) includes the e0*e1 term, which is easy to miss
    A = asymmetry(f)
    assert A == QMatrix([[-1, 1], [0, -1]])
    rel = TensorElement({(0, 1): A[0, 1], (1, 1): A[1, 1], (): -f.B[1, 1]})
    assert not any(element_image(Q, rel))


@given(forms(2))
def test_dimension_bound_n2(f):
    Q = clifford_form(f)
    assert Q.dim <= 4
    assert Q.generator_images_vanish()


def test_dimension_full_for_symmetric_forms():
    for B in ([[2, 1, 0], [1, 0, 3], [0, 3, -1]], [[0, 1], [1, 0]]):
        f = form(B)
        assert clifford_form(f).dim == 2 ** f.n
