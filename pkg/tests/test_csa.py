import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clifford_antiaut.csa import (
    Antiaut,
    adjoint_antiaut,
    antiaut_from_u,
    canonical_involution,
    conjugate_antiaut,
    disc_from_one_minus_a,
    disc_sigma,
    gamma2_tilde,
    gamma_tilde,
    induced_on_tensors,
    int_w,
    make_matrix2,
    make_quaternion,
    mu_matrix,
    mu_sigma,
    nrd,
    sandwich,
    sandwich_inverse,
    skew_elements,
    tensor,
    tensor_op_product,
    trd,
)
from clifford_antiaut.errors import InvalidAntiautomorphism, NotInvertible, ZeroParameter
from clifford_antiaut.exactmath import QMatrix, SquareClass, kernel, square_class
from clifford_antiaut.forms import BilinearForm, discriminant
from clifford_antiaut.selftest import QUATERNION_PARAMS, asymmetry_identities, random_antiaut, random_invertible

from strategies import symmetric_forms

F = Fraction
H = make_quaternion(-1, -1)


def el(*xs):
    return tuple(F(x) for x in xs)


def test_quaternion_products():
    assert H.mul(el(0, 0, 0, 1), el(0, 0, 0, 1)) == el(-1, 0, 0, 0)
    A = make_quaternion(2, 3)
    i, j, k = (A.basis_vector(p) for p in (1, 2, 3))
    assert A.mul(i, j) == k and A.mul(j, i) == A.scale(-1, k)
    assert A.mul(i, i) == A.scalar(2) and A.mul(j, j) == A.scalar(3)
    with pytest.raises(ZeroParameter):
        make_quaternion(0, 1)


def test_matrix_products():
    M = make_matrix2()
    E11, E12, E21, E22 = (M.basis_vector(p) for p in range(4))
    assert M.mul(E12, E21) == E11
    assert M.mul(E21, E12) == E22


def test_reduced_trace_and_norm():
    assert trd(H, el(1, 1, 1, 1)) == 2 and nrd(H, el(1, 1, 1, 1)) == 4
    M = make_matrix2()
    assert trd(M, el(1, 2, 3, 4)) == 5 and nrd(M, el(1, 2, 3, 4)) == -2
    assert nrd(make_quaternion(2, 3), el(4, 2, 0, 0)) == 8


@pytest.mark.parametrize("params", QUATERNION_PARAMS)
def test_norm_is_x_times_conjugate(params):
    A = make_quaternion(*params)
    rho = canonical_involution(A)
    rng = random.Random(0)
    for _ in range(10):
        x = el(*(rng.randint(-4, 4) for _ in range(4)))
        assert A.mul(x, rho.sigma(x)) == A.scalar(nrd(A, x))


def test_canonical_involution():
    rho = canonical_involution(H)
    assert rho.sigma(el(0, 1, 0, 0)) == el(0, -1, 0, 0)
    assert rho.a == el(-1, 0, 0, 0)
    assert kernel(rho.gamma - QMatrix.identity(4)) == [el(0, 1, 0, 0), el(0, 0, 1, 0), el(0, 0, 0, 1)]
    assert skew_elements(rho) == [el(1, 0, 0, 0)]
    assert disc_sigma(rho) == SquareClass(-1, 1)


@pytest.mark.parametrize("params", QUATERNION_PARAMS)
def test_int_i_rho_is_orthogonal_with_disc_alpha(params):
    A = make_quaternion(*params)
    s = antiaut_from_u(A, (0, 1, 0, 0))
    assert s.a == A.unit and s.is_involution
    assert disc_sigma(s) == square_class(A.alpha)


def test_asymmetry_of_one_plus_i():
    assert antiaut_from_u(H, (1, 1, 0, 0)).a == el(0, -1, 0, 0)
    A = make_quaternion(2, 3)
    s = antiaut_from_u(A, (1, 1, 0, 0))
    assert s.a == el(3, 2, 0, 0)
    assert A.mul(s.sigma(s.a), s.a) == A.unit


def test_antiaut_from_zero_norm_rejected():
    A = make_quaternion(1, 1)  # split, 1 + i has norm 0
    with pytest.raises(NotInvertible):
        antiaut_from_u(A, (1, 1, 0, 0))


def test_invalid_antiautomorphism_rejected():
    rho = canonical_involution(H)
    with pytest.raises(InvalidAntiautomorphism):
        Antiaut(H, rho.S, el(2, 0, 0, 0))
    with pytest.raises(InvalidAntiautomorphism):
        Antiaut(H, QMatrix.identity(4), el(1, 0, 0, 0))


@pytest.mark.parametrize(
    "B, a",
    [([[1, 0], [0, 1]], el(1, 0, 0, 1)), ([[0, 1], [-1, 0]], el(-1, 0, 0, -1)), ([[0, 1], [F(1, 2), 0]], el(2, 0, 0, F(1, 2)))],
)
def test_adjoint_antiaut_examples(B, a):
    s = adjoint_antiaut(BilinearForm.from_rows(B))
    assert s.a == a


def test_transpose_is_adjoint_of_identity():
    s = adjoint_antiaut(BilinearForm.from_rows([[1, 0], [0, 1]]))
    assert s.sigma(el(1, 2, 3, 4)) == el(1, 3, 2, 4)


def test_disc_of_lambda2_adjoint():
    f = BilinearForm.from_rows([[0, 1], [F(1, 2), 0]])
    assert disc_sigma(adjoint_antiaut(f)) == SquareClass(1, 2) == discriminant(f)


@given(st.integers(0, 10**6))
def test_asymmetry_identities_random(seed):
    rng = random.Random(seed)
    assert asymmetry_identities(random_antiaut(rng), rng, triples=5)


@given(st.integers(0, 10**6))
def test_orthogonal_and_symplectic_characterization(seed):
    s = random_antiaut(random.Random(seed))
    A = s.host
    if s.a == A.unit:
        assert s.is_involution and s.gamma == s.S
    if s.a == A.scalar(-1):
        assert s.is_involution and s.gamma == -s.S
    if s.is_involution:
        assert s.a in (A.unit, A.scalar(-1))


@given(st.integers(0, 10**6))
def test_conjugation(seed):
    rng = random.Random(seed)
    s = random_antiaut(rng)
    A = s.host
    w = random_invertible(rng, A)
    r = conjugate_antiaut(s, w)
    W = int_w(A, w)
    assert r.a == A.mul_many(w, s.a, A.inv(w))
    assert r.gamma @ W == W @ s.gamma
    assert disc_sigma(r) == disc_sigma(s)
    assert induced_on_tensors(A, QMatrix.identity(4)) == QMatrix.identity(16)
    # gamma_2 of conjugate pairs intertwined by Int(w) (x) Int(w)
    Ww = QMatrix([[W[p, r_] * W[q, s_] for r_ in range(4) for s_ in range(4)] for p in range(4) for q in range(4)])
    for g_s, g_r in ((s.gamma, r.gamma), (gamma_tilde(s), gamma_tilde(r))):
        assert induced_on_tensors(A, g_r) @ Ww == Ww @ induced_on_tensors(A, g_s)


def test_conjugation_by_one_is_identity():
    s = antiaut_from_u(make_quaternion(2, 3), (1, 1, 0, 0))
    r = conjugate_antiaut(s, s.host.unit)
    assert r.S == s.S and r.a == s.a


def test_sandwich_isomorphism():
    for A in (H, make_matrix2()):
        one = tensor(A, A.unit, A.unit)
        assert sandwich(A, one) == QMatrix.identity(4)
        rng = random.Random(1)
        for _ in range(5):
            u = [F(rng.randint(-2, 2)) for _ in range(16)]
            v = [F(rng.randint(-2, 2)) for _ in range(16)]
            assert sandwich(A, tensor_op_product(A, u, v)) == sandwich(A, u) @ sandwich(A, v)
            assert sandwich_inverse(A, sandwich(A, u)) == tuple(u)


def test_sandwich_conjugation_lemma():
    A = make_quaternion(2, 3)
    rng = random.Random(2)
    for _ in range(5):
        u = [F(rng.randint(-2, 2)) for _ in range(16)]
        w = random_invertible(rng, A)
        wi = A.inv(w)
        # Int(w (x) w^-1) in A (x) A^op sends x (x) y to w x w^-1 (x) w y w^-1
        conj = [F(0)] * 16
        for p, q in itertools.product(range(4), repeat=2):
            if u[4 * p + q]:
                x = A.mul_many(w, A.basis_vector(p), wi)
                y = A.mul_many(w, A.basis_vector(q), wi)
                conj = [c + u[4 * p + q] * t for c, t in zip(conj, tensor(A, x, y))]
        W = int_w(A, w)
        assert sandwich(A, conj) == W @ sandwich(A, u) @ int_w(A, wi)


@given(st.integers(0, 10**6))
def test_induced_maps_are_involutions(seed):
    s = random_antiaut(random.Random(seed))
    A = s.host
    assert gamma_tilde(s) @ gamma_tilde(s) == QMatrix.identity(4)
    G = gamma2_tilde(s)
    assert G @ G == QMatrix.identity(16)
    assert mu_sigma(s, tensor(A, A.unit, A.unit)) == s.a


def test_orthogonal_case_reduces_to_multiplication():
    s = adjoint_antiaut(BilinearForm.from_rows([[1, 0], [0, 2]]))
    A = s.host
    assert gamma_tilde(s) == s.gamma == s.S
    for p, q in itertools.product(range(4), repeat=2):
        u = tensor(A, A.basis_vector(p), A.basis_vector(q))
        assert mu_sigma(s, u) == A.mul(A.basis_vector(p), A.basis_vector(q))


def test_kernel_counts_for_canonical_involution():
    rho = canonical_involution(H)
    fixed = kernel(gamma2_tilde(rho) - QMatrix.identity(16))
    assert len(fixed) == 12
    assert len(kernel(mu_matrix(rho))) == 12
    # the element alpha*beta*(1 (x) 1) + k (x) k lies in both
    u = [F(0)] * 16
    u[0], u[15] = F(1), F(1)
    assert not any(mu_sigma(rho, u))
    assert gamma2_tilde(rho).apply(u) == tuple(u)


@given(st.integers(0, 10**6))
def test_disc_scan_consistency(seed):
    s = random_antiaut(random.Random(seed))
    d = disc_sigma(s)
    assert disc_sigma(s, skip=3) == d
    other = disc_from_one_minus_a(s)
    assert other is None or other == d


@given(symmetric_forms(2))
def test_disc_matches_form_disc_for_symmetric(f):
    assert disc_sigma(adjoint_antiaut(f)) == discriminant(f)
