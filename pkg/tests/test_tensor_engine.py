import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from clifford_antiaut.errors import DegreeOverflow, NotGraded, ResourceCap
from clifford_antiaut.tensor_engine import (
    EngineConfig,
    IdealGenerators,
    TensorElement,
    element_image,
    even_part,
    format_element,
    ideal_slice,
    q_minpoly,
    q_multiply,
    quotient,
    substitute,
)

T = TensorElement


def gens(m, *elements):
    return IdealGenerators(m, tuple(T(e) for e in elements))


def test_tensor_element_arithmetic():
    x = T({(0,): 1, (): 2})
    y = T({(1,): 3})
    assert (x * y).terms == {(0, 1): 3, (1,): 6}
    assert (x - x).is_zero()
    assert T([((0,), 1), ((0,), -1)]).is_zero()
    assert x.degree == 1 and T().degree == -1
    assert format_element(T({(0, 1): Fraction(-1, 2), (): 3})) == "-1/2*e0*e1 + 3"


def test_generators_validated():
    with pytest.raises(ValueError):
        gens(2, {(0, 1, 1): 1})
    with pytest.raises(ValueError):
        gens(1, {(1,): 1})
    with pytest.raises(ValueError):
        IdealGenerators(1, (T(),))


def test_rank_one_clifford_algebra():
    Q = quotient(gens(1, {(0, 0): 1, (): -1}))
    assert Q.dim == 2 and Q.basis == ((), (0,))
    e0 = Q.basis_vector(1)
    assert q_multiply(Q, e0, e0) == Q.unit()
    assert q_minpoly(Q, Q.unit()) == (-1, 1)


LAMBDA2 = ({(0, 0): 2}, {(1, 1): Fraction(1, 2)}, {(0, 1): 2, (1, 0): Fraction(1, 2), (): Fraction(-3, 2)})


def test_lambda2_relations_generate_the_whole_algebra():
    # i^2 = 0 and j*i = 3 - 4*i*j give (j*i)*i = 3i, and also j*(i*i) = 0, so i = 0 and then 1 = 0.
    Q = quotient(gens(2, *LAMBDA2))
    assert Q.dim == 0
    assert Q.generator_images_vanish() and Q.is_associative()


def test_claimed_four_dimensional_lambda2_table_is_not_associative():
    # rewriting with i^2 = j^2 = 0 and j*i = 3 - 4ij onto {1, i, j, ij}
    # is not associative: (j*i)*i = -9i while j*(i*i) = 0
    def mul(u, v):
        out = {}

        def add(w, c):
            stack = [(w, c)]
            while stack:
                w, c = stack.pop()
                for p in range(len(w) - 1):
                    pair = w[p: p + 2]
                    if pair in ((0, 0), (1, 1)):
                        break
                    if pair == (1, 0):
                        stack.append((w[:p] + w[p + 2:], 3 * c))
                        stack.append((w[:p] + (0, 1) + w[p + 2:], -4 * c))
                        break
                else:
                    out[w] = out.get(w, 0) + c

        for a, x in u.items():
            for b, y in v.items():
                add(a + b, x * y)
        return {w: c for w, c in out.items() if c}

    i, j = {(0,): 1}, {(1,): 1}
    assert mul(mul(j, i), i) != mul(j, mul(i, i))


def test_element_image_linear_and_overflow():
    Q = quotient(gens(2, {(0, 0): 1, (): -1}, {(1, 1): 1, (): -1}, {(0, 1): 1, (1, 0): 1}))
    assert Q.dim == 4
    assert element_image(Q, T({(): 1})) == Q.unit()
    image = element_image(Q, T({(1, 0): 1}))
    assert image == tuple(-x for x in element_image(Q, T({(0, 1): 1})))
    with pytest.raises(DegreeOverflow):
        element_image(Q, T({(0,) * (Q.degree + 1): 1}))


def test_even_part_and_grading():
    Q = quotient(gens(2, {(0, 0): 1, (): -1}, {(1, 1): 1, (): -1}, {(0, 1): 1, (1, 0): 1}))
    E = even_part(Q)
    assert E.basis == ((), (0, 1))
    g = E.basis_vector(1)
    assert q_multiply(E, g, g) == tuple(-x for x in E.unit())
    mixed = quotient(gens(1, {(0, 0): 1, (0,): -1}))
    with pytest.raises(NotGraded):
        even_part(mixed)


def test_resource_cap_for_infinite_quotient():
    # free commutative algebra on two letters is infinite-dimensional
    with pytest.raises(ResourceCap):
        quotient(gens(2, {(0, 1): 1, (1, 0): -1}), EngineConfig(degree_cap=5, slack_cap=2))


def test_config_validation():
    with pytest.raises(ValueError):
        EngineConfig(slack_cap=0)
    assert EngineConfig().resolved(3) == (7, 4, 8)


def test_deterministic_rebuild():
    g = gens(2, {(0, 0): 3, (): -1}, {(1, 1): 1, (): 2}, {(0, 1): 1, (1, 0): 1})
    assert quotient(g) == quotient(g)


@given(st.permutations(range(3)))
def test_slice_and_algebra_independent_of_generator_order(order):
    base = [{(0, 0): 2, (): -1}, {(1, 1): 1, (): -3}, {(0, 1): 1, (1, 0): 1, (): 1}]
    shuffled = gens(2, *(base[i] for i in order))
    reference = gens(2, *base)
    assert ideal_slice(shuffled, 3) == ideal_slice(reference, 3)
    Q, R = quotient(shuffled), quotient(reference)
    assert Q.basis == R.basis and Q.structure_constants == R.structure_constants


def test_substitute_is_an_algebra_map():
    t = T({(0, 1): 2, (0,): 1})
    images = [{0: 1, 1: 1}, {1: -1}]
    s = substitute(t, images)
    assert s == T({(0, 1): -2, (1, 1): -2, (0,): 1, (1,): 1})


def test_random_diagonal_relations_give_clifford_dimension():
    rng = random.Random(3)
    for _ in range(5):
        a, b = (Fraction(rng.choice([-3, -2, -1, 1, 2, 5]), rng.randint(1, 4)) for _ in range(2))
        Q = quotient(gens(2, {(0, 0): 1, (): -a}, {(1, 1): 1, (): -b}, {(0, 1): 1, (1, 0): 1}))
        assert Q.dim == 4 and Q.is_associative() and Q.generator_images_vanish()
