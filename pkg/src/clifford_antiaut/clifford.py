"""Clifford algebra C(A, sigma) of an antiautomorphism of a degree-2 algebra.

The tensor algebra is taken over the underlying space of A, so the algebra
unit 1_A is the letter 0 (quaternions) or the sum E11 + E22 (matrices),
never the empty word.  C(A, sigma) is the quotient by two families of
relations:

* J1: s - Trd(s)/2 for s fixed by gamma = R_a o sigma;
* J2: u - mu(u)/2 for u in A (x) A fixed by the involution induced by
  x -> a gamma(x) a through the sandwich isomorphism, where
  mu(u) = Sand(u)(a).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .csa import (
    Antiaut,
    Element,
    adjoint_antiaut,
    conjugate_antiaut,
    disc_sigma,
    gamma2_tilde,
    mu_sigma,
    nrd,
    tensor,
    trd,
)
from .errors import DimensionBoundExceeded, NotCommutative, WrongDimension
from .exactmath import QMatrix, SquareClass, inverse, kernel, square_class
from .forms import BilinearForm, asymmetry, even_clifford
from .tensor_engine import (
    EngineConfig,
    IdealGenerators,
    QuotientAlgebra,
    TensorElement,
    ideal_slice,
    q_minpoly,
    quotient,
    substitute,
)

HALF = Fraction(1, 2)


# --------------------------------------------------------------------------
# relations

def build_J1(sigma: Antiaut) -> list[TensorElement]:
    A = sigma.host
    out = []
    for s in kernel(sigma.gamma - QMatrix.identity(A.dim)):
        terms = {(p,): c for p, c in enumerate(s) if c}
        terms[()] = -HALF * trd(A, s)
        out.append(TensorElement(terms))
    return out


def build_J2(sigma: Antiaut) -> list[TensorElement]:
    A = sigma.host
    out = []
    for u in kernel(gamma2_tilde(sigma) - QMatrix.identity(A.dim**2)):
        terms = {(p // A.dim, p % A.dim): c for p, c in enumerate(u) if c}
        for r, c in enumerate(mu_sigma(sigma, u)):
            if c:
                terms[(r,)] = terms.get((r,), 0) - HALF * c
        out.append(TensorElement(terms))
    return out


def clifford_generators(sigma: Antiaut) -> IdealGenerators:
    gens = [g for g in build_J1(sigma) + build_J2(sigma) if not g.is_zero()]
    return IdealGenerators(sigma.host.dim, tuple(gens))


def clifford_antiaut(sigma: Antiaut, cfg: EngineConfig | None = None) -> QuotientAlgebra:
    Q = quotient(clifford_generators(sigma), cfg)
    bound = 2 ** (sigma.host.degree - 1)
    if Q.dim > bound:
        raise DimensionBoundExceeded(f"dim C(A, sigma) = {Q.dim} > {bound}")
    return Q


# --------------------------------------------------------------------------
# quadratic algebras

@dataclass(frozen=True)
class QuadraticAlgebraClass:
    """Isomorphism class of F[X]/(X^2 - c): dual numbers, F x F, or a field."""

    kind: str
    square_class: SquareClass | None = None

    def __post_init__(self):
        if self.kind == "dual_numbers":
            if self.square_class is not None and not self.square_class.is_zero:
                raise ValueError("dual numbers carry the zero class")
            object.__setattr__(self, "square_class", SquareClass.zero())
        elif self.kind == "split":
            if self.square_class is None:
                object.__setattr__(self, "square_class", SquareClass(1, 1))
            elif not self.square_class.is_trivial:
                raise ValueError("split class must be trivial")
        elif self.kind == "field":
            c = self.square_class
            if c is None or c.is_zero or c.is_trivial:
                raise ValueError("field class must be nonzero and nontrivial")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def from_square_class(cls, c: SquareClass) -> "QuadraticAlgebraClass":
        if c.is_zero:
            return cls("dual_numbers")
        if c.is_trivial:
            return cls("split", c)
        return cls("field", c)

    def __str__(self):
        if self.kind == "field":
            return f"field({self.square_class})"
        return self.kind


def quadratic_generator(Q: QuotientAlgebra) -> tuple[list[Fraction], tuple[Fraction, ...]]:
    """A basis vector independent of the unit, and its minimal polynomial."""
    if Q.dim != 2:
        raise WrongDimension(f"expected a 2-dimensional algebra, got dim {Q.dim}")
    i = next(i for i in range(2) if i != Q.unit_index)
    g = Q.basis_vector(i)
    return g, q_minpoly(Q, g)


def classify_quadratic(Q: QuotientAlgebra) -> QuadraticAlgebraClass:
    """Class of the discriminant p^2 - 4q of a generator with minpoly X^2 + pX + q."""
    if Q.dim != 2:
        raise WrongDimension(f"expected a 2-dimensional algebra, got dim {Q.dim}")
    if not Q.is_commutative():
        raise NotCommutative("quadratic algebra is not commutative")
    _, mp = quadratic_generator(Q)
    q, p = mp[0], mp[1]
    return QuadraticAlgebraClass.from_square_class(square_class(p * p - 4 * q))


# --------------------------------------------------------------------------
# the degree-2 prediction and conjugation invariance

@dataclass(frozen=True)
class CliffordReport:
    description: str
    asymmetry: Element
    disc: SquareClass
    dimension: int
    basis_labels: tuple[str, ...]
    structure_constants: tuple
    generator_minpoly: tuple[Fraction, ...] | None
    classification: QuadraticAlgebraClass | None
    predicted: QuadraticAlgebraClass
    match: bool
    algebra: QuotientAlgebra = field(repr=False, compare=False, default=None)


def predicted_class(sigma: Antiaut) -> QuadraticAlgebraClass:
    """Class of Nrd(a + 1) * disc(sigma); dual numbers when Nrd(a + 1) = 0."""
    A = sigma.host
    n = nrd(A, A.add(sigma.a, A.unit))
    if n == 0:
        return QuadraticAlgebraClass("dual_numbers")
    return QuadraticAlgebraClass.from_square_class(square_class(n) * disc_sigma(sigma))


def verify_deg2(sigma: Antiaut, cfg: EngineConfig | None = None) -> CliffordReport:
    A = sigma.host
    Q = clifford_antiaut(sigma, cfg)
    computed = minpoly = None
    if Q.dim == 2:
        computed = classify_quadratic(Q)
        minpoly = quadratic_generator(Q)[1]
    predicted = predicted_class(sigma)
    return CliffordReport(
        description=sigma.description,
        asymmetry=sigma.a,
        disc=disc_sigma(sigma),
        dimension=Q.dim,
        basis_labels=tuple(Q.labels(A.labels)),
        structure_constants=Q.structure_constants,
        generator_minpoly=minpoly,
        classification=computed,
        predicted=predicted,
        match=computed is not None and computed == predicted,
        algebra=Q,
    )


def quadratic_summary(Q: QuotientAlgebra) -> tuple[int, QuadraticAlgebraClass | None]:
    return Q.dim, (classify_quadratic(Q) if Q.dim == 2 else None)


def invariance_check(sigma: Antiaut, w: Sequence, cfg: EngineConfig | None = None) -> bool:
    """C(A, sigma) and C(A, Int(w) sigma Int(w)^-1) agree in dimension and class."""
    rho = conjugate_antiaut(sigma, w)
    return quadratic_summary(clifford_antiaut(sigma, cfg)) == quadratic_summary(clifford_antiaut(rho, cfg))


# --------------------------------------------------------------------------
# the split case: End(V) with the adjoint antiautomorphism of a form

def phi_map(f: BilinearForm) -> QMatrix:
    """Matrix of V (x) V -> End(V), v (x) w -> (x -> v b(w, x)).

    Columns are indexed by a*n + b for e_a (x) e_b, rows by the row-major
    matrix units of End(V).
    """
    n, B = f.n, f.B
    cols = []
    for a, b in itertools.product(range(n), repeat=2):
        cols.append([B[b, c] if r == a else Fraction(0) for r in range(n) for c in range(n)])
    return QMatrix.from_columns(cols)


def form_side_generators(f: BilinearForm) -> IdealGenerators:
    """Relations of the even Clifford algebra of b/2, written in the alphabet V (x) V.

    The letter a*n + b stands for the product e_a e_b.  The degree-1 relations
    are a(e_i) e_j + a(e_j) e_i = (b_ij + b_ji)/2, the degree-2 ones the same
    relation sandwiched between e_v and e_t.
    """
    n, A, B = f.n, asymmetry(f), f.B
    gens = []
    for i in range(n):
        for j in range(i, n):
            const = HALF * (B[i, j] + B[j, i])
            lin: dict = {}
            for k in range(n):
                lin[(k * n + j,)] = lin.get((k * n + j,), 0) + A[k, i]
                lin[(k * n + i,)] = lin.get((k * n + i,), 0) + A[k, j]
            gens.append(TensorElement({**lin, (): -const}))
            for v, t in itertools.product(range(n), repeat=2):
                terms: dict = {}
                for k in range(n):
                    for x, y, c in ((v * n + k, j * n + t, A[k, i]), (v * n + k, i * n + t, A[k, j])):
                        terms[(x, y)] = terms.get((x, y), 0) + c
                terms[(v * n + t,)] = -const
                gens.append(TensorElement(terms))
    return IdealGenerators(n * n, tuple(g for g in gens if not g.is_zero()))


def pulled_back_generators(f: BilinearForm, sigma: Antiaut | None = None) -> IdealGenerators:
    """J1 and J2 of sigma_b with every letter of End(V) replaced by its preimage under phi."""
    sigma = sigma or adjoint_antiaut(f)
    phi_inv = inverse(phi_map(f))
    images = [{q: phi_inv[q, p] for q in range(phi_inv.nrows) if phi_inv[q, p]} for p in range(phi_inv.ncols)]
    gens = [substitute(g, images) for g in clifford_generators(sigma).generators]
    return IdealGenerators(f.n**2, tuple(g for g in gens if not g.is_zero()))


def lemma_J1_holds(f: BilinearForm) -> bool:
    """sigma(phi(v (x) w)) = phi(a(w) (x) v) on basis vectors."""
    sigma, Phi, A = adjoint_antiaut(f), phi_map(f), asymmetry(f)
    n = f.n
    for v, w in itertools.product(range(n), repeat=2):
        lhs = sigma.sigma(Phi.column(v * n + w))
        aw = A.column(w)
        rhs = Phi.apply([aw[x] * (y == v) for x in range(n) for y in range(n)])
        if tuple(lhs) != tuple(rhs):
            return False
    return True


def lemma_J2_holds(f: BilinearForm) -> bool:
    """The induced involution sends phi(v(x)w) (x) phi(s(x)t) to phi(v (x) a(s)) (x) phi(a^-1(w) (x) t)."""
    sigma, Phi, A = adjoint_antiaut(f), phi_map(f), asymmetry(f)
    A_inv = inverse(A)
    n, host = f.n, sigma.host
    G = gamma2_tilde(sigma)

    def phi(x: Sequence, y: Sequence) -> Element:
        return Phi.apply([x[p] * y[q] for p in range(n) for q in range(n)])

    def e(i):
        return [Fraction(int(i == r)) for r in range(n)]

    for v, w, s, t in itertools.product(range(n), repeat=4):
        lhs = G.apply(tensor(host, phi(e(v), e(w)), phi(e(s), e(t))))
        rhs = tensor(host, phi(e(v), A.column(s)), phi(A_inv.column(w), e(t)))
        if tuple(lhs) != tuple(rhs):
            return False
    return True


@dataclass(frozen=True)
class SplitReport:
    antiaut_side: tuple[int, QuadraticAlgebraClass | None]
    form_side: tuple[int, QuadraticAlgebraClass | None]
    unscaled_form_side: tuple[int, QuadraticAlgebraClass | None]
    classes_agree: bool
    slices_agree: bool
    lemma_J1: bool
    lemma_J2: bool

    @property
    def ok(self) -> bool:
        return self.classes_agree and self.slices_agree and self.lemma_J1 and self.lemma_J2


def split_report(f: BilinearForm, cfg: EngineConfig | None = None) -> SplitReport:
    if f.n != 2:
        raise ValueError("split comparison is implemented for n = 2")
    sigma = adjoint_antiaut(f)
    lhs = quadratic_summary(clifford_antiaut(sigma, cfg))
    rhs = quadratic_summary(even_clifford(f.scaled(HALF), cfg))
    unscaled = quadratic_summary(even_clifford(f, cfg))
    slices = ideal_slice(pulled_back_generators(f, sigma), 2) == ideal_slice(form_side_generators(f), 2)
    return SplitReport(lhs, rhs, unscaled, lhs == rhs, slices, lemma_J1_holds(f), lemma_J2_holds(f))


def split_check(f: BilinearForm, cfg: EngineConfig | None = None) -> bool:
    return split_report(f, cfg).ok
