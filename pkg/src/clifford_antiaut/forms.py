"""Non-degenerate bilinear forms over Q and their Clifford algebras."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import Degenerate, NoNondegenerateSolution
from .exactmath import QMatrix, SquareClass, det, inverse, kernel, square_class
from .tensor_engine import EngineConfig, IdealGenerators, QuotientAlgebra, TensorElement, even_part, quotient


@dataclass(frozen=True)
class BilinearForm:
    """b(x, y) = x^T B y on Q^n, with det B != 0."""

    B: QMatrix

    def __post_init__(self):
        B = self.B if isinstance(self.B, QMatrix) else QMatrix(self.B)
        object.__setattr__(self, "B", B)
        if not B.is_square() or B.nrows == 0:
            raise ValueError("form matrix must be square and nonempty")
        if det(B) == 0:
            raise Degenerate("bilinear form is degenerate")

    @classmethod
    def from_rows(cls, rows) -> "BilinearForm":
        return cls(QMatrix(rows))

    @property
    def n(self) -> int:
        return self.B.nrows

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        return sum((xi * v for xi, v in zip(x, self.B.apply(y))), Fraction(0))

    def scaled(self, c) -> "BilinearForm":
        return BilinearForm(self.B.scale(c))

    def is_symmetric(self) -> bool:
        return self.B == self.B.T


def asymmetry(f: BilinearForm) -> QMatrix:
    """Matrix A of a_b, characterized by b(x, y) = b(y, A x), i.e. B A = B^T."""
    return inverse(f.B) @ f.B.T


def discriminant(f: BilinearForm) -> SquareClass:
    n = f.n
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return square_class(sign * det(f.B))


def form_from_asymmetry(A: QMatrix, attempts: int = 50, seed: int = 0, height: int = 10) -> BilinearForm:
    """A non-degenerate B with B A = B^T, drawn from the solution space.

    Candidates are random integer combinations (coefficients in
    [-height, height]) of a kernel basis, from a ``random.Random(seed)``
    stream.
    """
    n = A.nrows
    if not A.is_square():
        raise ValueError("asymmetry must be square")
    # unknown B[p][q] at index p*n+q; equation (B A - B^T)[i][j] = 0
    rows = []
    for i in range(n):
        for j in range(n):
            row = [Fraction(0)] * (n * n)
            for k in range(n):
                row[i * n + k] += A[k, j]
            row[j * n + i] -= 1
            rows.append(row)
    basis = kernel(QMatrix(rows))
    if not basis:
        raise NoNondegenerateSolution("B A = B^T has only the zero solution")
    rng = random.Random(seed)
    candidates = [[1 if i == 0 else 0 for i in range(len(basis))]]
    for _ in range(max(attempts - 1, 0)):
        candidates.append([rng.randint(-height, height) for _ in basis])
    for coeffs in candidates[:attempts]:
        flat = [sum((c * v[t] for c, v in zip(coeffs, basis)), Fraction(0)) for t in range(n * n)]
        B = QMatrix([flat[i * n: (i + 1) * n] for i in range(n)])
        if det(B) != 0:
            return BilinearForm(B)
    raise NoNondegenerateSolution(f"no non-degenerate solution among {attempts} attempts")


def clifford_generators(f: BilinearForm) -> IdealGenerators:
    """Polarized relations a(e_i) e_i - b(e_i, e_i) and their mixed versions."""
    A, B, n = asymmetry(f), f.B, f.n
    gens = []
    for i in range(n):
        for j in range(i, n):
            terms: dict = {}
            for k in range(n):
                terms[(k, j)] = terms.get((k, j), 0) + A[k, i]
                if i != j:
                    terms[(k, i)] = terms.get((k, i), 0) + A[k, j]
            const = B[i, i] if i == j else B[i, j] + B[j, i]
            terms[()] = -const
            gens.append(TensorElement(terms))
    return IdealGenerators(n, tuple(g for g in gens if not g.is_zero()))


def clifford_form(f: BilinearForm, cfg: EngineConfig | None = None) -> QuotientAlgebra:
    return quotient(clifford_generators(f), cfg)


def even_clifford(f: BilinearForm, cfg: EngineConfig | None = None) -> QuotientAlgebra:
    return even_part(clifford_form(f, cfg))
