"""Independent construction of the Clifford algebra of a symmetric form.

Used as an oracle for the rewriting engine: the form is diagonalized by
congruence, the algebra is realized on blades f_S of an orthogonal basis
(products are signed bitmask operations), and the engine's table is
compared after the change of basis to the words in the original vectors.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactmath import QMatrix, inverse, rank
from .forms import BilinearForm
from .tensor_engine import QuotientAlgebra

Multivector = dict[int, Fraction]


def orthogonalize(B: QMatrix) -> tuple[QMatrix, tuple[Fraction, ...]]:
    """P and d with P^T B P = diag(d), for symmetric B.

    Columns of P are the orthogonal basis vectors in old coordinates.
    """
    n = B.nrows
    if B != B.T:
        raise ValueError("form must be symmetric")
    basis = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]

    def b(x, y):
        return sum((x[i] * B[i, j] * y[j] for i in range(n) for j in range(n)), Fraction(0))

    done: list[list[Fraction]] = []
    rest = basis
    while rest:
        pivot = next((v for v in rest if b(v, v) != 0), None)
        if pivot is None:
            pair = next(((x, y) for x in rest for y in rest if x is not y and b(x, y) != 0), None)
            if pair is None:
                # remaining vectors are orthogonal to each other and isotropic
                done.extend(rest)
                break
            x, y = pair
            pivot = [p + q for p, q in zip(x, y)]
            rest = [pivot] + [v for v in rest if v is not x]
        else:
            rest = [pivot] + [v for v in rest if v is not pivot]
        q = b(pivot, pivot)
        rest = [[vi - b(v, pivot) / q * pi for vi, pi in zip(v, pivot)] for v in rest[1:]]
        done.append(pivot)
    P = QMatrix.from_columns(done)
    d = tuple(b(v, v) for v in done)
    return P, d


def _blade_product(s: int, t: int, d: Sequence[Fraction]) -> tuple[Fraction, int]:
    sign = 1
    # moving each generator of t left past the generators of s above it
    for k in range(len(d)):
        if t >> k & 1:
            sign *= (-1) ** bin(s >> (k + 1)).count("1")
    coeff = Fraction(sign)
    common = s & t
    for k in range(len(d)):
        if common >> k & 1:
            coeff *= d[k]
    return coeff, s ^ t


def mv_mul(x: Multivector, y: Multivector, d: Sequence[Fraction]) -> Multivector:
    out: Multivector = {}
    for s, a in x.items():
        for t, c in y.items():
            k, u = _blade_product(s, t, d)
            out[u] = out.get(u, Fraction(0)) + a * c * k
    return {u: c for u, c in out.items() if c}


def classical_word(word: Sequence[int], P_inv: QMatrix, d: Sequence[Fraction]) -> Multivector:
    """The product e_{w1} ... e_{wk} written on blades of the orthogonal basis."""
    n = len(d)
    acc: Multivector = {0: Fraction(1)}
    for i in word:
        vec = {1 << k: P_inv[k, i] for k in range(n) if P_inv[k, i]}
        acc = mv_mul(acc, vec, d)
    return acc


def matches_classical(f: BilinearForm, Q: QuotientAlgebra) -> bool:
    """True when Q is the full Clifford algebra of the symmetric form f, table for table."""
    n = f.n
    if Q.dim != 2**n:
        return False
    P, d = orthogonalize(f.B)
    P_inv = inverse(P)
    images = [classical_word(w, P_inv, d) for w in Q.basis]
    M = QMatrix.from_columns([[img.get(s, Fraction(0)) for s in range(2**n)] for img in images])
    if rank(M) != 2**n:
        return False
    for i in range(Q.dim):
        for j in range(Q.dim):
            lhs = mv_mul(images[i], images[j], d)
            rhs = M.apply(Q.structure_constants[i][j])
            if any(lhs.get(s, Fraction(0)) != rhs[s] for s in range(2**n)):
                return False
    return True
