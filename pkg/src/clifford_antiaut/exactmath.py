"""Exact rational scalars, square classes and dense linear algebra over Q.

Everything here works on :class:`fractions.Fraction`; there is no numeric
tolerance anywhere.  Matrices are immutable :class:`QMatrix` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .errors import FactorizationLimit, Singular

TRIAL_DIVISION_BOUND = 10**6


def rational(x) -> Fraction:
    """Coerce an int, Fraction or a string such as ``"-3/2"`` to a Fraction.

    Floats are refused: they would silently smuggle in rounding.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not s or any(c in s for c in ".eE"):
            raise ValueError(f"not an exact rational: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot interpret {type(x).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# square classes

def squarefree_part(n: int, bound: int = TRIAL_DIVISION_BOUND) -> int:
    """Squarefree part of a positive integer ``n``.

    Trial division runs up to ``bound``; the leftover cofactor must then be
    1, a prime (it is below ``bound**2``) or a perfect square, otherwise
    :class:`FactorizationLimit` is raised.
    """
    if n <= 0:
        raise ValueError("squarefree_part expects a positive integer")
    part = 1
    p = 2
    while p <= bound and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                part *= p
        p += 1 if p == 2 else 2
    if n == 1:
        return part
    if p * p > n:
        # n is prime
        return part * n
    r = math.isqrt(n)
    if r * r == n:
        return part
    if n < bound * bound:
        return part * n
    raise FactorizationLimit(f"cannot certify squarefree part of cofactor {n}")


@dataclass(frozen=True, order=True)
class SquareClass:
    """An element of Q^x/(Q^x)^2, or the zero class.

    Nonzero classes are ``sign * radical`` with ``radical`` squarefree;
    the zero class has ``sign == radical == 0``.
    """

    sign: int
    radical: int

    def __post_init__(self):
        if self.sign == 0:
            if self.radical != 0:
                raise ValueError("zero class must have radical 0")
        elif self.sign not in (1, -1) or self.radical < 1:
            raise ValueError(f"malformed square class ({self.sign}, {self.radical})")

    @classmethod
    def zero(cls) -> "SquareClass":
        return cls(0, 0)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def is_trivial(self) -> bool:
        return self.sign == 1 and self.radical == 1

    def representative(self) -> int:
        return self.sign * self.radical

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        if self.is_zero or other.is_zero:
            return SquareClass.zero()
        g = math.gcd(self.radical, other.radical)
        return SquareClass(self.sign * other.sign, (self.radical // g) * (other.radical // g))

    def __str__(self):
        return "0" if self.is_zero else str(self.representative())


def square_class(q, bound: int = TRIAL_DIVISION_BOUND) -> SquareClass:
    q = rational(q)
    if q == 0:
        return SquareClass.zero()
    sign = 1 if q > 0 else -1
    return SquareClass(sign, squarefree_part(abs(q.numerator) * q.denominator, bound))


# --------------------------------------------------------------------------
# matrices

class QMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(rational(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged matrix")
            if ncols is not None and ncols != width:
                raise ValueError("column count mismatch")
        else:
            width = ncols or 0
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "QMatrix":
        return cls([[0] * c for _ in range(r)], ncols=c)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "QMatrix":
        if not cols:
            raise ValueError("need at least one column")
        return cls(zip(*cols))

    @classmethod
    def diag(cls, entries: Sequence) -> "QMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        return isinstance(other, QMatrix) and self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self._rows)
        return f"QMatrix([{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    @property
    def T(self) -> "QMatrix":
        return QMatrix(zip(*self._rows), ncols=self.nrows) if self.nrows else QMatrix.zeros(self.ncols, 0)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __add__(self, other: "QMatrix") -> "QMatrix":
        _check_same_shape(self, other)
        return QMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        _check_same_shape(self, other)
        return QMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.ncols)

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in r] for r in self._rows], self.ncols)

    def scale(self, c) -> "QMatrix":
        c = rational(c)
        return QMatrix([[c * a for a in r] for r in self._rows], self.ncols)

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.columns()
            return QMatrix(
                [[sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols] for r in self._rows],
                other.ncols,
            )
        return self.apply(other)

    def apply(self, vec: Sequence) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, vec) if a and b), Fraction(0)) for r in self._rows)

    def __pow__(self, k: int) -> "QMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        result = QMatrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._rows for x in r)


def _check_same_shape(a: QMatrix, b: QMatrix):
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = reduce(math.lcm, (x.denominator for x in row), 1)
    return [int(x * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = reduce(math.gcd, row, 0)
    return [x // g for x in row] if g > 1 else row


def rref(M: QMatrix) -> tuple[QMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns.

    Elimination is fraction-free on integer rows (each row scaled by the lcm
    of its denominators, content divided out after every update); the pivot
    is the first nonzero entry of the column.  Leading ones are only formed
    at the very end.
    """
    rows = [_integer_row(r) for r in M.rows]
    nr, nc = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        p = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        prow = rows[r]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                e = rows[i][c]
                rows[i] = _primitive([pv * x - e * y for x, y in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
    out = []
    for i, row in enumerate(rows):
        if i < len(pivots):
            lead = row[pivots[i]]
            out.append([Fraction(x, lead) for x in row])
        else:
            out.append([Fraction(0)] * nc)
    return QMatrix(out, nc), tuple(pivots)


def rank(M: QMatrix) -> int:
    return len(rref(M)[1])


def kernel(M: QMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, one vector per free column."""
    R, pivots = rref(M)
    nc = M.ncols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i, f]
        basis.append(tuple(v))
    return basis


def det(M: QMatrix) -> Fraction:
    if not M.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = M.nrows
    a = [list(r) for r in M.rows]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        pv = a[c][c]
        result *= pv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / pv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def inverse(M: QMatrix) -> QMatrix:
    if not M.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = M.nrows
    aug = QMatrix([list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(M.rows)])
    R, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)) or len(pivots) < n:
        raise Singular("matrix is singular")
    return QMatrix([r[n:] for r in R.rows], n)


def solve(M: QMatrix, rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of ``M x = rhs`` (free variables set to 0), or None."""
    if len(rhs) != M.nrows:
        raise ValueError("right-hand side length mismatch")
    nc = M.ncols
    aug = QMatrix([list(r) + [b] for r, b in zip(M.rows, rhs)], nc + 1)
    R, pivots = rref(aug)
    if nc in pivots:
        return None
    x = [Fraction(0)] * nc
    for i, pc in enumerate(pivots):
        x[pc] = R[i, nc]
    return tuple(x)


# --------------------------------------------------------------------------
# polynomials: tuples of Fractions, constant term first

def first_dependency(vectors: Iterable[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    """Coefficients of the first linear dependency in a sequence of vectors.

    Returns ``(c_0, ..., c_{k-1}, 1)`` such that ``v_k + sum c_i v_i = 0``
    where ``v_k`` is the first vector in the span of its predecessors.
    """
    basis: list[tuple[list[Fraction], list[Fraction]]] = []
    # each entry: (echelon vector, its expression in the original vectors)
    pivots: list[int] = []
    for k, v in enumerate(vectors):
        v = [rational(x) for x in v]
        combo = [Fraction(0)] * k + [Fraction(1)]
        for (bv, bc), pc in zip(basis, pivots):
            f = v[pc]
            if f:
                v = [x - f * y for x, y in zip(v, bv)]
                combo = [x - f * y for x, y in zip(combo, bc + [Fraction(0)] * (len(combo) - len(bc)))]
        pc = next((i for i, x in enumerate(v) if x != 0), None)
        if pc is None:
            return tuple(combo)
        lead = v[pc]
        basis.append(([x / lead for x in v], [x / lead for x in combo]))
        pivots.append(pc)
    raise ValueError("sequence exhausted before a dependency was found")


def minimal_polynomial(M: QMatrix) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of a square matrix, constant term first."""
    if not M.is_square():
        raise ValueError("minimal polynomial of a non-square matrix")

    def powers():
        P = QMatrix.identity(M.nrows)
        while True:
            yield [x for r in P.rows for x in r]
            P = P @ M

    return first_dependency(powers())


def charpoly(M: QMatrix) -> tuple[Fraction, ...]:
    """Characteristic polynomial det(X - M), constant term first (Faddeev-LeVerrier)."""
    n = M.nrows
    coeffs = [Fraction(0)] * n + [Fraction(1)]
    N = QMatrix.identity(n)
    I = QMatrix.identity(n)
    for k in range(1, n + 1):
        MN = M @ N
        c = -MN.trace() / k
        coeffs[n - k] = c
        N = MN + I.scale(c)
    return tuple(coeffs)


def poly_eval_matrix(p: Sequence[Fraction], M: QMatrix) -> QMatrix:
    n = M.nrows
    result = QMatrix.zeros(n, n)
    for c in reversed(p):
        result = (result @ M) + QMatrix.identity(n).scale(c)
    return result


def poly_eval(p: Sequence[Fraction], x) -> Fraction:
    x = rational(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_mul(p: Sequence, q: Sequence) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += rational(a) * rational(b)
    return tuple(out)


def format_poly(p: Sequence[Fraction], var: str = "X") -> str:
    terms = []
    for d in range(len(p) - 1, -1, -1):
        c = rational(p[d])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = format_rational(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def is_similar(M: QMatrix, N: QMatrix) -> bool:
    """Similarity over Q via the Byrnes-Gauger dimension criterion.

    M ~ N iff dim C(M,M) = dim C(M,N) = dim C(N,N), where
    C(X,Y) = {Z : XZ = ZY}.
    """
    if M.shape != N.shape or not M.is_square():
        return False
    if charpoly(M) != charpoly(N):
        return False

    def centralizer_dim(X: QMatrix, Y: QMatrix) -> int:
        n = X.nrows
        rows = []
        # unknown Z[p][q] at index p*n+q; equation for entry (i, j) of XZ - ZY
        for i in range(n):
            for j in range(n):
                row = [Fraction(0)] * (n * n)
                for k in range(n):
                    row[k * n + j] += X[i, k]
                    row[i * n + k] -= Y[k, j]
                rows.append(row)
        return n * n - rank(QMatrix(rows))

    d = centralizer_dim(M, N)
    return d == centralizer_dim(M, M) == centralizer_dim(N, N)
