"""Degree-2 central simple algebras over Q and their antiautomorphisms.

Algebras are given by structure constants on a basis of size 4: either the
2x2 matrix algebra (basis E11, E12, E21, E22) or a quaternion algebra
(alpha, beta) with basis 1, i, j, k.  Elements are coordinate tuples, linear
maps on the underlying space are :class:`QMatrix` acting on columns.

Tensors in A (x) A are vectors of length 16, the coordinate of
``e_p (x) e_q`` sitting at index ``4*p + q``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InvalidAntiautomorphism, NoInvertibleSkew, NotInvertible, Singular, ZeroParameter
from .exactmath import QMatrix, SquareClass, format_rational, inverse, kernel, rational, solve, square_class

Element = tuple[Fraction, ...]

MATRIX_LABELS = ("E11", "E12", "E21", "E22")
QUATERNION_LABELS = ("1_A", "i", "j", "k")


@dataclass(frozen=True)
class StructAlgebra:
    """Unital associative algebra of dimension 4 given by structure constants.

    ``constants[p][q]`` is the coordinate vector of ``e_p * e_q``.
    """

    kind: str
    labels: tuple[str, ...]
    constants: tuple[tuple[Element, ...], ...]
    unit: Element
    params: tuple[Fraction, ...] = ()

    def __post_init__(self):
        d = self.dim
        if d != 4:
            raise ValueError("only degree-2 algebras (dimension 4) are supported")
        basis = [self.basis_vector(p) for p in range(d)]
        for x in basis:
            if self.mul(self.unit, x) != x or self.mul(x, self.unit) != x:
                raise ValueError("unit law fails")
        for x, y, z in itertools.product(basis, repeat=3):
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                raise ValueError("structure constants are not associative")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def degree(self) -> int:
        return 2

    @property
    def alpha(self) -> Fraction:
        return self.params[0]

    @property
    def beta(self) -> Fraction:
        return self.params[1]

    def element(self, coords: Sequence) -> Element:
        if len(coords) != self.dim:
            raise ValueError("wrong number of coordinates")
        return tuple(rational(c) for c in coords)

    def basis_vector(self, p: int) -> Element:
        return tuple(Fraction(int(p == r)) for r in range(self.dim))

    def zero(self) -> Element:
        return (Fraction(0),) * self.dim

    def scalar(self, c) -> Element:
        c = rational(c)
        return tuple(c * u for u in self.unit)

    def add(self, x: Element, y: Element) -> Element:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x: Element, y: Element) -> Element:
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, c, x: Element) -> Element:
        c = rational(c)
        return tuple(c * a for a in x)

    def mul(self, x: Element, y: Element) -> Element:
        out = [Fraction(0)] * self.dim
        for p, a in enumerate(x):
            if not a:
                continue
            for q, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for r, c in enumerate(self.constants[p][q]):
                    if c:
                        out[r] += ab * c
        return tuple(out)

    def mul_many(self, *xs: Element) -> Element:
        acc = self.unit
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def left_matrix(self, x: Element) -> QMatrix:
        return QMatrix.from_columns([self.mul(x, self.basis_vector(q)) for q in range(self.dim)])

    def right_matrix(self, x: Element) -> QMatrix:
        return QMatrix.from_columns([self.mul(self.basis_vector(q), x) for q in range(self.dim)])

    def is_invertible(self, x: Element) -> bool:
        return nrd(self, x) != 0

    def inv(self, x: Element) -> Element:
        y = solve(self.left_matrix(x), self.unit)
        if y is None:
            raise NotInvertible("element is not invertible")
        return y

    def to_matrix(self, x: Element) -> QMatrix:
        if self.kind != "matrix":
            raise ValueError("not a matrix algebra")
        return QMatrix([[x[0], x[1]], [x[2], x[3]]])

    def from_matrix(self, M: QMatrix) -> Element:
        if self.kind != "matrix":
            raise ValueError("not a matrix algebra")
        return (M[0, 0], M[0, 1], M[1, 0], M[1, 1])


def make_matrix2() -> StructAlgebra:
    # E_ab E_cd = delta_bc E_ad, with E_ab at index 2a + b
    consts = []
    for p in range(4):
        a, b = divmod(p, 2)
        row = []
        for q in range(4):
            c, d = divmod(q, 2)
            v = [Fraction(0)] * 4
            if b == c:
                v[2 * a + d] = Fraction(1)
            row.append(tuple(v))
        consts.append(tuple(row))
    unit = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    return StructAlgebra("matrix", MATRIX_LABELS, tuple(consts), unit)


def make_quaternion(alpha, beta) -> StructAlgebra:
    """Quaternion algebra (alpha, beta): i^2 = alpha, j^2 = beta, ij = -ji = k."""
    a, b = rational(alpha), rational(beta)
    if a == 0 or b == 0:
        raise ZeroParameter("quaternion parameters must be nonzero")
    # products of basis elements as (coefficient, index)
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (a, 0), (1, 2): (1, 3), (1, 3): (a, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (b, 0), (2, 3): (-b, 1),
        (3, 0): (1, 3), (3, 1): (-a, 2), (3, 2): (b, 1), (3, 3): (-a * b, 0),
    }
    consts = []
    for p in range(4):
        row = []
        for q in range(4):
            c, r = table[(p, q)]
            v = [Fraction(0)] * 4
            v[r] = Fraction(c)
            row.append(tuple(v))
        consts.append(tuple(row))
    unit = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    return StructAlgebra("quaternion", QUATERNION_LABELS, tuple(consts), unit, (a, b))


def trd(A: StructAlgebra, x: Element) -> Fraction:
    if A.kind == "matrix":
        return x[0] + x[3]
    return 2 * x[0]


def nrd(A: StructAlgebra, x: Element) -> Fraction:
    if A.kind == "matrix":
        return x[0] * x[3] - x[1] * x[2]
    a, b = A.params
    return x[0] ** 2 - a * x[1] ** 2 - b * x[2] ** 2 + a * b * x[3] ** 2


def quaternion_conjugate(A: StructAlgebra, x: Element) -> Element:
    return (x[0], -x[1], -x[2], -x[3])


# --------------------------------------------------------------------------
# antiautomorphisms

@dataclass(frozen=True)
class Antiaut:
    """Antiautomorphism with its asymmetry ``a`` and ``gamma(x) = sigma(x) a``.

    Construction validates every identity linking the three; an
    inconsistent triple raises :class:`InvalidAntiautomorphism`.
    """

    host: StructAlgebra
    S: QMatrix
    a: Element
    description: str = ""
    gamma: QMatrix = field(init=False)

    def __post_init__(self):
        A = self.host
        object.__setattr__(self, "gamma", A.right_matrix(self.a) @ self.S)
        self._validate()

    def _validate(self):
        A, S, a = self.host, self.S, self.a
        d = A.dim
        if S.apply(A.unit) != A.unit:
            raise InvalidAntiautomorphism("sigma(1) != 1")
        try:
            S_inv = inverse(S)
        except Singular:
            raise InvalidAntiautomorphism("sigma is not bijective") from None
        for p in range(d):
            for q in range(d):
                x, y = A.basis_vector(p), A.basis_vector(q)
                if S.apply(A.mul(x, y)) != A.mul(S.apply(y), S.apply(x)):
                    raise InvalidAntiautomorphism("sigma is not multiplication-reversing")
        if not A.is_invertible(a):
            raise InvalidAntiautomorphism("asymmetry is not invertible")
        a_inv = A.inv(a)
        if S.apply(a) != a_inv:
            raise InvalidAntiautomorphism("sigma(a) != a^-1")
        if S @ S != A.left_matrix(a) @ A.right_matrix(a_inv):
            raise InvalidAntiautomorphism("sigma^2 != Int(a)")
        if self.gamma @ self.gamma != QMatrix.identity(d):
            raise InvalidAntiautomorphism("gamma is not an involution")
        if self.gamma.apply(A.unit) != a:
            raise InvalidAntiautomorphism("gamma(1) != a")
        object.__setattr__(self, "_S_inv", S_inv)

    def sigma(self, x: Element) -> Element:
        return self.S.apply(x)

    def sigma_inv(self, x: Element) -> Element:
        return self._S_inv.apply(x)

    def gamma_of(self, x: Element) -> Element:
        return self.gamma.apply(x)

    @property
    def is_involution(self) -> bool:
        return self.S @ self.S == QMatrix.identity(self.host.dim)


def canonical_involution(A: StructAlgebra) -> Antiaut:
    if A.kind != "quaternion":
        raise ValueError("canonical involution is defined here for quaternion algebras")
    S = QMatrix.diag([1, -1, -1, -1])
    return Antiaut(A, S, A.scalar(-1), "rho")


def format_element(A: StructAlgebra, x: Element) -> str:
    names = ["1"] + list(A.labels[1:]) if A.kind == "quaternion" else list(A.labels)
    parts = []
    for c, name in zip(x, names):
        if not c:
            continue
        if name == "1":
            parts.append(format_rational(c))
        elif abs(c) == 1:
            parts.append(("-" if c < 0 else "") + name)
        else:
            parts.append(f"{format_rational(c)}{name}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def int_w(A: StructAlgebra, w: Element) -> QMatrix:
    """Matrix of x -> w x w^-1."""
    if not A.is_invertible(w):
        raise NotInvertible("conjugating element is not invertible")
    return A.left_matrix(w) @ A.right_matrix(A.inv(w))


def antiaut_from_u(A: StructAlgebra, u: Sequence) -> Antiaut:
    """sigma = Int(u) o rho on a quaternion algebra, with a = -u rho(u)^-1."""
    if A.kind != "quaternion":
        raise ValueError("antiaut_from_u needs a quaternion algebra")
    u = A.element(u)
    if not A.is_invertible(u):
        raise NotInvertible("u has zero reduced norm")
    rho = QMatrix.diag([1, -1, -1, -1])
    S = int_w(A, u) @ rho
    a = A.scale(-1, A.mul(u, A.inv(rho.apply(u))))
    return Antiaut(A, S, a, f"Int({format_element(A, u)}) o rho")


def adjoint_antiaut(f) -> Antiaut:
    """Adjoint involution-or-not sigma_b(M) = B^-1 M^T B on the 2x2 matrix algebra."""
    from .forms import asymmetry

    if f.n != 2:
        raise ValueError("adjoint_antiaut needs a form on a 2-dimensional space")
    A = make_matrix2()
    B, B_inv = f.B, inverse(f.B)
    cols = []
    for p in range(4):
        M = A.to_matrix(A.basis_vector(p))
        cols.append(A.from_matrix(B_inv @ M.T @ B))
    S = QMatrix.from_columns(cols)
    a = A.from_matrix(asymmetry(f))
    return Antiaut(A, S, a, "adjoint of b = [" + "; ".join(" ".join(format_rational(x) for x in row) for row in f.B.rows) + "]")


def conjugate_antiaut(sigma: Antiaut, w: Sequence) -> Antiaut:
    """rho = Int(w) o sigma o Int(w)^-1, with a_rho = w a_sigma w^-1."""
    A = sigma.host
    w = A.element(w)
    W = int_w(A, w)
    S = W @ sigma.S @ inverse(W)
    a = A.mul_many(w, sigma.a, A.inv(w))
    return Antiaut(A, S, a, f"Int(w) {sigma.description} Int(w)^-1")


# --------------------------------------------------------------------------
# sandwich and the induced maps on A (x) A

def _pair_index(p: int, q: int) -> int:
    return 4 * p + q


def sandwich_operator(A: StructAlgebra) -> QMatrix:
    """16x16 matrix sending u in A (x) A to the row-major flattening of Sand(u)."""
    cols = []
    for p in range(4):
        for q in range(4):
            M = sandwich_basis(A, p, q)
            cols.append([x for r in M.rows for x in r])
    return QMatrix.from_columns(cols)


def sandwich_basis(A: StructAlgebra, p: int, q: int) -> QMatrix:
    ep, eq = A.basis_vector(p), A.basis_vector(q)
    return QMatrix.from_columns([A.mul_many(ep, A.basis_vector(r), eq) for r in range(4)])


def sandwich(A: StructAlgebra, u: Sequence) -> QMatrix:
    """Sand(u): z -> sum u_pq e_p z e_q."""
    if len(u) != 16:
        raise ValueError("tensor must have 16 coordinates")
    flat = sandwich_operator(A).apply([rational(c) for c in u])
    return QMatrix([flat[4 * r: 4 * r + 4] for r in range(4)])


def sandwich_inverse(A: StructAlgebra, M: QMatrix) -> tuple[Fraction, ...]:
    flat = [x for r in M.rows for x in r]
    return _sandwich_inv(A).apply(flat)


_SAND_INV_CACHE: dict = {}


def _sandwich_inv(A: StructAlgebra) -> QMatrix:
    key = (A.kind, A.params)
    if key not in _SAND_INV_CACHE:
        _SAND_INV_CACHE[key] = inverse(sandwich_operator(A))
    return _SAND_INV_CACHE[key]


def tensor(A: StructAlgebra, x: Element, y: Element) -> tuple[Fraction, ...]:
    return tuple(x[p] * y[q] for p in range(4) for q in range(4))


def tensor_op_product(A: StructAlgebra, u: Sequence, v: Sequence) -> tuple[Fraction, ...]:
    """Product in A (x) A^op: (x (x) y)(x' (x) y') = x x' (x) y' y."""
    out = [Fraction(0)] * 16
    for p, q in itertools.product(range(4), repeat=2):
        c = u[_pair_index(p, q)]
        if not c:
            continue
        for r, s in itertools.product(range(4), repeat=2):
            d = v[_pair_index(r, s)]
            if not d:
                continue
            left = A.mul(A.basis_vector(p), A.basis_vector(r))
            right = A.mul(A.basis_vector(s), A.basis_vector(q))
            t = tensor(A, left, right)
            for i, x in enumerate(t):
                if x:
                    out[i] += c * d * x
    return tuple(out)


def gamma_tilde(sigma: Antiaut) -> QMatrix:
    """x -> a gamma(x) a."""
    A = sigma.host
    return A.left_matrix(sigma.a) @ A.right_matrix(sigma.a) @ sigma.gamma


def induced_on_tensors(A: StructAlgebra, g: QMatrix) -> QMatrix:
    """The map u -> Sand^-1(Sand(u) o g) on A (x) A as a 16x16 matrix."""
    Sop = sandwich_operator(A)
    Sinv = _sandwich_inv(A)
    # Sand(u) o g, flattened: row r of Sand(u) times g
    cols = []
    for idx in range(16):
        flat = Sop.column(idx)
        M = QMatrix([flat[4 * r: 4 * r + 4] for r in range(4)]) @ g
        cols.append([x for r in M.rows for x in r])
    return Sinv @ QMatrix.from_columns(cols)


def gamma2_tilde(sigma: Antiaut) -> QMatrix:
    return induced_on_tensors(sigma.host, gamma_tilde(sigma))


def mu_sigma(sigma: Antiaut, u: Sequence) -> Element:
    return sandwich(sigma.host, u).apply(sigma.a)


def mu_matrix(sigma: Antiaut) -> QMatrix:
    """4x16 matrix of u -> Sand(u)(a)."""
    A = sigma.host
    return QMatrix.from_columns(
        [A.mul_many(A.basis_vector(p), sigma.a, A.basis_vector(q)) for p in range(4) for q in range(4)]
    )


# --------------------------------------------------------------------------
# discriminant

def _height_vectors(k: int, budget: int):
    """Nonzero integer vectors of length k ordered by max-norm height, then lexicographically."""
    produced = 0
    h = 1
    while True:
        for v in itertools.product(range(-h, h + 1), repeat=k):
            if max(abs(x) for x in v) != h:
                continue
            yield v
            produced += 1
            if produced >= budget:
                return
        h += 1


def skew_elements(sigma: Antiaut) -> list[Element]:
    """Basis of Skew(A, gamma) = ker(gamma + Id)."""
    d = sigma.host.dim
    return kernel(sigma.gamma + QMatrix.identity(d))


def disc_sigma(sigma: Antiaut, budget: int = 10**4, skip: int = 0) -> SquareClass:
    """Discriminant: class of -Nrd(x) for an invertible x with gamma(x) = -x.

    Candidates are integer combinations of a skew basis by increasing
    height; ``skip`` discards that many invertible candidates first, which
    lets callers check independence of the chosen element.
    """
    A = sigma.host
    basis = skew_elements(sigma)
    if not basis:
        raise NoInvertibleSkew("skew space is zero")
    for coeffs in _height_vectors(len(basis), budget):
        x = A.zero()
        for c, b in zip(coeffs, basis):
            x = A.add(x, A.scale(c, b))
        n = nrd(A, x)
        if n != 0:
            if skip:
                skip -= 1
                continue
            return square_class(-n)
    raise NoInvertibleSkew(f"no invertible skew element among {budget} candidates")


def disc_from_one_minus_a(sigma: Antiaut) -> SquareClass | None:
    """Class of -Nrd(1 - a) when 1 - a is invertible, else None."""
    A = sigma.host
    n = nrd(A, A.sub(A.unit, sigma.a))
    return square_class(-n) if n != 0 else None
