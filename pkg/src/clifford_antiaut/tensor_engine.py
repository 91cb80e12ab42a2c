"""Finite-dimensional quotients of a tensor algebra T(W) by low-degree relations.

The engine works by truncated linear algebra.  For a working degree ``D``
and a slack ``k`` it spans all products ``x*g*y`` (``x``, ``y`` words, ``g``
a generator) of top degree at most ``D + k`` and row-reduces them with
respect to the degree-lexicographic order.  The rows whose leading word has
length at most ``D`` span the part of that slice living in ``T_{<=D}``;
words that are not leading words form the candidate basis.  A candidate is
accepted once it is stable in both ``D`` and ``k`` and the resulting
multiplication table passes a certification step (every generator vanishes,
basis words evaluate to themselves, associativity on all basis triples).

Words are tuples of letter indices.  Internally a word of length ``l`` over
an alphabet of size ``m`` is the pair ``(l, v)`` where ``v`` reads the word
as a base-``m`` integer, so plain tuple comparison is the deg-lex order.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Mapping, Sequence

from .errors import DegreeOverflow, NotGraded, ResourceCap
from .exactmath import first_dependency, format_rational, rational

Word = tuple[int, ...]
EMPTY: Word = ()


class TensorElement:
    """Finite rational combination of words; no zero coefficients stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            w = tuple(int(x) for x in w)
            acc[w] = acc.get(w, Fraction(0)) + rational(c)
        self._terms = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def scalar(cls, c) -> "TensorElement":
        return cls({EMPTY: c})

    @classmethod
    def letter(cls, i: int, c=1) -> "TensorElement":
        return cls({(i,): c})

    @classmethod
    def word(cls, w: Sequence[int], c=1) -> "TensorElement":
        return cls({tuple(w): c})

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def coefficient(self, w: Word) -> Fraction:
        return self._terms.get(tuple(w), Fraction(0))

    @property
    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def is_parity_homogeneous(self) -> bool:
        return len({len(w) % 2 for w in self._terms}) <= 1

    def letters(self) -> set[int]:
        return {x for w in self._terms for x in w}

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "TensorElement":
        return TensorElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = rational(c)
        return TensorElement({w: c * x for w, x in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return TensorElement(
                [(u + v, a * b) for u, a in self._terms.items() for v, b in other._terms.items()]
            )
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"TensorElement({format_element(self)})"


def format_word(w: Word, names: Sequence[str] | None = None) -> str:
    if not w:
        return "1"
    if names is None:
        return "*".join(f"e{i}" for i in w)
    return "*".join(names[i] for i in w)


def format_element(t: TensorElement, names: Sequence[str] | None = None) -> str:
    if t.is_zero():
        return "0"
    parts = []
    for w, c in sorted(t.items(), key=lambda kv: (-len(kv[0]), kv[0])):
        mono = format_word(w, names)
        if not w:
            parts.append(format_rational(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{format_rational(c)}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class IdealGenerators:
    m: int
    generators: tuple[TensorElement, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("alphabet must be nonempty")
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if g.is_zero():
                raise ValueError("zero generator")
            if g.degree > 2:
                raise ValueError(f"generator of degree {g.degree} > 2")
            if any(x < 0 or x >= self.m for x in g.letters()):
                raise ValueError("generator uses a letter outside the alphabet")

    @property
    def parity_graded(self) -> bool:
        return all(g.is_parity_homogeneous() for g in self.generators)


@dataclass(frozen=True)
class EngineConfig:
    """Caps for :func:`quotient`; ``None`` selects the alphabet-dependent default.

    ``degree_cap`` defaults to ``m + 4`` and ``dim_cap`` to ``2**m``.
    ``row_cap`` bounds the number of spanning products generated for a
    single truncation level.
    """

    degree_cap: int | None = None
    slack_cap: int = 4
    dim_cap: int | None = None
    row_cap: int = 2_000_000

    def __post_init__(self):
        for name in ("degree_cap", "dim_cap"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError(f"{name} must be positive")
        if self.slack_cap < 1 or self.row_cap < 1:
            raise ValueError("caps must be positive")

    def resolved(self, m: int) -> tuple[int, int, int]:
        return (
            self.degree_cap if self.degree_cap is not None else m + 4,
            self.slack_cap,
            self.dim_cap if self.dim_cap is not None else 2**m,
        )


# --------------------------------------------------------------------------
# truncated ideal slices

class _IdealSlices:
    """Echelon basis of S(N) = span{x g y : top degree <= N}, grown level by level.

    Rows are dicts ``key -> int`` with primitive integer coefficients.  Every
    incoming row is fully reduced against the pivots present at that time,
    so leading words are pairwise distinct; tails may still contain leading
    words of pivots added later.
    """

    def __init__(self, m: int, gens: Sequence[TensorElement], row_cap: int):
        self.m = m
        self.row_cap = row_cap
        self.pivots: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
        self.level = -1
        self.lead_counts: list[list[int]] = []  # lead_counts[N][l]
        self.gens = []
        for g in gens:
            den = reduce(math.lcm, (c.denominator for c in g.terms.values()), 1)
            row = {self.key(w): int(c * den) for w, c in g.terms.items()}
            self.gens.append((g.degree, _primitive(row)))

    def key(self, w: Word) -> tuple[int, int]:
        v = 0
        for x in w:
            v = v * self.m + x
        return (len(w), v)

    def word(self, key: tuple[int, int]) -> Word:
        l, v = key
        out = [0] * l
        for i in range(l - 1, -1, -1):
            v, out[i] = divmod(v, self.m)
        return tuple(out)

    def extend_to(self, N: int):
        m = self.m
        while self.level < N:
            level = self.level + 1
            planned = sum((level - d + 1) * m ** (level - d) for d, _ in self.gens if d <= level)
            if planned > self.row_cap:
                raise ResourceCap(f"truncation level {level} needs {planned} rows (row cap {self.row_cap})")
            for d, g in self.gens:
                if d > level:
                    continue
                r = level - d
                for s in range(r + 1):
                    t = r - s
                    for xv in range(m**s):
                        for yv in range(m**t):
                            row = {}
                            for (l, v), c in g.items():
                                row[(s + l + t, (xv * m**l + v) * m**t + yv)] = c
                            self._add_row(row)
            self.level = level
            counts = [0] * (level + 1)
            for l, _ in self.pivots:
                counts[l] += 1
            self.lead_counts.append(counts)

    def _add_row(self, row: dict):
        piv = self.pivots
        heap = [(-l, -v) for (l, v) in row if (l, v) in piv]
        heapq.heapify(heap)
        while heap:
            nl, nv = heapq.heappop(heap)
            w = (-nl, -nv)
            c = row.get(w)
            if c is None:
                continue
            p = piv[w]
            pc = p[w]
            g = math.gcd(pc, c)
            a, b = pc // g, c // g
            if a != 1:
                for k in row:
                    row[k] *= a
            for k, pv in p.items():
                nvv = row.get(k, 0) - b * pv
                if nvv:
                    if k not in row and k in piv and k != w:
                        heapq.heappush(heap, (-k[0], -k[1]))
                    row[k] = nvv
                else:
                    row.pop(k, None)
        if not row:
            return
        row = _primitive(row)
        lead = max(row)
        if row[lead] < 0:
            row = {k: -x for k, x in row.items()}
        piv[lead] = row

    def leads_upto(self, N: int, D: int) -> int:
        """Number of leading words of length <= D in S(N)."""
        counts = self.lead_counts[N]
        return sum(counts[: D + 1])

    def normal_count(self, N: int, l: int) -> int:
        counts = self.lead_counts[N]
        return self.m**l - (counts[l] if l < len(counts) else 0)

    def dimension(self, N: int, D: int) -> int:
        return sum(self.normal_count(N, l) for l in range(D + 1))

    def rules(self, D: int) -> dict[tuple[int, int], dict[tuple[int, int], Fraction]]:
        """Fully reduced rewriting rules ``lead -> combination of normal words``.

        Uses the pivots with leading word of length <= D from the current level.
        """
        leads = sorted(k for k in self.pivots if k[0] <= D)
        rules: dict = {}
        for lead in leads:
            row = self.pivots[lead]
            lc = row[lead]
            out: dict = {}
            for k, c in row.items():
                if k == lead:
                    continue
                coeff = Fraction(-c, lc)
                sub = rules.get(k)
                if sub is None:
                    out[k] = out.get(k, 0) + coeff
                else:
                    for kk, cc in sub.items():
                        out[kk] = out.get(kk, 0) + coeff * cc
            rules[lead] = {k: c for k, c in out.items() if c != 0}
        return rules


def _primitive(row: dict) -> dict:
    g = reduce(math.gcd, row.values(), 0)
    if g > 1:
        return {k: x // g for k, x in row.items()}
    return row


# --------------------------------------------------------------------------
# quotient algebra

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class QuotientAlgebra:
    """Finite-dimensional quotient of T(W), with its multiplication table.

    ``structure_constants[i][j]`` is the coordinate vector of
    ``basis[i] * basis[j]``.  ``rules`` maps each leading word of length at
    most ``degree`` to its normal form; it is the data behind
    :func:`element_image`.
    """

    m: int
    basis: tuple[Word, ...]
    structure_constants: tuple[tuple[Vector, ...], ...]
    letter_images: tuple[Vector, ...]
    unit_index: int | None
    degree: int
    slack: int
    rules: tuple[tuple[Word, tuple[tuple[Word, Fraction], ...]], ...]
    generators: IdealGenerators
    parity_graded: bool
    is_even_part: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def index(self) -> dict[Word, int]:
        return {w: i for i, w in enumerate(self.basis)}

    @cached_property
    def _rule_map(self) -> dict[Word, dict[Word, Fraction]]:
        return {lead: dict(tail) for lead, tail in self.rules}

    @cached_property
    def _sparse_table(self) -> list[list[dict[int, Fraction]]]:
        return [[{k: c for k, c in enumerate(v) if c} for v in row] for row in self.structure_constants]

    def unit(self) -> Vector:
        return self.basis_vector(self.unit_index) if self.unit_index is not None else self.zero()

    def zero(self) -> Vector:
        return (Fraction(0),) * self.dim

    def basis_vector(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def labels(self, names: Sequence[str] | None = None) -> list[str]:
        return [format_word(w, names) for w in self.basis]

    def multiply(self, u: Sequence, v: Sequence) -> Vector:
        return _dense(_sparse_mul(self._sparse_table, _sparse(u), _sparse(v)), self.dim)

    def is_commutative(self) -> bool:
        d = self.dim
        return all(self.structure_constants[i][j] == self.structure_constants[j][i] for i in range(d) for j in range(i))

    def is_associative(self) -> bool:
        T = self._sparse_table
        d = self.dim
        for i in range(d):
            for j in range(d):
                ij = T[i][j]
                for k in range(d):
                    left = _sparse_mul(T, ij, {k: Fraction(1)})
                    right = _sparse_mul(T, {i: Fraction(1)}, T[j][k])
                    if left != right:
                        return False
        return True

    def generator_images_vanish(self) -> bool:
        return all(not any(element_image(self, g)) for g in self.generators.generators)


def _sparse(v: Sequence) -> dict[int, Fraction]:
    return {i: rational(c) for i, c in enumerate(v) if c}


def _dense(v: Mapping[int, Fraction], d: int) -> Vector:
    out = [Fraction(0)] * d
    for i, c in v.items():
        out[i] = c
    return tuple(out)


def _sparse_mul(T, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, a in u.items():
        Ti = T[i]
        for j, b in v.items():
            ab = a * b
            for k, c in Ti[j].items():
                out[k] = out.get(k, 0) + ab * c
    return {k: c for k, c in out.items() if c != 0}


def _tabulate(slices: _IdealSlices, gens: IdealGenerators, D: int, k: int) -> QuotientAlgebra | None:
    """Build and certify the algebra for the accepted truncation; None if certification fails."""
    m = slices.m
    key_rules = slices.rules(D)
    basis_keys = [
        (l, v) for l in range(D + 1) for v in range(m**l) if (l, v) not in key_rules
    ]
    index = {key: i for i, key in enumerate(basis_keys)}
    dim = len(basis_keys)

    def nf(key) -> dict[int, Fraction]:
        rule = key_rules.get(key)
        if rule is None:
            return {index[key]: Fraction(1)}
        return {index[kk]: c for kk, c in rule.items()}

    # right multiplication by each letter, as sparse columns
    right = []
    for letter in range(m):
        cols = []
        for (l, v) in basis_keys:
            if l + 1 > D:
                return None
            cols.append(nf((l + 1, v * m + letter)))
        right.append(cols)

    def act(vec: dict[int, Fraction], letter: int) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        cols = right[letter]
        for i, a in vec.items():
            for j, c in cols[i].items():
                out[j] = out.get(j, 0) + a * c
        return {j: c for j, c in out.items() if c != 0}

    unit_index = index.get((0, 0))
    unit = {unit_index: Fraction(1)} if unit_index is not None else {}

    def evaluate(w: Word, start=None) -> dict[int, Fraction]:
        vec = dict(unit if start is None else start)
        for x in w:
            vec = act(vec, x)
        return vec

    basis_words = [slices.word(key) for key in basis_keys]
    for i, w in enumerate(basis_words):
        if evaluate(w) != {i: Fraction(1)}:
            return None
    for g in gens.generators:
        total: dict[int, Fraction] = {}
        for w, c in g.terms.items():
            for j, x in evaluate(w).items():
                total[j] = total.get(j, 0) + c * x
        if any(x != 0 for x in total.values()):
            return None

    table = [[evaluate(basis_words[j], {i: Fraction(1)}) for j in range(dim)] for i in range(dim)]
    dense_table = tuple(tuple(_dense(table[i][j], dim) for j in range(dim)) for i in range(dim))
    rules = tuple(
        (slices.word(lead), tuple(sorted(((slices.word(kk), c) for kk, c in tail.items()), key=lambda t: (len(t[0]), t[0]))))
        for lead, tail in sorted(key_rules.items())
    )
    Q = QuotientAlgebra(
        m=m,
        basis=tuple(basis_words),
        structure_constants=dense_table,
        letter_images=tuple(_dense(evaluate((x,)), dim) for x in range(m)),
        unit_index=unit_index,
        degree=D,
        slack=k,
        rules=rules,
        generators=gens,
        parity_graded=gens.parity_graded,
    )
    if not Q.is_associative():
        return None
    return Q


def quotient(gens: IdealGenerators, cfg: EngineConfig | None = None) -> QuotientAlgebra:
    """Quotient of T(W) by the two-sided ideal spanned by ``gens``.

    Raises :class:`ResourceCap` when the degree, slack, dimension or row cap
    is exceeded before a certified stable truncation is found.
    """
    cfg = cfg or EngineConfig()
    degree_cap, slack_cap, dim_cap = cfg.resolved(gens.m)
    slices = _IdealSlices(gens.m, gens.generators, cfg.row_cap)

    def basis_equal_in_slack(D, N):
        return slices.leads_upto(N, D) == slices.leads_upto(N - 1, D)

    def basis_equal_in_degree(D, k):
        # basis(D, k) == basis(D-1, k): no new normal words of length D and
        # the shorter normal words agree between S(D+k) and S(D-1+k)
        return slices.normal_count(D + k, D) == 0 and slices.leads_upto(D + k, D - 1) == slices.leads_upto(D - 1 + k, D - 1)

    for D in range(2, degree_cap + 1):
        last_dim = None
        for k in range(0, slack_cap + 1):
            N = D + k
            slices.extend_to(N)
            last_dim = slices.dimension(N, D)
            if k == 0 or not basis_equal_in_slack(D, N):
                continue
            if not basis_equal_in_degree(D, k):
                break
            if last_dim > dim_cap:
                raise ResourceCap(f"stable basis of size {last_dim} exceeds dimension cap {dim_cap}")
            Q = _tabulate(slices, gens, D, k)
            if Q is not None:
                return Q
        if last_dim is not None and last_dim > dim_cap and k == slack_cap:
            raise ResourceCap(f"{last_dim} normal words up to degree {D} exceed dimension cap {dim_cap}")
    raise ResourceCap(f"no stable truncation up to degree cap {degree_cap}")


def element_image(Q: QuotientAlgebra, t: TensorElement) -> Vector:
    """Normal-form coordinates of a tensor element of degree <= Q.degree."""
    if t.degree > Q.degree:
        raise DegreeOverflow(f"element of degree {t.degree} exceeds stabilized degree {Q.degree}")
    rules = Q._rule_map
    index = Q.index
    out: dict[int, Fraction] = {}

    def add(w: Word, c: Fraction):
        try:
            i = index[w]
        except KeyError:
            raise ValueError(f"normal word {format_word(w)} is not in this algebra's basis") from None
        out[i] = out.get(i, 0) + c

    for w, c in t.terms.items():
        rule = rules.get(w)
        if rule is None:
            add(w, c)
        else:
            for ww, cc in rule.items():
                add(ww, c * cc)
    return _dense({i: c for i, c in out.items() if c != 0}, Q.dim)


def q_multiply(Q: QuotientAlgebra, u: Sequence, v: Sequence) -> Vector:
    return Q.multiply(u, v)


def q_minpoly(Q: QuotientAlgebra, u: Sequence) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of ``u``, constant term first."""
    u = tuple(rational(x) for x in u)

    def powers():
        p = Q.unit()
        while True:
            yield p
            p = Q.multiply(p, u)

    return first_dependency(powers())


def even_part(Q: QuotientAlgebra) -> QuotientAlgebra:
    """Subalgebra spanned by the even-length basis words."""
    if not Q.parity_graded:
        raise NotGraded("generators are not parity-homogeneous")
    keep = [i for i, w in enumerate(Q.basis) if len(w) % 2 == 0]
    pos = {i: n for n, i in enumerate(keep)}
    table = []
    for i in keep:
        row = []
        for j in keep:
            v = Q.structure_constants[i][j]
            if any(v[r] for r in range(Q.dim) if r not in pos):
                raise NotGraded("product of even words left the even span")
            row.append(tuple(v[r] for r in keep))
        table.append(tuple(row))
    return QuotientAlgebra(
        m=Q.m,
        basis=tuple(Q.basis[i] for i in keep),
        structure_constants=tuple(table),
        letter_images=(),
        unit_index=pos.get(Q.unit_index) if Q.unit_index is not None else None,
        degree=Q.degree,
        slack=Q.slack,
        rules=Q.rules,
        generators=Q.generators,
        parity_graded=True,
        is_even_part=True,
    )


def ideal_slice(gens: IdealGenerators, N: int) -> tuple[tuple[Word, tuple[tuple[Word, Fraction], ...]], ...]:
    """Canonical reduced echelon basis of span{x g y : top degree <= N}.

    Two generator families span the same truncated ideal slice exactly when
    these tuples are equal.
    """
    slices = _IdealSlices(gens.m, gens.generators, EngineConfig().row_cap)
    slices.extend_to(N)
    rules = slices.rules(N)
    return tuple(
        (slices.word(lead), tuple(sorted(((slices.word(k), c) for k, c in tail.items()), key=lambda t: (len(t[0]), t[0]))))
        for lead, tail in sorted(rules.items())
    )


def substitute(t: TensorElement, images: Sequence[Mapping[int, object]]) -> TensorElement:
    """Image of ``t`` under the algebra map sending letter ``x`` to the linear form ``images[x]``."""
    out: list[tuple[Word, Fraction]] = []
    for w, c in t.terms.items():
        partial = [((), c)]
        for x in w:
            partial = [(u + (y,), a * rational(b)) for u, a in partial for y, b in images[x].items() if b]
        out.extend(partial)
    return TensorElement(out)
