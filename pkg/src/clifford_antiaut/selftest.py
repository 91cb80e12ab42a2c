"""Seeded random instances and the built-in verification suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .classical import matches_classical
from .clifford import (
    clifford_antiaut,
    invariance_check,
    predicted_class,
    classify_quadratic,
    split_check,
)
from .csa import (
    Antiaut,
    adjoint_antiaut,
    antiaut_from_u,
    conjugate_antiaut,
    disc_from_one_minus_a,
    disc_sigma,
    int_w,
    make_quaternion,
)
from .errors import CliffordError, Degenerate
from .exactmath import QMatrix
from .forms import BilinearForm, clifford_form, discriminant
from .tensor_engine import EngineConfig, QuotientAlgebra

QUATERNION_PARAMS = ((-1, -1), (2, 3), (-1, 3), (5, -2))


# --------------------------------------------------------------------------
# random instances

def random_rational(rng: random.Random, height: int = 5) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_form(rng: random.Random, n: int = 2, height: int = 5, symmetric: bool = False) -> BilinearForm:
    while True:
        rows = [[random_rational(rng, height) for _ in range(n)] for _ in range(n)]
        if symmetric:
            rows = [[rows[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
        try:
            return BilinearForm.from_rows(rows)
        except Degenerate:
            continue


def random_invertible(rng: random.Random, host, height: int = 3) -> tuple[Fraction, ...]:
    while True:
        x = host.element([rng.randint(-height, height) for _ in range(host.dim)])
        if host.is_invertible(x):
            return x


def random_quaternion_antiaut(rng: random.Random, params=None, height: int = 3) -> Antiaut:
    alpha, beta = params if params is not None else rng.choice(QUATERNION_PARAMS)
    A = make_quaternion(alpha, beta)
    return antiaut_from_u(A, random_invertible(rng, A, height))


def random_antiaut(rng: random.Random) -> Antiaut:
    if rng.random() < 0.5:
        return adjoint_antiaut(random_form(rng))
    return random_quaternion_antiaut(rng)


# --------------------------------------------------------------------------
# checks shared by the suites and the test-suite

def asymmetry_identities(sigma: Antiaut, rng: random.Random, triples: int = 20) -> bool:
    A, a = sigma.host, sigma.a
    d = A.dim
    if sigma.sigma(a) != A.inv(a):
        return False
    if sigma.S @ sigma.S != int_w(A, a):
        return False
    if sigma.gamma @ sigma.gamma != QMatrix.identity(d):
        return False
    if sigma.gamma_of(A.unit) != a:
        return False
    for _ in range(triples):
        x, y, z = ([random_rational(rng, 3) for _ in range(d)] for _ in range(3))
        lhs = sigma.gamma_of(A.mul_many(x, y, z))
        rhs = A.mul_many(sigma.sigma(z), sigma.gamma_of(y), sigma.sigma_inv(x))
        if lhs != rhs:
            return False
    return True


def conjugation_identities(sigma: Antiaut, w) -> bool:
    """a_rho = w a w^-1 and gamma_rho o Int(w) = Int(w) o gamma_sigma."""
    A = sigma.host
    rho = conjugate_antiaut(sigma, w)
    W = int_w(A, w)
    return rho.a == A.mul_many(w, sigma.a, A.inv(w)) and rho.gamma @ W == W @ sigma.gamma


def discriminant_consistent(sigma: Antiaut) -> bool:
    via_one_minus_a = disc_from_one_minus_a(sigma)
    return via_one_minus_a is None or via_one_minus_a == disc_sigma(sigma)


def engine_integrity(Q: QuotientAlgebra) -> bool:
    return Q.generator_images_vanish() and Q.is_associative()


def deg2_match(sigma: Antiaut, cfg: EngineConfig | None = None) -> bool:
    Q = clifford_antiaut(sigma, cfg)
    return Q.dim == 2 and classify_quadratic(Q) == predicted_class(sigma)


# --------------------------------------------------------------------------
# suites

@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    errors: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.errors == 0


def _suite_asymmetry(rng, cfg):
    return asymmetry_identities(random_antiaut(rng), rng)


def _suite_invariance(rng, cfg):
    sigma = random_antiaut(rng)
    w = random_invertible(rng, sigma.host)
    return conjugation_identities(sigma, w) and invariance_check(sigma, w, cfg)


def _suite_deg2(rng, cfg):
    return deg2_match(random_antiaut(rng), cfg)


def _suite_discriminant(rng, cfg):
    if rng.random() < 0.5:
        f = random_form(rng, symmetric=True)
        return disc_sigma(adjoint_antiaut(f)) == discriminant(f)
    return discriminant_consistent(random_antiaut(rng))


def _suite_split(rng, cfg):
    return split_check(random_form(rng), cfg)


def _suite_classical(rng, cfg):
    f = random_form(rng, n=rng.choice((2, 3)), symmetric=True)
    return matches_classical(f, clifford_form(f, cfg))


def _suite_integrity(rng, cfg):
    f = random_form(rng, n=rng.choice((2, 3)), symmetric=rng.random() < 0.5)
    return engine_integrity(build_for_integrity(f, cfg))


def build_for_integrity(f: BilinearForm, cfg: EngineConfig | None) -> QuotientAlgebra:
    return clifford_form(f, cfg)


SUITES: dict[str, Callable[[random.Random, EngineConfig | None], bool]] = {
    "asymmetry_identities": _suite_asymmetry,
    "conjugation_invariance": _suite_invariance,
    "deg2_prediction": _suite_deg2,
    "discriminant": _suite_discriminant,
    "split_identification": _suite_split,
    "classical_oracle": _suite_classical,
    "engine_integrity": _suite_integrity,
}


def run_selftest(seed: int = 0, count: int = 50, cfg: EngineConfig | None = None) -> list[SuiteResult]:
    results = []
    for name, suite in SUITES.items():
        rng = random.Random(f"{seed}:{name}")
        res = SuiteResult(name)
        for _ in range(count):
            try:
                if suite(rng, cfg):
                    res.passed += 1
                else:
                    res.failed += 1
            except CliffordError:
                res.errors += 1
        results.append(res)
    return results
