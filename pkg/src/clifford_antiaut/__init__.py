"""Exact Clifford algebras of bilinear forms and of antiautomorphisms of degree-2 algebras over Q."""

from .clifford import (
    QuadraticAlgebraClass,
    build_J1,
    build_J2,
    classify_quadratic,
    clifford_antiaut,
    invariance_check,
    phi_map,
    split_check,
    verify_deg2,
)
from .csa import (
    Antiaut,
    adjoint_antiaut,
    antiaut_from_u,
    canonical_involution,
    conjugate_antiaut,
    disc_sigma,
    make_matrix2,
    make_quaternion,
)
from .errors import CliffordError
from .exactmath import QMatrix, SquareClass, square_class
from .forms import BilinearForm, asymmetry, clifford_form, discriminant, even_clifford
from .tensor_engine import EngineConfig, IdealGenerators, QuotientAlgebra, TensorElement, quotient

__version__ = "0.1.0"

__all__ = [
    "Antiaut",
    "BilinearForm",
    "CliffordError",
    "EngineConfig",
    "IdealGenerators",
    "QMatrix",
    "QuadraticAlgebraClass",
    "QuotientAlgebra",
    "SquareClass",
    "TensorElement",
    "adjoint_antiaut",
    "antiaut_from_u",
    "asymmetry",
    "build_J1",
    "build_J2",
    "canonical_involution",
    "classify_quadratic",
    "clifford_antiaut",
    "clifford_form",
    "conjugate_antiaut",
    "disc_sigma",
    "discriminant",
    "even_clifford",
    "invariance_check",
    "make_matrix2",
    "make_quaternion",
    "phi_map",
    "quotient",
    "split_check",
    "square_class",
    "verify_deg2",
]
