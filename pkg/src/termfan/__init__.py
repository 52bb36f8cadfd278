"""Leading ideals, Groebner fans and term orderings over exact rationals."""

from .algebra import AlgebraPresentation, NotSolvableError, commutative, solvable, weyl
from .fan import (
    enumerate_leading_ideals_admissible,
    enumerate_leading_ideals_degree,
    minimal_leading_ideals,
    universal_gb,
    verify_universal,
)
from .groebner import GroebnerBasis, IdealSpec, buchberger, divide, macaulay_check, reduce_gb, reduced_basis
from .ideals import MonomialIdeal, hilbert_function, hilbert_polynomial_and_index
from .kernels import BACKEND
from .orderings import (
    GradedTableOrdering,
    MatrixOrdering,
    classify,
    grevlex,
    grlex,
    lex,
    metric_distance,
    perturb_to_incompatible,
    weighted,
)
from .parsing import parse_monomial, parse_ordering, parse_polynomial
from .poly import Polynomial, RingSignature

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation",
    "BACKEND",
    "GradedTableOrdering",
    "GroebnerBasis",
    "IdealSpec",
    "MatrixOrdering",
    "MonomialIdeal",
    "NotSolvableError",
    "Polynomial",
    "RingSignature",
    "buchberger",
    "classify",
    "commutative",
    "divide",
    "enumerate_leading_ideals_admissible",
    "enumerate_leading_ideals_degree",
    "grevlex",
    "grlex",
    "hilbert_function",
    "hilbert_polynomial_and_index",
    "lex",
    "macaulay_check",
    "metric_distance",
    "minimal_leading_ideals",
    "parse_monomial",
    "parse_ordering",
    "parse_polynomial",
    "perturb_to_incompatible",
    "reduce_gb",
    "reduced_basis",
    "solvable",
    "universal_gb",
    "verify_universal",
    "weighted",
    "weyl",
]
