"""Exact noncommutative algebra of mixed quantum-classical observables."""
from semiquant.backend.engine.algebra.scalar import (
    GaussianRational,
    Scalar,
    ZERO,
    ONE,
    I,
    HBAR,
    HBARC,
)
from semiquant.backend.engine.algebra.observable import (
    Classification,
    Dims,
    Monomial,
    Observable,
    classify_monomial,
    grlex_key,
    variables,
)
from semiquant.backend.engine.algebra.products import adjoint, multiply
from semiquant.backend.engine.algebra.brackets import (
    BracketKind,
    bracket,
    commutator,
    jacobiator,
    leibniz_defect,
    poisson,
    qbracket,
)
from semiquant.backend.engine.algebra.star import (
    cn_coefficient,
    graded_jacobi_residual,
    star_associator_coefficient,
    star_commutator,
    star_multiply,
    star_term,
)

__all__ = [
    "GaussianRational",
    "Scalar",
    "ZERO",
    "ONE",
    "I",
    "HBAR",
    "HBARC",
    "Classification",
    "Dims",
    "Monomial",
    "Observable",
    "classify_monomial",
    "grlex_key",
    "variables",
    "adjoint",
    "multiply",
    "BracketKind",
    "bracket",
    "commutator",
    "jacobiator",
    "leibniz_defect",
    "poisson",
    "qbracket",
    "cn_coefficient",
    "graded_jacobi_residual",
    "star_associator_coefficient",
    "star_commutator",
    "star_multiply",
    "star_term",
]
