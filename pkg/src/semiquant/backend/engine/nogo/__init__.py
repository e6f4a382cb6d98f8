"""Mechanized verifier for the inductive bracket-table obstruction."""
from semiquant.backend.engine.nogo.basis import NOGO_DIMS, TripleClass, basis, mixed_basis
from semiquant.backend.engine.nogo.affine import AffineObservable, AffineScalar, UnknownId
from semiquant.backend.engine.nogo.table import (
    BracketTable,
    axiom_bracket,
    build_table,
    reconstruct_from_partials,
)
from semiquant.backend.engine.nogo.system import (
    Equation,
    Inconsistent,
    LinearSystem,
    Provenance,
    SolveOutcome,
    Underdetermined,
    Unique,
    exact_solve,
    restore_hbar,
)
from semiquant.backend.engine.nogo.jacobi import impose_jacobi
from semiquant.backend.engine.nogo.states import Certificate, NoGoReport, StepRecord
from semiquant.backend.engine.nogo.graph import NoGoGraph, run_verification

__all__ = [
    "NOGO_DIMS",
    "TripleClass",
    "basis",
    "mixed_basis",
    "AffineObservable",
    "AffineScalar",
    "UnknownId",
    "BracketTable",
    "axiom_bracket",
    "build_table",
    "reconstruct_from_partials",
    "Equation",
    "Inconsistent",
    "LinearSystem",
    "Provenance",
    "SolveOutcome",
    "Underdetermined",
    "Unique",
    "exact_solve",
    "restore_hbar",
    "impose_jacobi",
    "Certificate",
    "NoGoReport",
    "StepRecord",
    "NoGoGraph",
    "run_verification",
]
