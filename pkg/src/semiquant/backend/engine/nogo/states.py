from __future__ import annotations

import operator
from dataclasses import dataclass, field
from typing import Annotated, Dict, List, Optional, Tuple, TypedDict

from semiquant.backend.engine.algebra import GaussianRational, Monomial, Observable, Scalar
from semiquant.backend.engine.nogo.affine import UnknownId
from semiquant.backend.engine.nogo.system import LinearSystem, SolveOutcome, Solution
from semiquant.backend.engine.nogo.table import BracketTable


@dataclass(frozen=True)
class Certificate:
    """A concrete triple whose Jacobi residual is nonzero once the unknowns are fixed."""
    triple_class: str
    triple: Tuple[Monomial, Monomial, Monomial]
    monomial: Monomial
    witness_value: GaussianRational
    residual: Observable


@dataclass
class StepRecord:
    step: int
    pair_class: Tuple[int, int]
    unknowns: int
    expected_unknowns: int
    determining_classes: Tuple[str, ...]
    check_class: str
    determining_triples: int
    check_triples: int
    equations: int
    rank: int
    determining_outcome: SolveOutcome
    outcome: SolveOutcome
    assignment: Dict[UnknownId, Scalar] = field(default_factory=dict)
    free: Tuple[UnknownId, ...] = ()
    matches_standard_hybrid: Optional[bool] = None
    certificate: Optional[Certificate] = None

    @property
    def expected_outcome(self) -> SolveOutcome:
        return SolveOutcome.INCONSISTENT if self.step == 4 else SolveOutcome.UNIQUE

    @property
    def as_predicted(self) -> bool:
        if self.unknowns != self.expected_unknowns:
            return False
        if self.determining_outcome is not SolveOutcome.UNIQUE:
            return False
        if self.outcome is not self.expected_outcome:
            return False
        if self.step == 4:
            return self.certificate is not None and not self.certificate.residual.is_zero()
        return bool(self.matches_standard_hybrid)


@dataclass
class NoGoReport:
    steps: int
    records: List[StepRecord]

    @property
    def matches_prediction(self) -> bool:
        return len(self.records) == self.steps and all(r.as_predicted for r in self.records)

    @property
    def verdict(self) -> str:
        return "reproduced" if self.matches_prediction else "deviation"

    @property
    def unknown_counts(self) -> List[int]:
        return [r.unknowns for r in self.records]


class InductionState(TypedDict):
    """
    Graph state for the inductive constant-solving procedure.

    Attributes:
        steps: Number of induction steps requested (1..4)
        step_index: 0-based index of the step about to run
        table: The bracket table, mutated in place as steps resolve
        unknowns: Fresh unknowns introduced by the current step
        determining: Stacked system of the determining triple classes
        determining_solution: Its exact solution
        records: One record per finished step (additive reducer)
        halted: Set when a step leaves the predicted path or the procedure breaks down
    """
    steps: int
    step_index: int
    table: BracketTable
    unknowns: List[UnknownId]
    determining: Optional[LinearSystem]
    determining_solution: Optional[Solution]
    records: Annotated[List[StepRecord], operator.add]
    halted: bool
