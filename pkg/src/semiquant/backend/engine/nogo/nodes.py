from __future__ import annotations

from typing import Dict, Literal

from semiquant.backend.core.constants import INDUCTION_STEPS, SEMIQUANT_LOGGER
from semiquant.backend.core.logger import get_logger
from semiquant.backend.engine.algebra import BracketKind, Observable, Scalar, bracket
from semiquant.backend.engine.nogo.affine import UnknownId
from semiquant.backend.engine.nogo.basis import NOGO_DIMS
from semiquant.backend.engine.nogo.jacobi import impose_jacobi
from semiquant.backend.engine.nogo.states import Certificate, InductionState, StepRecord
from semiquant.backend.engine.nogo.system import (
    Inconsistent,
    LinearSystem,
    SolveOutcome,
    Underdetermined,
    Unique,
    exact_solve,
    restore_hbar,
)
from semiquant.backend.engine.nogo.table import BracketTable

logger = get_logger(SEMIQUANT_LOGGER)


def build_node(state: InductionState) -> Dict:
    """Adds the current step's (M_n, M_n') entries to the table."""
    step, pair, _, _, _ = INDUCTION_STEPS[state["step_index"]]
    fresh = state["table"].add_pair_class(*pair)
    logger.info(
        f"🧱 Step {step}: (M{pair[0]},M{pair[1]}) carries {len(fresh)} unknowns",
        extra={"component": "nogo", "event": "step_build", "step": step, "unknowns": len(fresh)},
    )
    return {"unknowns": fresh}


def determine_node(state: InductionState) -> Dict:
    """Solves the determining triple classes for the fresh unknowns."""
    step, _, determining, _, _ = INDUCTION_STEPS[state["step_index"]]
    table = state["table"]
    system = LinearSystem(declared=tuple(state["unknowns"]))
    for triple_class in determining:
        system = system + impose_jacobi(table, triple_class)
    solution = exact_solve(system)
    logger.info(
        f"🎯 Step {step}: determining system is {solution.outcome.value}",
        extra={
            "component": "nogo",
            "event": "step_determine",
            "step": step,
            "equations": len(system.equations),
            "rank": solution.rank,
        },
    )
    return {"determining": system, "determining_solution": solution}


def _matches_standard_hybrid(table: BracketTable, unknowns) -> bool:
    for u in unknowns:
        left = Observable.from_monomial(u.left, NOGO_DIMS)
        right = Observable.from_monomial(u.right, NOGO_DIMS)
        if table.resolved_entry(u.left, u.right) != bracket(BracketKind.STANDARD_HYBRID, left, right):
            return False
    return True


def check_node(state: InductionState) -> Dict:
    """
    Stacks the check class on the determining system. A consistent stack
    fixes the unknowns for later steps; an inconsistent one yields a certificate.
    """
    idx = state["step_index"]
    step, pair, determining, check_class, expected = INDUCTION_STEPS[idx]
    table = state["table"]
    system = state["determining"]
    first = state["determining_solution"]
    unknowns = state["unknowns"]

    record = StepRecord(
        step=step,
        pair_class=pair,
        unknowns=len(unknowns),
        expected_unknowns=expected,
        determining_classes=tuple(determining),
        check_class=check_class,
        determining_triples=system.triples,
        check_triples=0,
        equations=len(system.equations),
        rank=first.rank,
        determining_outcome=first.outcome,
        outcome=first.outcome,
    )

    if not isinstance(first, Unique):
        if isinstance(first, Underdetermined):
            record.free = first.free
        logger.warning(
            f"⚠️ Step {step}: determining system is {first.outcome.value}, stopping",
            extra={"component": "nogo", "event": "step_halt", "step": step},
        )
        return {"records": [record], "halted": True, "step_index": idx + 1}

    check = impose_jacobi(table, check_class)
    stacked = exact_solve(system + check)
    record.check_triples = check.triples
    record.equations += len(check.equations)
    record.outcome = stacked.outcome

    restored: Dict[UnknownId, Scalar] = {u: restore_hbar(v, u.weight) for u, v in first.assignment.items()}
    table.resolve(restored)
    record.assignment = restored

    halted = False
    if isinstance(stacked, Inconsistent):
        prov = stacked.source.provenance
        residual = table.jacobiator(*prov.triple).resolved()
        record.certificate = Certificate(
            triple_class=prov.triple_class,
            triple=prov.triple,
            monomial=prov.monomial,
            witness_value=stacked.witness.rhs,
            residual=residual,
        )
        halted = True
        logger.info(
            f"💥 Step {step}: {check_class} is inconsistent with the fixed constants",
            extra={"component": "nogo", "event": "step_inconsistent", "step": step},
        )
    elif stacked.outcome is SolveOutcome.UNIQUE:
        record.matches_standard_hybrid = _matches_standard_hybrid(table, unknowns)
        logger.info(
            f"✅ Step {step}: {check_class} holds automatically",
            extra={
                "component": "nogo",
                "event": "step_consistent",
                "step": step,
                "matches_standard_hybrid": record.matches_standard_hybrid,
            },
        )
    else:
        halted = True

    return {"records": [record], "halted": halted, "step_index": idx + 1}


def should_continue(state: InductionState) -> Literal["build_node", "__end__"]:
    if state["halted"] or state["step_index"] >= state["steps"]:
        return "__end__"
    return "build_node"
