"""Jacobi equations on the bracket table."""
from __future__ import annotations

from typing import Union

from semiquant.backend.core.constants import SEMIQUANT_LOGGER
from semiquant.backend.core.logger import get_logger
from semiquant.backend.engine.nogo.basis import TripleClass
from semiquant.backend.engine.nogo.system import Equation, LinearSystem, Provenance
from semiquant.backend.engine.nogo.table import BracketTable

logger = get_logger(SEMIQUANT_LOGGER)


def impose_jacobi(table: BracketTable, triple_class: Union[str, TripleClass]) -> LinearSystem:
    """
    Expand the jacobiator of every triple in the class; each monomial
    coefficient gives one linear equation in the unknowns (hbar set to 1).
    """
    if isinstance(triple_class, str):
        triple_class = TripleClass.parse(triple_class)
    label = str(triple_class)

    equations = []
    triples = 0
    for triple in triple_class.triples():
        triples += 1
        residual = table.jacobiator(*triple)
        if residual.is_zero():
            continue
        for m, coeff in residual.coeffs.items():
            row = {u: s.evaluate(1) for u, s in coeff.linear.items()}
            row = {u: c for u, c in row.items() if c}
            rhs = -coeff.base.evaluate(1)
            if not row and not rhs:
                continue
            equations.append(Equation(row, rhs, Provenance(label, triple, m)))

    logger.debug(
        f"🧮 Jacobi system for {label}",
        extra={
            "component": "nogo",
            "event": "jacobi_system",
            "triples": triples,
            "equations": len(equations),
        },
    )
    return LinearSystem(equations, (), triples)
