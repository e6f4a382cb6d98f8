from typing import Optional, Tuple

from semiquant.backend.core.constants import SEMIQUANT_LOGGER
from semiquant.backend.core.logger import get_logger
from semiquant.backend.engine.algebra import BracketKind, Dims, bracket, jacobiator, leibniz_defect
from semiquant.backend.engine.exprio import format_observable, parse
from semiquant.backend.schemas.reports import BracketResult, DefectCheck

logger = get_logger(SEMIQUANT_LOGGER)


def evaluate_bracket(
    a: str,
    b: str,
    kind: str = "s",
    jacobi: Optional[str] = None,
    leibniz: Optional[str] = None,
    dims: Tuple[int, int] = (1, 1),
) -> BracketResult:
    """
    Parse both arguments, evaluate the bracket and, on request,
    the Jacobi defect with a third argument and the Leibniz defect of (a*b, h).
    """
    dims = Dims(*dims)
    bracket_kind = BracketKind.from_flag(kind)
    left, right = parse(a, dims), parse(b, dims)

    result = BracketResult(
        bracket=bracket_kind.value,
        dims=list(dims),
        a=format_observable(left),
        b=format_observable(right),
        result=format_observable(bracket(bracket_kind, left, right)),
    )
    if jacobi is not None:
        third = parse(jacobi, dims)
        defect = jacobiator(bracket_kind, left, right, third)
        result.jacobi = DefectCheck(
            argument=format_observable(third),
            defect=format_observable(defect),
            vanishes=defect.is_zero(),
        )
    if leibniz is not None:
        h = parse(leibniz, dims)
        defect = leibniz_defect(bracket_kind, left, right, h)
        result.leibniz = DefectCheck(
            argument=format_observable(h),
            defect=format_observable(defect),
            vanishes=defect.is_zero(),
        )

    logger.debug(
        "🧮 Bracket evaluated",
        extra={"component": "bracket_service", "event": "bracket", "bracket": bracket_kind.value},
    )
    return result
