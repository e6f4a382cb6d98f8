"""Domain exceptions. Each class carries the CLI exit code it maps to."""
from typing import Any, Optional

from semiquant.backend.core.constants import EXIT_BAD_INPUT, EXIT_DEVIATION, EXIT_INTERNAL


class SemiquantError(Exception):
    exit_code: int = EXIT_INTERNAL

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": self.message, **self.details}


# ============================================================
# Algebra
# ============================================================
class DimensionMismatchError(SemiquantError):
    exit_code = EXIT_BAD_INPUT


class AlgebraError(SemiquantError):
    """Internal invariant of the exact algebra broke (e.g. a commutator not divisible by hbar)."""


# ============================================================
# Expression parsing
# ============================================================
class ExprError(SemiquantError):
    exit_code = EXIT_BAD_INPUT

    def __init__(self, message: str, position: Optional[int] = None, **details: Any):
        super().__init__(message, position=position, **details)
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} (at position {self.position})"


class ExprSyntaxError(ExprError):
    pass


class UnknownSymbolError(ExprError):
    pass


class IndexRangeError(ExprError):
    pass


class NegativeExponentError(ExprError):
    pass


# ============================================================
# No-go induction
# ============================================================
class AxiomError(SemiquantError):
    """Axiom bracket requested with a mixed argument."""
    exit_code = EXIT_BAD_INPUT


class IntegrabilityError(SemiquantError):
    pass


class AffineClosureError(SemiquantError):
    pass


class MissingEntryError(SemiquantError):
    pass


class ReproductionDeviation(SemiquantError):
    """The computation ran but its outcome contradicts the predicted one."""
    exit_code = EXIT_DEVIATION


# ============================================================
# Field theory
# ============================================================
class FieldParamsError(SemiquantError):
    exit_code = EXIT_BAD_INPUT

    def __init__(self, message: str, parameter: str, **details: Any):
        super().__init__(message, parameter=parameter, **details)
        self.parameter = parameter


class StabilityError(FieldParamsError):
    pass
