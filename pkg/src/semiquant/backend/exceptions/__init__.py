from semiquant.backend.exceptions.errors import (
    SemiquantError,
    DimensionMismatchError,
    AlgebraError,
    ExprError,
    ExprSyntaxError,
    UnknownSymbolError,
    IndexRangeError,
    NegativeExponentError,
    AxiomError,
    IntegrabilityError,
    AffineClosureError,
    MissingEntryError,
    ReproductionDeviation,
    FieldParamsError,
    StabilityError,
)

__all__ = [
    "SemiquantError",
    "DimensionMismatchError",
    "AlgebraError",
    "ExprError",
    "ExprSyntaxError",
    "UnknownSymbolError",
    "IndexRangeError",
    "NegativeExponentError",
    "AxiomError",
    "IntegrabilityError",
    "AffineClosureError",
    "MissingEntryError",
    "ReproductionDeviation",
    "FieldParamsError",
    "StabilityError",
]
