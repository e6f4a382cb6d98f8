"""Text grammar for observables and report serialization."""
from semiquant.backend.engine.exprio.parser import parse
from semiquant.backend.engine.exprio.formatter import format_observable, format_scalar

__all__ = ["parse", "format_observable", "format_scalar"]
