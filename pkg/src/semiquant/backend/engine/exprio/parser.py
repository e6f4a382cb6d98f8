"""Parse observable expressions into canonical Observables."""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from semiquant.backend.engine.algebra import Dims, Observable, Scalar, HBAR, HBARC, I
from semiquant.backend.exceptions.errors import (
    ExprError,
    ExprSyntaxError,
    IndexRangeError,
    NegativeExponentError,
    UnknownSymbolError,
)
from semiquant.backend.helpers.utils import load_grammar

_VARIABLE = re.compile(r"^([qpxk])([0-9]*)$")
_CONSTANTS = {"hbar": HBAR, "hbarc": HBARC, "i": I}


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(load_grammar("observable.lark"), parser="lalr", propagate_positions=True)


@v_args(inline=True)
class _ObservableBuilder(Transformer):
    def __init__(self, dims: Dims):
        super().__init__()
        self.dims = dims

    def integer(self, token: Token) -> Observable:
        return Observable.constant(int(token), self.dims)

    def rational(self, num: Token, den: Token) -> Observable:
        if int(den) == 0:
            raise ExprSyntaxError("zero denominator", position=den.start_pos)
        return Observable.constant(Fraction(int(num), int(den)), self.dims)

    def symbol(self, token: Token) -> Observable:
        name = str(token)
        if name in _CONSTANTS:
            return Observable.constant(_CONSTANTS[name], self.dims)
        match = _VARIABLE.match(name)
        if not match:
            raise UnknownSymbolError(f"unknown symbol {name!r}", position=token.start_pos, symbol=name)
        var, digits = match.groups()
        index = int(digits) if digits else 1
        try:
            return Observable.variable(var, index, self.dims)
        except IndexRangeError as e:
            raise IndexRangeError(e.message, position=token.start_pos, symbol=name) from None

    def pos_exponent(self, token: Token) -> int:
        return int(token)

    def neg_exponent(self, token: Token) -> int:
        raise NegativeExponentError(
            f"negative exponent -{token}", position=max(token.start_pos - 1, 0)
        )

    def pow(self, base: Observable, exponent: int) -> Observable:
        return base ** exponent

    def mul(self, left: Observable, right: Observable) -> Observable:
        return left * right

    def add(self, left: Observable, right: Observable) -> Observable:
        return left + right

    def sub(self, left: Observable, right: Observable) -> Observable:
        return left - right

    def neg(self, operand: Observable) -> Observable:
        return -operand


def _error_position(error: UnexpectedInput, text: str) -> int:
    if isinstance(error, UnexpectedEOF):
        return len(text)
    if isinstance(error, UnexpectedToken) and error.token.type == "$END":
        return len(text)
    pos = getattr(error, "pos_in_stream", None)
    if pos is None or pos < 0:
        return len(text)
    return pos


def parse(text: str, dims: Tuple[int, int] = (1, 1)) -> Observable:
    """
    Evaluate `text` in the algebra with the given (n_q, n_c).
    Raises an ExprError subclass carrying the character position on failure.
    """
    dims = Dims(*dims)
    if not text or not text.strip():
        raise ExprSyntaxError("empty expression", position=0)
    try:
        tree = _parser().parse(text)
    except UnexpectedCharacters as e:
        raise ExprSyntaxError(
            f"unexpected character {text[e.pos_in_stream]!r}", position=e.pos_in_stream
        ) from None
    except UnexpectedInput as e:
        position = _error_position(e, text)
        found = getattr(getattr(e, "token", None), "value", None) or "end of input"
        raise ExprSyntaxError(f"unexpected {found!r}", position=position) from None

    try:
        result = _ObservableBuilder(dims).transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, ExprError):
            raise e.orig_exc from None
        raise
    if isinstance(result, Scalar):
        result = Observable.constant(result, dims)
    return result
