"""Dynamical brackets and their Jacobi / Leibniz defects."""
from __future__ import annotations

from enum import Enum
from fractions import Fraction

from semiquant.backend.engine.algebra.observable import Observable
from semiquant.backend.engine.algebra.products import multiply

HALF = Fraction(1, 2)


class BracketKind(str, Enum):
    QUANTUM = "quantum"
    POISSON = "poisson"
    STANDARD_HYBRID = "standard_hybrid"
    ANDERSON_HYBRID = "anderson_hybrid"

    @property
    def antisymmetric(self) -> bool:
        """The written-order Poisson bracket is antisymmetric only on commuting factors."""
        return self in (BracketKind.QUANTUM, BracketKind.STANDARD_HYBRID)

    @classmethod
    def from_flag(cls, flag: str) -> "BracketKind":
        """CLI short flags: q, c, s, a."""
        mapping = {
            "q": cls.QUANTUM,
            "c": cls.POISSON,
            "s": cls.STANDARD_HYBRID,
            "a": cls.ANDERSON_HYBRID,
        }
        try:
            return mapping[flag]
        except KeyError:
            return cls(flag)


def poisson(a: Observable, b: Observable) -> Observable:
    """sum_j dA/dx_j * dB/dk_j - dA/dk_j * dB/dx_j, factors kept in written order."""
    a._check_dims(b)
    result = Observable.zero(a.dims)
    for j in range(1, a.dims.n_c + 1):
        result = result + multiply(a.partial("x", j), b.partial("k", j))
        result = result - multiply(a.partial("k", j), b.partial("x", j))
    return result


def commutator(a: Observable, b: Observable) -> Observable:
    return multiply(a, b) - multiply(b, a)


def qbracket(a: Observable, b: Observable) -> Observable:
    """(AB - BA) / (i hbar). Division is exact on canonical polynomials."""
    return commutator(a, b).divide_by_i_hbar()


def bracket(kind: BracketKind, a: Observable, b: Observable) -> Observable:
    kind = BracketKind(kind)
    if kind is BracketKind.QUANTUM:
        return qbracket(a, b)
    if kind is BracketKind.POISSON:
        return poisson(a, b)
    if kind is BracketKind.STANDARD_HYBRID:
        return qbracket(a, b) + (poisson(a, b) - poisson(b, a)).scale(HALF)
    return qbracket(a, b) + poisson(a, b)


def jacobiator(kind: BracketKind, a: Observable, b: Observable, c: Observable) -> Observable:
    """((A,B),C) + ((B,C),A) + ((C,A),B)."""
    return (
        bracket(kind, bracket(kind, a, b), c)
        + bracket(kind, bracket(kind, b, c), a)
        + bracket(kind, bracket(kind, c, a), b)
    )


def leibniz_defect(kind: BracketKind, a: Observable, b: Observable, h: Observable) -> Observable:
    """(AB,H) - (A,H)B - A(B,H)."""
    return (
        bracket(kind, multiply(a, b), h)
        - multiply(bracket(kind, a, h), b)
        - multiply(a, bracket(kind, b, h))
    )
