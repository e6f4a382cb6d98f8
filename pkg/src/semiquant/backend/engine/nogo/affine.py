"""Observables affine in unknown c-number constants."""
from __future__ import annotations

from typing import Callable, Dict, Iterator, Mapping, NamedTuple, Optional, Tuple

from semiquant.backend.engine.algebra import Monomial, Observable, Scalar, grlex_key
from semiquant.backend.engine.nogo.basis import NOGO_DIMS
from semiquant.backend.exceptions.errors import AffineClosureError


class UnknownId(NamedTuple):
    """The additive constant of the table entry (left, right)."""
    left: Monomial
    right: Monomial

    @property
    def weight(self) -> int:
        """hbar-homogeneity weight of the constant: deg(left) + deg(right) - 2."""
        return sum(self.left) + sum(self.right) - 2

    def sort_key(self) -> Tuple:
        return grlex_key(self.left), grlex_key(self.right)


class AffineScalar(NamedTuple):
    base: Scalar
    linear: Mapping[UnknownId, Scalar]

    def is_resolved(self) -> bool:
        return not self.linear


class AffineObservable:
    """base + sum_u u * linear[u], every part an ordinary Observable."""
    __slots__ = ("base", "linear")

    def __init__(self, base: Optional[Observable] = None, linear: Optional[Mapping[UnknownId, Observable]] = None):
        self.base = base if base is not None else Observable.zero(NOGO_DIMS)
        self.linear: Dict[UnknownId, Observable] = {u: o for u, o in (linear or {}).items() if o}

    @classmethod
    def of(cls, obs: Observable) -> "AffineObservable":
        return cls(obs)

    @classmethod
    def unknown(cls, u: UnknownId) -> "AffineObservable":
        return cls(None, {u: Observable.constant(1, NOGO_DIMS)})

    def parts(self) -> Iterator[Tuple[Optional[UnknownId], Observable]]:
        yield None, self.base
        yield from self.linear.items()

    def is_zero(self) -> bool:
        return self.base.is_zero() and not self.linear

    def is_resolved(self) -> bool:
        return not self.linear

    def unknowns(self) -> Tuple[UnknownId, ...]:
        return tuple(sorted(self.linear, key=UnknownId.sort_key))

    @property
    def coeffs(self) -> Dict[Monomial, AffineScalar]:
        support = set(self.base.coeffs)
        for part in self.linear.values():
            support.update(part.coeffs)
        out = {}
        for m in sorted(support, key=grlex_key):
            linear = {u: o.coefficient(m) for u, o in self.linear.items() if o.coefficient(m)}
            out[m] = AffineScalar(self.base.coefficient(m), linear)
        return out

    def map_parts(self, fn: Callable[[Observable], Observable]) -> "AffineObservable":
        """Apply an operation that is linear in its argument."""
        return AffineObservable(fn(self.base), {u: fn(o) for u, o in self.linear.items()})

    def __add__(self, other: "AffineObservable") -> "AffineObservable":
        linear = dict(self.linear)
        for u, o in other.linear.items():
            linear[u] = linear[u] + o if u in linear else o
        return AffineObservable(self.base + other.base, linear)

    def __neg__(self) -> "AffineObservable":
        return self.map_parts(lambda o: -o)

    def __sub__(self, other: "AffineObservable") -> "AffineObservable":
        return self + (-other)

    def scale(self, factor: Scalar) -> "AffineObservable":
        return self.map_parts(lambda o: o.scale(factor))

    def times_unknown(self, u: UnknownId) -> "AffineObservable":
        if self.linear:
            raise AffineClosureError(
                "product of two unknown-bearing quantities",
                unknown=str(u),
                other=[str(v) for v in self.unknowns()],
            )
        return AffineObservable(None, {u: self.base})

    def substitute(self, values: Mapping[UnknownId, Scalar]) -> "AffineObservable":
        base = self.base
        linear = {}
        for u, o in self.linear.items():
            if u in values:
                base = base + o.scale(values[u])
            else:
                linear[u] = o
        return AffineObservable(base, linear)

    def resolved(self) -> Observable:
        if self.linear:
            raise AffineClosureError("observable still carries unknowns", unknowns=[str(u) for u in self.unknowns()])
        return self.base

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AffineObservable):
            return NotImplemented
        return self.base == other.base and self.linear == other.linear

    def __repr__(self) -> str:
        return f"AffineObservable(base={self.base!r}, unknowns={len(self.linear)})"
