"""
Partially determined bracket table built by induction on degree.

Brackets of basis monomials are fixed by the axioms unless both arguments
are mixed; those entries are reconstructed from their brackets with
q, p, x, k up to one additive unknown constant per pair.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product as cartesian
from typing import Dict, List, Mapping, Optional, Tuple, Union

from semiquant.backend.core.constants import SEMIQUANT_LOGGER
from semiquant.backend.core.logger import get_logger
from semiquant.backend.engine.algebra import (
    Classification,
    Monomial,
    Observable,
    Scalar,
    classify_monomial,
    grlex_key,
    poisson,
    qbracket,
)
from semiquant.backend.engine.nogo.affine import AffineObservable, UnknownId
from semiquant.backend.engine.nogo.basis import NOGO_DIMS, mixed_basis
from semiquant.backend.exceptions.errors import (
    AffineClosureError,
    AxiomError,
    IntegrabilityError,
    MissingEntryError,
)

logger = get_logger(SEMIQUANT_LOGGER)

Pair = Tuple[Monomial, Monomial]
_SLOTS = {"q": 0, "p": 1, "x": 2, "k": 3}


def _as_affine(value: Union[Observable, AffineObservable]) -> AffineObservable:
    return value if isinstance(value, AffineObservable) else AffineObservable.of(value)


def axiom_bracket(a: Union[Observable, AffineObservable], p: Observable) -> AffineObservable:
    """(A,C) = {A,C} for classical C, (A,Q) = (A,Q)_q for quantum Q; zero for c-numbers."""
    kind = p.classification()
    if kind is Classification.MIXED:
        raise AxiomError("axiom bracket needs a purely classical or purely quantum argument")
    a = _as_affine(a)
    if kind is Classification.CNUMBER:
        return AffineObservable()
    if kind is Classification.CLASSICAL:
        return a.map_parts(lambda o: poisson(o, p))
    return a.map_parts(lambda o: qbracket(o, p))


def _integrate(partials: Mapping[str, Observable]) -> Observable:
    """Polynomial without constant term whose formal partials are `partials` (Euler's relation)."""
    acc: Dict[Monomial, Scalar] = {}
    for var, g in partials.items():
        slot = _SLOTS[var]
        for m, c in g.coeffs.items():
            raised = m[:slot] + (m[slot] + 1,) + m[slot + 1:]
            acc[raised] = acc[raised] + c if raised in acc else c
    result = Observable({m: c * Scalar.of(Fraction(1, sum(m))) for m, c in acc.items()}, NOGO_DIMS)
    for var, g in partials.items():
        if result.partial(var) != g:
            raise IntegrabilityError(
                f"gradient is not integrable in {var}",
                variable=var,
            )
    return result


def reconstruct_from_partials(
    gq: Union[Observable, AffineObservable],
    gp: Union[Observable, AffineObservable],
    gx: Union[Observable, AffineObservable],
    gk: Union[Observable, AffineObservable],
    fresh: Optional[UnknownId] = None,
) -> AffineObservable:
    """
    Rebuild B from (B,q), (B,p), (B,x), (B,k):
    dB/dp = -gq, dB/dq = gp, dB/dk = -gx, dB/dx = gk. Adds fresh*1.
    """
    gq, gp, gx, gk = (_as_affine(g) for g in (gq, gp, gx, gk))
    keys = set(gq.linear) | set(gp.linear) | set(gx.linear) | set(gk.linear)
    zero = Observable.zero(NOGO_DIMS)

    def gradient(u: Optional[UnknownId]) -> Dict[str, Observable]:
        pick = (lambda g: g.base) if u is None else (lambda g: g.linear.get(u, zero))
        return {"q": pick(gp), "p": -pick(gq), "x": pick(gk), "k": -pick(gx)}

    result = AffineObservable(_integrate(gradient(None)), {u: _integrate(gradient(u)) for u in keys})
    if fresh is not None:
        result = result + AffineObservable.unknown(fresh)
    return result


class BracketTable:
    """Stores one orientation per mixed pair, keyed in graded-lex order."""

    def __init__(self):
        self.entries: Dict[Pair, AffineObservable] = {}
        self.resolved: Dict[UnknownId, Scalar] = {}
        self.pair_classes: List[Tuple[int, int]] = []
        self._cache: Dict[Pair, AffineObservable] = {}
        self._axiom_cache: Dict[Pair, AffineObservable] = {}

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------
    def entry(self, left: Monomial, right: Monomial) -> AffineObservable:
        if left == right:
            return AffineObservable()
        if grlex_key(left) < grlex_key(right):
            key, sign = (left, right), 1
        else:
            key, sign = (right, left), -1
        try:
            value = self.entries[key]
        except KeyError:
            raise MissingEntryError(
                f"table entry ({left}, {right}) has not been built",
                left=left,
                right=right,
            ) from None
        return value if sign == 1 else -value

    def _axiom(self, left: Monomial, right: Monomial) -> AffineObservable:
        key = (left, right)
        cached = self._axiom_cache.get(key)
        if cached is None:
            cached = axiom_bracket(
                Observable.from_monomial(left, NOGO_DIMS), Observable.from_monomial(right, NOGO_DIMS)
            )
            self._axiom_cache[key] = cached
        return cached

    def basis_bracket(self, left: Monomial, right: Monomial) -> AffineObservable:
        key = (left, right)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        k_left = classify_monomial(left, NOGO_DIMS)
        k_right = classify_monomial(right, NOGO_DIMS)
        if Classification.CNUMBER in (k_left, k_right):
            value = AffineObservable()
        elif k_left is Classification.MIXED and k_right is Classification.MIXED:
            value = self.entry(left, right)
        elif k_right is not Classification.MIXED:
            value = self._axiom(left, right)
        else:
            value = -self._axiom(right, left)
        self._cache[key] = value
        return value

    # ------------------------------------------------------------------
    # Bilinear extension
    # ------------------------------------------------------------------
    def bracket(
        self,
        left: Union[Observable, AffineObservable],
        right: Union[Observable, AffineObservable],
    ) -> AffineObservable:
        left, right = _as_affine(left), _as_affine(right)
        base_acc: Dict[Monomial, Scalar] = {}
        linear_acc: Dict[UnknownId, Dict[Monomial, Scalar]] = {}

        for u, lobs in left.parts():
            for v, robs in right.parts():
                for m1, c1 in lobs.coeffs.items():
                    for m2, c2 in robs.coeffs.items():
                        value = self.basis_bracket(m1, m2)
                        if value.is_zero():
                            continue
                        if u is not None and v is not None:
                            raise AffineClosureError(
                                "bracket of two unknown-bearing arguments",
                                left=str(u),
                                right=str(v),
                            )
                        factor = c1 * c2
                        tag = u if u is not None else v
                        if tag is not None:
                            if value.linear:
                                raise AffineClosureError(
                                    "unknown constant multiplies an unresolved entry",
                                    unknown=str(tag),
                                    entry=(m1, m2),
                                )
                            _accumulate(linear_acc.setdefault(tag, {}), value.base, factor)
                            continue
                        _accumulate(base_acc, value.base, factor)
                        for w, part in value.linear.items():
                            _accumulate(linear_acc.setdefault(w, {}), part, factor)

        return AffineObservable(
            Observable(base_acc, NOGO_DIMS),
            {w: Observable(acc, NOGO_DIMS) for w, acc in linear_acc.items()},
        )

    def jacobiator(self, a: Monomial, b: Monomial, c: Monomial) -> AffineObservable:
        A, B, C = (Observable.from_monomial(m, NOGO_DIMS) for m in (a, b, c))
        return (
            self.bracket(self.bracket(A, B), C)
            + self.bracket(self.bracket(B, C), A)
            + self.bracket(self.bracket(C, A), B)
        )

    # ------------------------------------------------------------------
    # Induction
    # ------------------------------------------------------------------
    def _xi_partials(self, left: Monomial, right: Monomial) -> Dict[str, AffineObservable]:
        """((M,M'),xi) = ((M,xi),M') + (M,(M',xi)) for xi in q, p, x, k."""
        M = Observable.from_monomial(left, NOGO_DIMS)
        Mp = Observable.from_monomial(right, NOGO_DIMS)
        out = {}
        for var in ("q", "p", "x", "k"):
            xi = Observable.variable(var, 1, NOGO_DIMS)
            out[var] = (
                self.bracket(axiom_bracket(M, xi), Mp)
                + self.bracket(M, axiom_bracket(Mp, xi))
            )
        return out

    def add_pair_class(self, n: int, n_prime: int) -> List[UnknownId]:
        """Build every (M_n, M_n') entry; returns the fresh unknowns in table order."""
        lo, hi = sorted((n, n_prime))
        if lo == hi:
            pairs = list(combinations(mixed_basis(lo), 2))
        else:
            pairs = list(cartesian(mixed_basis(lo), mixed_basis(hi)))

        fresh: List[UnknownId] = []
        for left, right in pairs:
            g = self._xi_partials(left, right)
            u = UnknownId(left, right)
            entry = reconstruct_from_partials(g["q"], g["p"], g["x"], g["k"], fresh=u)
            self.entries[(left, right)] = entry.substitute(self.resolved)
            fresh.append(u)
        self.pair_classes.append((lo, hi))
        self._cache.clear()

        logger.debug(
            f"🧱 Built (M{lo},M{hi}) entries",
            extra={"component": "nogo", "event": "pair_class_built", "unknowns": len(fresh)},
        )
        return fresh

    def resolve(self, values: Mapping[UnknownId, Scalar]) -> None:
        self.resolved.update(values)
        for key, entry in self.entries.items():
            if entry.linear:
                self.entries[key] = entry.substitute(values)
        self._cache.clear()

    def unknowns(self) -> List[UnknownId]:
        found = set()
        for entry in self.entries.values():
            found.update(entry.linear)
        return sorted(found, key=UnknownId.sort_key)

    def resolved_entry(self, left: Monomial, right: Monomial) -> Observable:
        return self.entry(left, right).resolved()


def _accumulate(acc: Dict[Monomial, Scalar], obs: Observable, factor: Scalar) -> None:
    for m, c in obs.coeffs.items():
        term = c * factor
        acc[m] = acc[m] + term if m in acc else term


def build_table(max_pair: Tuple[int, int], resolved: Optional[Mapping[UnknownId, Scalar]] = None) -> BracketTable:
    """
    Build entries in induction order (2,2), (2,3), (2,4), (3,3) up to and
    including `max_pair`. Unknowns stay symbolic unless `resolved` supplies them.
    """
    order = [(2, 2), (2, 3), (2, 4), (3, 3)]
    target = tuple(sorted(max_pair))
    if target not in order:
        raise ValueError(f"pair class {max_pair} is not part of the induction")
    table = BracketTable()
    if resolved:
        table.resolved.update(resolved)
    for pair in order[: order.index(target) + 1]:
        table.add_pair_class(*pair)
    return table
