"""Linear systems over the Gaussian rationals and their exact solution."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Hashable, List, Mapping, Optional, Sequence, Tuple, Union

from semiquant.backend.engine.algebra import GaussianRational, Monomial, Scalar
from semiquant.backend.exceptions.errors import AlgebraError


@dataclass(frozen=True)
class Provenance:
    triple_class: str
    triple: Tuple[Monomial, Monomial, Monomial]
    monomial: Monomial


@dataclass(frozen=True)
class Equation:
    """sum_u coeffs[u] * u = rhs."""
    coeffs: Mapping[Hashable, GaussianRational]
    rhs: GaussianRational
    provenance: Optional[Provenance] = None


@dataclass
class LinearSystem:
    equations: List[Equation] = field(default_factory=list)
    declared: Tuple[Hashable, ...] = ()
    triples: int = 0

    @property
    def unknowns(self) -> Tuple[Hashable, ...]:
        found = dict.fromkeys(self.declared)
        for eq in self.equations:
            found.update(dict.fromkeys(eq.coeffs))
        return tuple(found)

    def __add__(self, other: "LinearSystem") -> "LinearSystem":
        declared = tuple(dict.fromkeys(self.declared + other.declared))
        return LinearSystem(self.equations + other.equations, declared, self.triples + other.triples)


class SolveOutcome(str, Enum):
    UNIQUE = "Unique"
    UNDERDETERMINED = "Underdetermined"
    INCONSISTENT = "Inconsistent"


@dataclass(frozen=True)
class Unique:
    assignment: Dict[Hashable, GaussianRational]
    rank: int
    outcome: SolveOutcome = SolveOutcome.UNIQUE


@dataclass(frozen=True)
class Underdetermined:
    free: Tuple[Hashable, ...]
    rank: int
    outcome: SolveOutcome = SolveOutcome.UNDERDETERMINED


@dataclass(frozen=True)
class Inconsistent:
    witness: Equation   # fully reduced row 0 = rhs, rhs != 0
    source: Equation    # the stacked row that reduced to it
    rank: int
    outcome: SolveOutcome = SolveOutcome.INCONSISTENT


Solution = Union[Unique, Underdetermined, Inconsistent]


def _default_key(u: Hashable):
    sort_key = getattr(u, "sort_key", None)
    return sort_key() if callable(sort_key) else u


def exact_solve(
    system: Union[LinearSystem, Sequence[Equation]],
    key: Optional[Callable[[Hashable], object]] = None,
) -> Solution:
    """
    Incremental Gaussian elimination. Equations are consumed in order; the
    pivot of each new row is its first unknown under `key`. The first row that
    reduces to 0 = c with c != 0 is returned as the inconsistency witness.
    """
    if not isinstance(system, LinearSystem):
        system = LinearSystem(list(system))
    key = key or _default_key

    pivots: Dict[Hashable, Tuple[Dict[Hashable, GaussianRational], GaussianRational]] = {}
    for eq in system.equations:
        row = {u: c for u, c in eq.coeffs.items() if c}
        rhs = eq.rhs
        while True:
            hits = [u for u in row if u in pivots]
            if not hits:
                break
            for u in hits:
                factor = row.get(u)
                if factor is None:
                    continue
                prow, prhs = pivots[u]
                for v, c in prow.items():
                    updated = row.get(v, GaussianRational(0)) - factor * c
                    if updated:
                        row[v] = updated
                    else:
                        row.pop(v, None)
                rhs = rhs - factor * prhs

        if not row:
            if rhs:
                return Inconsistent(
                    witness=Equation({}, rhs, eq.provenance),
                    source=eq,
                    rank=len(pivots),
                )
            continue

        pivot = min(row, key=key)
        inv = row[pivot].inverse()
        pivots[pivot] = ({v: c * inv for v, c in row.items()}, rhs * inv)

    free = [u for u in system.unknowns if u not in pivots]
    if free:
        return Underdetermined(free=tuple(sorted(free, key=key)), rank=len(pivots))

    values: Dict[Hashable, GaussianRational] = {}
    for u in reversed(list(pivots)):
        prow, prhs = pivots[u]
        total = prhs
        for v, c in prow.items():
            if v != u:
                total = total - c * values[v]
        values[u] = total
    return Unique(assignment={u: values[u] for u in sorted(values, key=key)}, rank=len(pivots))


def restore_hbar(value: GaussianRational, weight: int) -> Scalar:
    """
    A constant solved at hbar=1 for an entry of homogeneity weight `weight`
    (q, p, x, k weigh 1, hbar weighs 2) is value * hbar^(weight/2).
    """
    if weight % 2:
        if value:
            raise AlgebraError(
                f"odd-weight constant must vanish, got {value!r}", weight=weight
            )
        return Scalar()
    return Scalar.monomial(value, hbar=weight // 2)
