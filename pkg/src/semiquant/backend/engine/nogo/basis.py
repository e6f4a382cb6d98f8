"""Degree-graded basis of the (1,1) mixed algebra and triple classes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Iterator, List, Tuple

from semiquant.backend.engine.algebra import Classification, Dims, Monomial, classify_monomial, grlex_key

NOGO_DIMS = Dims(1, 1)

_KIND_FILTER = {
    "M": (Classification.MIXED,),
    "Q": (Classification.QUANTUM,),
    "C": (Classification.CLASSICAL,),
    "A": (Classification.MIXED, Classification.QUANTUM, Classification.CLASSICAL, Classification.CNUMBER),
}


@lru_cache(maxsize=None)
def basis(n: int, kind: str = "A") -> Tuple[Monomial, ...]:
    """Degree-n basis monomials of one kind (M, Q, C or A), graded-lex order."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    allowed = _KIND_FILTER[kind]
    words = [
        m for m in cartesian(range(n + 1), repeat=4)
        if sum(m) == n and classify_monomial(m, NOGO_DIMS) in allowed
    ]
    return tuple(sorted(words, key=grlex_key))


def mixed_basis(n: int) -> List[Monomial]:
    return list(basis(n, "M"))


@dataclass(frozen=True)
class TripleClass:
    """Descriptor like <M3,M3,M2>: kind letter and degree per position."""
    slots: Tuple[Tuple[str, int], Tuple[str, int], Tuple[str, int]]

    @classmethod
    def parse(cls, text: str) -> "TripleClass":
        parts = [p.strip() for p in text.strip().strip("<>").split(",")]
        if len(parts) != 3:
            raise ValueError(f"triple class {text!r} needs three slots")
        slots = []
        for part in parts:
            kind, degree = part[:1].upper(), part[1:]
            if kind not in _KIND_FILTER or not degree.isdigit():
                raise ValueError(f"bad slot {part!r} in triple class {text!r}")
            slots.append((kind, int(degree)))
        return cls(tuple(slots))

    def __str__(self) -> str:
        return "<" + ",".join(f"{k}{d}" for k, d in self.slots) + ">"

    def triples(self) -> Iterator[Tuple[Monomial, Monomial, Monomial]]:
        """
        Concrete triples in graded-lex order. Slots with identical descriptors
        take strictly increasing basis indices (equal arguments make the
        cyclic sum vanish, swapped ones only flip its sign).
        """
        pools = [basis(d, k) for k, d in self.slots]
        twins = [
            (i, j) for i in range(3) for j in range(i + 1, 3) if self.slots[i] == self.slots[j]
        ]
        for idx in cartesian(*(range(len(p)) for p in pools)):
            if any(idx[i] >= idx[j] for i, j in twins):
                continue
            yield tuple(pools[s][idx[s]] for s in range(3))
