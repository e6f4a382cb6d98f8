"""Normal-ordered product and adjoint."""
from __future__ import annotations

from functools import lru_cache
from itertools import product as cartesian
from math import comb, factorial
from typing import Dict, List, Tuple

from semiquant.backend.engine.algebra.observable import Dims, Monomial, Observable
from semiquant.backend.engine.algebra.scalar import GaussianRational, Scalar

# (-i)^j
_MINUS_I_POWERS = (
    GaussianRational(1, 0),
    GaussianRational(0, -1),
    GaussianRational(-1, 0),
    GaussianRational(0, 1),
)


@lru_cache(maxsize=65536)
def _monomial_product(left: Monomial, right: Monomial, n_q: int) -> Tuple[Tuple[Monomial, Scalar], ...]:
    """
    Expand left*right into canonical words. Per quantum dof,
    p^s q^r = sum_j (-i hbar)^j j! C(s,j) C(r,j) q^(r-j) p^(s-j).
    """
    per_dof: List[List[Tuple[int, int]]] = []  # (j, integer weight)
    for d in range(n_q):
        s_left = left[2 * d + 1]
        r_right = right[2 * d]
        per_dof.append(
            [(j, factorial(j) * comb(s_left, j) * comb(r_right, j)) for j in range(min(s_left, r_right) + 1)]
        )

    summed = tuple(a + b for a, b in zip(left, right))
    out: Dict[Monomial, Scalar] = {}
    for choice in cartesian(*per_dof):
        total_j = 0
        weight = 1
        word = list(summed)
        for d, (j, w) in enumerate(choice):
            total_j += j
            weight *= w
            word[2 * d] -= j
            word[2 * d + 1] -= j
        coeff = Scalar.monomial(_MINUS_I_POWERS[total_j % 4] * weight, hbar=total_j)
        key = tuple(word)
        out[key] = out[key] + coeff if key in out else coeff
    return tuple(out.items())


def multiply(a: Observable, b: Observable) -> Observable:
    """Exact canonically ordered product a*b."""
    a._check_dims(b)
    n_q = a.dims.n_q
    acc: Dict[Monomial, Scalar] = {}
    for ma, ca in a.coeffs.items():
        for mb, cb in b.coeffs.items():
            cab = ca * cb
            for m, w in _monomial_product(ma, mb, n_q):
                term = cab * w
                acc[m] = acc[m] + term if m in acc else term
    return Observable({m: c for m, c in acc.items() if c}, a.dims)


def _split_word(m: Monomial, dims: Dims) -> Tuple[Monomial, Monomial]:
    """Return (p-part, q-and-classical part) of a canonical word."""
    p_part = [0] * dims.width
    rest = list(m)
    for d in range(dims.n_q):
        p_part[2 * d + 1] = m[2 * d + 1]
        rest[2 * d + 1] = 0
    return tuple(p_part), tuple(rest)


def adjoint(a: Observable) -> Observable:
    """
    Hermitian adjoint: the word q^r p^s x^t k^l is reversed to x^t k^l p^s q^r
    and re-ordered; coefficients are conjugated (hbar, hbarc real).
    """
    dims = a.dims
    result = Observable.zero(dims)
    for m, c in a.coeffs.items():
        p_part, rest = _split_word(m, dims)
        reordered = multiply(Observable.from_monomial(p_part, dims), Observable.from_monomial(rest, dims))
        result = result + reordered.scale(c.conjugate())
    return result
