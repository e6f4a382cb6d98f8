"""
Truncated star product on the mixed algebra. hbarc is kept formal; the
bidifferential operator acts on classical variables only, left factor
derivatives stay to the left.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product as cartesian
from math import comb, factorial
from typing import Iterator, Optional, Tuple

from semiquant.backend.engine.algebra.observable import Observable
from semiquant.backend.engine.algebra.products import multiply
from semiquant.backend.engine.algebra.scalar import GaussianRational, Scalar


def _compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _i_half_power(n: int) -> GaussianRational:
    value = GaussianRational(1)
    for _ in range(n):
        value = value * GaussianRational(0, Fraction(1, 2))
    return value


def _derive(a: Observable, var: str, index: int, times: int) -> Observable:
    for _ in range(times):
        if not a:
            break
        a = a.partial(var, index)
    return a


def star_term(a: Observable, b: Observable, n: int) -> Observable:
    """
    Coefficient of hbarc**n in a*b (star), without hbarc:
    (i/2)^n sum over n_1+...+n_c = n of prod_d X_d^{n_d} / n_d!,
    X^m = sum_j C(m,j) (-1)^j (dx^{m-j} dk^j A)(dk^{m-j} dx^j B).
    """
    a._check_dims(b)
    if n == 0:
        return multiply(a, b)
    n_c = a.dims.n_c
    result = Observable.zero(a.dims)
    if n_c == 0 or a.classical_degree() < n or b.classical_degree() < n:
        return result

    for split in _compositions(n, n_c):
        ranges = [range(m + 1) for m in split]
        for js in cartesian(*ranges):
            left, right = a, b
            weight = Fraction(1)
            for d, (m, j) in enumerate(zip(split, js), start=1):
                weight *= Fraction(comb(m, j) * (-1) ** j, factorial(m))
                left = _derive(_derive(left, "x", d, m - j), "k", d, j)
                right = _derive(_derive(right, "k", d, m - j), "x", d, j)
            if left and right:
                result = result + multiply(left, right).scale(weight)
    return result.scale(Scalar.of(_i_half_power(n)))


def star_multiply(a: Observable, b: Observable, order: Optional[int] = None) -> Observable:
    """sum_{n<=order} hbarc^n star_term(a, b, n); order=None keeps every nonzero term."""
    a._check_dims(b)
    if order is None:
        order = min(a.classical_degree(), b.classical_degree())
    result = Observable.zero(a.dims)
    for n in range(order + 1):
        term = star_term(a, b, n)
        if term:
            result = result + term.scale(Scalar.monomial(1, hbarc=n))
    return result


def star_commutator(a: Observable, b: Observable, order: Optional[int] = None) -> Observable:
    return star_multiply(a, b, order) - star_multiply(b, a, order)


def cn_coefficient(n: int, a: Observable, b: Observable) -> Observable:
    """Coefficient of hbarc**n in the star commutator, hbarc stripped. C_0 is the commutator."""
    return star_term(a, b, n) - star_term(b, a, n)


def graded_jacobi_residual(
    m: int,
    a: Observable,
    b: Observable,
    c: Observable,
    truncate: Optional[int] = None,
) -> Observable:
    """
    sum_{i+j=m} C_i(C_j(A,B),C) + cyclic. With `truncate`, coefficients C_n
    with n > truncate are treated as zero.
    """
    def coeff(n: int, x: Observable, y: Observable) -> Observable:
        if truncate is not None and n > truncate:
            return Observable.zero(x.dims)
        return cn_coefficient(n, x, y)

    result = Observable.zero(a.dims)
    for i in range(m + 1):
        j = m - i
        if truncate is not None and (i > truncate or j > truncate):
            continue
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = coeff(j, x, y)
            if inner:
                result = result + coeff(i, inner, z)
    return result


def star_associator_coefficient(a: Observable, b: Observable, c: Observable, n: int) -> Observable:
    """Coefficient of hbarc**n in (a*b)*c - a*(b*c) (star products)."""
    left = star_multiply(star_multiply(a, b, n), c, n)
    right = star_multiply(a, star_multiply(b, c, n), n)
    return (left - right).hbarc_coefficient(n)


