"""Canonical text for Observables and Scalars."""
from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from semiquant.backend.engine.algebra import Dims, GaussianRational, Monomial, Observable, Scalar


def _rational(value: Fraction) -> str:
    """Unsigned rational: `3` or `(3/4)`."""
    value = abs(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"({value.numerator}/{value.denominator})"


def _signed_rational(value: Fraction) -> str:
    text = _rational(value)
    return f"-{text}" if value < 0 else text


def _coefficient(value: GaussianRational) -> Tuple[int, str]:
    """
    Split a nonzero Gaussian rational into (sign, text). `text` is empty when
    the magnitude is 1 and real.
    """
    re, im = value.re, value.im
    if im == 0:
        sign = -1 if re < 0 else 1
        return sign, "" if abs(re) == 1 else _rational(re)
    if re == 0:
        sign = -1 if im < 0 else 1
        return sign, "i" if abs(im) == 1 else f"{_rational(im)}*i"
    imag = "i" if abs(im) == 1 else f"{_rational(im)}*i"
    op = "-" if im < 0 else "+"
    return 1, f"({_signed_rational(re)} {op} {imag})"


def _power(name: str, exponent: int) -> str:
    return name if exponent == 1 else f"{name}^{exponent}"


def _monomial_factors(m: Monomial, dims: Dims) -> List[str]:
    factors: List[str] = []
    for d in range(dims.n_q):
        suffix = str(d + 1) if dims.n_q > 1 else ""
        for offset, var in enumerate(("q", "p")):
            e = m[2 * d + offset]
            if e:
                factors.append(_power(var + suffix, e))
    base = 2 * dims.n_q
    for d in range(dims.n_c):
        suffix = str(d + 1) if dims.n_c > 1 else ""
        for offset, var in enumerate(("x", "k")):
            e = m[base + 2 * d + offset]
            if e:
                factors.append(_power(var + suffix, e))
    return factors


def _term_key(m: Monomial) -> Tuple:
    """Descending degree, then q-first lexicographic."""
    return (-sum(m), tuple(-e for e in m))


def _terms(coeffs: List[Tuple[Monomial, Scalar]], dims: Dims) -> List[Tuple[int, str]]:
    out: List[Tuple[int, str]] = []
    for m, scalar in sorted(coeffs, key=lambda item: _term_key(item[0])):
        factors = _monomial_factors(m, dims)
        for (hbar, hbarc), value in scalar.items():
            sign, coeff = _coefficient(value)
            parts = [coeff] if coeff else []
            if hbar:
                parts.append(_power("hbar", hbar))
            if hbarc:
                parts.append(_power("hbarc", hbarc))
            parts.extend(factors)
            out.append((sign, "*".join(parts) if parts else "1"))
    return out


def _join(terms: List[Tuple[int, str]]) -> str:
    if not terms:
        return "0"
    chunks: List[str] = []
    for idx, (sign, text) in enumerate(terms):
        if idx == 0:
            chunks.append(f"-{text}" if sign < 0 else text)
        else:
            chunks.append(f" - {text}" if sign < 0 else f" + {text}")
    return "".join(chunks)


def format_observable(a: Observable) -> str:
    """Deterministic canonical text; parse(format_observable(a)) == a."""
    return _join(_terms(list(a.coeffs.items()), a.dims))


def format_scalar(s: Scalar) -> str:
    dims = Dims(0, 0)
    return _join(_terms([((), s)], dims))
