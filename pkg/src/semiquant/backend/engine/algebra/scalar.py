"""
Exact coefficient ring: Gaussian rationals tensored with polynomials in the
formal symbols hbar and hbarc.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from semiquant.backend.exceptions.errors import AlgebraError

ScalarKey = Tuple[int, int]  # (power of hbar, power of hbarc)
Number = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, value: Number) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        return cls(value, 0)

    def __add__(self, other: Number) -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Number) -> "GaussianRational":
        return GaussianRational.of(other) - self

    def __mul__(self, other: Number) -> "GaussianRational":
        other = GaussianRational.of(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __truediv__(self, other: Number) -> "GaussianRational":
        return self * GaussianRational.of(other).inverse()

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        # real values hash like the Fraction they equal
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)


class Scalar:
    """
    Sparse map (hbar power, hbarc power) -> GaussianRational.
    Zero values are never stored, so equality is syntactic.
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[ScalarKey, Number]] = None):
        clean: Dict[ScalarKey, GaussianRational] = {}
        if terms:
            for key, value in terms.items():
                value = GaussianRational.of(value)
                if not value.is_zero():
                    clean[key] = value
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: Dict[ScalarKey, GaussianRational]) -> "Scalar":
        out = cls.__new__(cls)
        out._terms = terms
        out._hash = None
        return out

    @classmethod
    def of(cls, value: Union[Number, "Scalar"]) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, value: Number = 1, hbar: int = 0, hbarc: int = 0) -> "Scalar":
        return cls({(hbar, hbarc): value})

    @property
    def terms(self) -> Mapping[ScalarKey, GaussianRational]:
        return self._terms

    def items(self) -> Iterator[Tuple[ScalarKey, GaussianRational]]:
        """Terms with hbar powers descending, then hbarc powers descending."""
        for key in sorted(self._terms, key=lambda k: (-k[0], -k[1])):
            yield key, self._terms[key]

    def coefficient(self, hbar: int = 0, hbarc: int = 0) -> GaussianRational:
        return self._terms.get((hbar, hbarc), GR_ZERO)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------
    def __add__(self, other: Union[Number, "Scalar"]) -> "Scalar":
        other = Scalar.of(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for key, value in other._terms.items():
            total = out.get(key)
            total = value if total is None else total + value
            if total.is_zero():
                out.pop(key, None)
            else:
                out[key] = total
        return Scalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Union[Number, "Scalar"]) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other: Union[Number, "Scalar"]) -> "Scalar":
        return Scalar.of(other) - self

    def __mul__(self, other: Union[Number, "Scalar"]) -> "Scalar":
        other = Scalar.of(other)
        if not self._terms or not other._terms:
            return ZERO
        out: Dict[ScalarKey, GaussianRational] = {}
        for (a1, b1), v1 in self._terms.items():
            for (a2, b2), v2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                prod = v1 * v2
                prev = out.get(key)
                out[key] = prod if prev is None else prev + prod
        return Scalar._raw({k: v for k, v in out.items() if not v.is_zero()})

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar._raw({k: v.conjugate() for k, v in self._terms.items()})

    # ------------------------------------------------------------------
    # hbar bookkeeping
    # ------------------------------------------------------------------
    def substitute_hbarc_with_hbar(self) -> "Scalar":
        out = ZERO
        for (a, b), v in self._terms.items():
            out = out + Scalar._raw({(a + b, 0): v})
        return out

    def divide_by_hbar(self) -> "Scalar":
        if any(a == 0 for a, _ in self._terms):
            raise AlgebraError(f"scalar {self!r} is not divisible by hbar")
        return Scalar._raw({(a - 1, b): v for (a, b), v in self._terms.items()})

    def divide_by_i_hbar(self) -> "Scalar":
        return self.divide_by_hbar() * Scalar.of(-GR_I)

    def hbarc_coefficient(self, n: int) -> "Scalar":
        """Coefficient of hbarc**n, hbarc stripped."""
        return Scalar._raw({(a, 0): v for (a, b), v in self._terms.items() if b == n})

    def truncate_hbarc(self, order: int) -> "Scalar":
        return Scalar._raw({k: v for k, v in self._terms.items() if k[1] <= order})

    def evaluate(self, hbar: Union[int, Fraction] = 1, hbarc: Union[int, Fraction] = 1) -> GaussianRational:
        total = GR_ZERO
        for (a, b), v in self._terms.items():
            total = total + v * (Fraction(hbar) ** a * Fraction(hbarc) ** b)
        return total

    def to_complex(self, hbar: float = 1.0, hbarc: float = 1.0) -> complex:
        return sum((complex(v) * hbar ** a * hbarc ** b for (a, b), v in self._terms.items()), 0j)

    def max_hbarc_power(self) -> int:
        return max((b for _, b in self._terms), default=0)

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif set(self._terms) == {(0, 0)}:
                # constants hash like the number they equal
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v.re}+{v.im}i" for k, v in self.items())
        return f"Scalar({{{inner}}})"


ZERO = Scalar()
ONE = Scalar.monomial(1)
I = Scalar.monomial(GR_I)
HBAR = Scalar.monomial(1, hbar=1)
HBARC = Scalar.monomial(1, hbarc=1)
