"""
Observables of the mixed algebra: finite sums of canonically ordered words
q^r p^s x^t k^l with Scalar coefficients.

A monomial is a tuple of exponents laid out as
(r_1, s_1, ..., r_nq, s_nq, t_1, l_1, ..., t_nc, l_nc).
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, NamedTuple, Optional, Tuple, Union

from semiquant.backend.engine.algebra.scalar import GaussianRational, Scalar, ONE
from semiquant.backend.exceptions.errors import DimensionMismatchError, IndexRangeError

Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction, GaussianRational, Scalar]

VARIABLES = ("q", "p", "x", "k")


class Dims(NamedTuple):
    n_q: int = 1
    n_c: int = 1

    @property
    def width(self) -> int:
        return 2 * (self.n_q + self.n_c)


class Classification(str, Enum):
    CNUMBER = "cnumber"
    CLASSICAL = "classical"
    QUANTUM = "quantum"
    MIXED = "mixed"


def grlex_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Degree first, then larger exponents earlier in (q, p, x, k) order."""
    return sum(m), tuple(-e for e in m)


def variable_slot(var: str, index: int, dims: Dims) -> int:
    """Position of variable `var` (1-based dof index) in a monomial tuple."""
    if var in ("q", "p"):
        count, base = dims.n_q, 0
    elif var in ("x", "k"):
        count, base = dims.n_c, 2 * dims.n_q
    else:
        raise ValueError(f"unknown variable {var!r}")
    if not 1 <= index <= count:
        raise IndexRangeError(f"{var}{index} is out of range for dims {tuple(dims)}")
    return base + 2 * (index - 1) + (1 if var in ("p", "k") else 0)


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def classify_monomial(m: Monomial, dims: Dims) -> Classification:
    quantum = any(m[: 2 * dims.n_q])
    classical = any(m[2 * dims.n_q:])
    if quantum and classical:
        return Classification.MIXED
    if quantum:
        return Classification.QUANTUM
    if classical:
        return Classification.CLASSICAL
    return Classification.CNUMBER


class Observable:
    """Immutable element of the mixed algebra in canonical sparse form."""
    __slots__ = ("_coeffs", "_dims", "_hash")

    def __init__(self, coeffs: Optional[Mapping[Monomial, Coefficient]] = None, dims: Dims = Dims()):
        dims = Dims(*dims)
        clean: Dict[Monomial, Scalar] = {}
        if coeffs:
            for m, c in coeffs.items():
                m = tuple(m)
                if len(m) != dims.width:
                    raise DimensionMismatchError(
                        f"monomial {m} does not fit dims {tuple(dims)}", dims=tuple(dims)
                    )
                c = Scalar.of(c)
                if c:
                    clean[m] = c
        self._coeffs = clean
        self._dims = dims
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, coeffs: Dict[Monomial, Scalar], dims: Dims) -> "Observable":
        out = cls.__new__(cls)
        out._coeffs = coeffs
        out._dims = dims
        out._hash = None
        return out

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, dims: Dims = Dims()) -> "Observable":
        return cls._raw({}, Dims(*dims))

    @classmethod
    def constant(cls, value: Coefficient, dims: Dims = Dims()) -> "Observable":
        dims = Dims(*dims)
        return cls({(0,) * dims.width: value}, dims)

    @classmethod
    def from_monomial(cls, m: Monomial, dims: Dims = Dims(), coeff: Coefficient = 1) -> "Observable":
        return cls({tuple(m): coeff}, dims)

    @classmethod
    def variable(cls, var: str, index: int = 1, dims: Dims = Dims()) -> "Observable":
        dims = Dims(*dims)
        m = [0] * dims.width
        m[variable_slot(var, index, dims)] = 1
        return cls._raw({tuple(m): ONE}, dims)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    @property
    def coeffs(self) -> Mapping[Monomial, Scalar]:
        return self._coeffs

    @property
    def dims(self) -> Dims:
        return self._dims

    def coefficient(self, m: Monomial) -> Scalar:
        return self._coeffs.get(tuple(m), Scalar())

    def monomials(self) -> Iterator[Monomial]:
        return iter(sorted(self._coeffs, key=grlex_key))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        return max((sum(m) for m in self._coeffs), default=0)

    def classical_degree(self) -> int:
        cut = 2 * self._dims.n_q
        return max((sum(m[cut:]) for m in self._coeffs), default=0)

    def classification(self) -> Classification:
        kinds = {classify_monomial(m, self._dims) for m in self._coeffs}
        kinds.discard(Classification.CNUMBER)
        if not kinds:
            return Classification.CNUMBER
        if kinds == {Classification.CLASSICAL}:
            return Classification.CLASSICAL
        if kinds == {Classification.QUANTUM}:
            return Classification.QUANTUM
        return Classification.MIXED

    def is_cnumber(self) -> bool:
        return self.classification() is Classification.CNUMBER

    def is_classical(self) -> bool:
        return self.classification() in (Classification.CNUMBER, Classification.CLASSICAL)

    def is_quantum(self) -> bool:
        return self.classification() in (Classification.CNUMBER, Classification.QUANTUM)

    # ------------------------------------------------------------------
    # Linear structure
    # ------------------------------------------------------------------
    def _check_dims(self, other: "Observable") -> None:
        if self._dims != other._dims:
            raise DimensionMismatchError(
                f"dims {tuple(self._dims)} and {tuple(other._dims)} differ",
                left=tuple(self._dims),
                right=tuple(other._dims),
            )

    def __add__(self, other: "Observable") -> "Observable":
        if not isinstance(other, Observable):
            other = Observable.constant(other, self._dims)
        self._check_dims(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            total = out[m] + c if m in out else c
            if total:
                out[m] = total
            else:
                out.pop(m, None)
        return Observable._raw(out, self._dims)

    def __radd__(self, other) -> "Observable":
        if isinstance(other, int) and other == 0:
            return self
        return self + other

    def __neg__(self) -> "Observable":
        return Observable._raw({m: -c for m, c in self._coeffs.items()}, self._dims)

    def __sub__(self, other: "Observable") -> "Observable":
        if not isinstance(other, Observable):
            other = Observable.constant(other, self._dims)
        return self + (-other)

    def __rsub__(self, other) -> "Observable":
        return (-self) + other

    def scale(self, factor: Coefficient) -> "Observable":
        factor = Scalar.of(factor)
        if not factor:
            return Observable.zero(self._dims)
        out = {}
        for m, c in self._coeffs.items():
            prod = c * factor
            if prod:
                out[m] = prod
        return Observable._raw(out, self._dims)

    def __mul__(self, other) -> "Observable":
        if isinstance(other, Observable):
            from semiquant.backend.engine.algebra.products import multiply
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> "Observable":
        return self.scale(other)

    def __pow__(self, n: int) -> "Observable":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = Observable.constant(1, self._dims)
        for _ in range(n):
            result = result * self
        return result

    def map_coeffs(self, fn: Callable[[Scalar], Scalar]) -> "Observable":
        return Observable({m: fn(c) for m, c in self._coeffs.items()}, self._dims)

    def substitute_hbarc_with_hbar(self) -> "Observable":
        return self.map_coeffs(Scalar.substitute_hbarc_with_hbar)

    def hbarc_coefficient(self, n: int) -> "Observable":
        return self.map_coeffs(lambda c: c.hbarc_coefficient(n))

    def truncate_hbarc(self, order: int) -> "Observable":
        return self.map_coeffs(lambda c: c.truncate_hbarc(order))

    def divide_by_i_hbar(self) -> "Observable":
        return Observable._raw({m: c.divide_by_i_hbar() for m, c in self._coeffs.items()}, self._dims)

    def evaluate_hbar(self, hbar: Union[int, Fraction] = 1) -> Dict[Monomial, GaussianRational]:
        """Coefficients with hbar (and hbarc) set to a number."""
        out = {}
        for m, c in self._coeffs.items():
            value = c.evaluate(hbar, hbar)
            if value:
                out[m] = value
        return out

    # ------------------------------------------------------------------
    # Formal derivatives on canonical words
    # ------------------------------------------------------------------
    def partial(self, var: str, index: int = 1) -> "Observable":
        slot = variable_slot(var, index, self._dims)
        out: Dict[Monomial, Scalar] = {}
        for m, c in self._coeffs.items():
            e = m[slot]
            if e == 0:
                continue
            lowered = m[:slot] + (e - 1,) + m[slot + 1:]
            out[lowered] = c * e
        return Observable._raw(out, self._dims)

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Observable):
            if isinstance(other, (int, Fraction, GaussianRational, Scalar)):
                return self == Observable.constant(other, self._dims)
            return NotImplemented
        return self._dims == other._dims and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._dims, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        try:
            from semiquant.backend.engine.exprio import format_observable
            return f"Observable({format_observable(self)!r})"
        except Exception:
            return f"Observable({self._coeffs!r}, dims={tuple(self._dims)})"


def variables(dims: Dims = Dims()) -> Dict[str, Observable]:
    """Convenience map {'q1': q_1, ..., 'k1': k_1, ...}; unindexed names alias index 1."""
    dims = Dims(*dims)
    out: Dict[str, Observable] = {}
    for var in VARIABLES:
        count = dims.n_q if var in ("q", "p") else dims.n_c
        for idx in range(1, count + 1):
            out[f"{var}{idx}"] = Observable.variable(var, idx, dims)
        if count:
            out[var] = out[f"{var}1"]
    return out
