"""Plane-wave structure functions F(u, v) and their Jacobi residuals."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from semiquant.backend.core.constants import SINE_H_SMALL


@dataclass(frozen=True)
class WaveVector:
    q: float
    p: float
    x: float
    k: float

    def __post_init__(self):
        if not np.all(np.isfinite([self.q, self.p, self.x, self.k])):
            raise ValueError("wave vector components must be finite")

    def __add__(self, other: "WaveVector") -> "WaveVector":
        return WaveVector(self.q + other.q, self.p + other.p, self.x + other.x, self.k + other.k)

    def as_array(self) -> np.ndarray:
        return np.array([self.q, self.p, self.x, self.k], dtype=float)

    @classmethod
    def from_array(cls, values) -> "WaveVector":
        q, p, x, k = (float(v) for v in values)
        return cls(q, p, x, k)


class FFamily(str, Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"
    STANDARD_S = "standard_s"
    QUANTUM_QUANTUM = "quantum_quantum"
    SINE_FAMILY = "sine_family"
    LINEAR = "linear"


@dataclass(frozen=True)
class FKind:
    family: FFamily
    h: float = 0.0

    @classmethod
    def sine(cls, h: float) -> "FKind":
        """sin(h(u+v))/h; tiny h collapses to the linear member."""
        if abs(h) < SINE_H_SMALL:
            return cls(FFamily.LINEAR)
        return cls(FFamily.SINE_FAMILY, float(h))

    @classmethod
    def parse(cls, text: str) -> "FKind":
        """`quantum`, `standard_s`, `sine_family:0.5`, ..."""
        name, _, h = text.partition(":")
        family = FFamily(name.strip().lower())
        if family is FFamily.SINE_FAMILY:
            return cls.sine(float(h) if h else 1.0)
        return cls(family)

    def __str__(self) -> str:
        if self.family is FFamily.SINE_FAMILY:
            return f"{self.family.value}:{self.h:g}"
        return self.family.value


CLASSICAL = FKind(FFamily.CLASSICAL)
QUANTUM = FKind(FFamily.QUANTUM)
STANDARD_S = FKind(FFamily.STANDARD_S)
QUANTUM_QUANTUM = FKind(FFamily.QUANTUM_QUANTUM)
LINEAR = FKind(FFamily.LINEAR)
ALL_FIXED_KINDS = (CLASSICAL, QUANTUM, STANDARD_S, QUANTUM_QUANTUM, LINEAR)


def uv(r: WaveVector, s: WaveVector) -> Tuple[float, float]:
    """u = p_r q_s - q_r p_s, v = k_r x_s - x_r k_s."""
    return r.p * s.q - r.q * s.p, r.k * s.x - r.x * s.k


def f_eval(kind: FKind, u, v):
    """Works on scalars and numpy arrays alike."""
    family = kind.family
    if family is FFamily.CLASSICAL:
        return v + 0.0 * u
    if family is FFamily.QUANTUM:
        return 2.0 * np.sin(u / 2.0) + 0.0 * v
    if family is FFamily.STANDARD_S:
        return 2.0 * np.sin(u / 2.0) + v * np.cos(u / 2.0)
    if family is FFamily.QUANTUM_QUANTUM:
        return 2.0 * np.sin(u / 2.0 + v / 2.0)
    if family is FFamily.SINE_FAMILY:
        if abs(kind.h) < SINE_H_SMALL:
            return u + v
        return np.sin(kind.h * (u + v)) / kind.h
    return u + v


def structure_constant(kind: FKind, r: WaveVector, s: WaveVector) -> float:
    return float(f_eval(kind, *uv(r, s)))


def jacobi_residual(kind: FKind, r: WaveVector, s: WaveVector, t: WaveVector) -> float:
    """F_rs F_{r+s,t} + F_st F_{s+t,r} + F_tr F_{t+r,s}."""
    F = lambda a, b: structure_constant(kind, a, b)  # noqa: E731
    return F(r, s) * F(r + s, t) + F(s, t) * F(s + t, r) + F(t, r) * F(t + r, s)


def derivative_normalization(kind: FKind) -> Tuple[float, float]:
    """(dF/du, dF/dv) at the origin."""
    family = kind.family
    if family is FFamily.CLASSICAL:
        return 0.0, 1.0
    if family is FFamily.QUANTUM:
        return 1.0, 0.0
    return 1.0, 1.0
