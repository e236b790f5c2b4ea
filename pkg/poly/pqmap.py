"""Polynomial maps from R^4 into the paraquaternions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence, Tuple

import numpy as np

from algebra.paraquaternion import Paraquaternion, product_components
from .realpoly import RealPoly4


@dataclass(frozen=True)
class PQPolyMap:
    """``f = f0 + f1*i1 + f2*i2 + f3*i3`` with polynomial components."""

    f0: RealPoly4 = RealPoly4.zero()
    f1: RealPoly4 = RealPoly4.zero()
    f2: RealPoly4 = RealPoly4.zero()
    f3: RealPoly4 = RealPoly4.zero()

    def __post_init__(self) -> None:
        for name in ("f0", "f1", "f2", "f3"):
            value = getattr(self, name)
            if not isinstance(value, RealPoly4):
                object.__setattr__(self, name, RealPoly4.constant(value))

    @classmethod
    def from_components(cls, comps: Sequence[RealPoly4]) -> "PQPolyMap":
        f0, f1, f2, f3 = comps
        return cls(f0, f1, f2, f3)

    @property
    def components(self) -> Tuple[RealPoly4, RealPoly4, RealPoly4, RealPoly4]:
        return (self.f0, self.f1, self.f2, self.f3)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    @property
    def degree(self) -> int:
        return max(c.degree for c in self.components)

    def imaginary(self) -> "PQPolyMap":
        return PQPolyMap(RealPoly4.zero(), self.f1, self.f2, self.f3)

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other: "PQPolyMap") -> "PQPolyMap":
        if not isinstance(other, PQPolyMap):
            return NotImplemented
        return PQPolyMap.from_components([a + b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "PQPolyMap":
        return PQPolyMap.from_components([-c for c in self.components])

    def __sub__(self, other: "PQPolyMap") -> "PQPolyMap":
        if not isinstance(other, PQPolyMap):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> "PQPolyMap":
        if isinstance(other, PQPolyMap):
            return pointwise_mul(self, other)
        if isinstance(other, Paraquaternion):
            return pointwise_mul(self, constant_map(other))
        return NotImplemented

    def __rmul__(self, other: Any) -> "PQPolyMap":
        if isinstance(other, Paraquaternion):
            return pointwise_mul(constant_map(other), self)
        return NotImplemented

    def scale(self, value: Any) -> "PQPolyMap":
        """Multiply every component by a real scalar."""
        return PQPolyMap.from_components([c * value for c in self.components])


def constant_map(a: Paraquaternion) -> PQPolyMap:
    return PQPolyMap.from_components([RealPoly4.constant(c) for c in a.components])


def evaluate(f: PQPolyMap, x: Sequence[Any]) -> Paraquaternion:
    """Value of ``f`` at ``x``; exact for rational (and float) coordinates."""
    return Paraquaternion.from_components([c.evaluate(x) for c in f.components])


def evaluate_array(f: PQPolyMap, points: np.ndarray) -> np.ndarray:
    """Float components of ``f`` at each point, shape ``(n, 4)``."""
    return np.stack([c.evaluate_array(points) for c in f.components], axis=-1)


def partial(f: PQPolyMap, j: int) -> PQPolyMap:
    return PQPolyMap.from_components([c.partial(j) for c in f.components])


def pointwise_mul(f: PQPolyMap, g: PQPolyMap) -> PQPolyMap:
    """``(fg)(x) = f(x) g(x)``, expanded with the paraquaternion product rule."""
    return PQPolyMap.from_components(product_components(f.components, g.components))
