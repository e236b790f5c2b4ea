"""Exact arithmetic in the paraquaternion (split-quaternion) algebra.

Elements are ``x = x0 + x1*i1 + x2*i2 + x3*i3`` with rational coefficients
and the basis relations ``i1^2 = -1``, ``i2^2 = i3^2 = 1``, ``i1 i2 = i3``.
All values are immutable so every operation here is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Rational
from typing import Any, Tuple, TypeVar, Union

Scalar = Union[int, Fraction]
T = TypeVar("T")


class NotInvertible(ArithmeticError):
    """Raised when inverting an element whose norm square vanishes."""


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def to_scalar(value: Any) -> Fraction:
    """Coerce ``value`` to an exact :class:`~fractions.Fraction`.

    Floats are converted exactly (every finite float is a binary rational).
    Strings use the :class:`Fraction` grammar (``"3/2"``, ``"0.1"``).
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite scalar {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    # numpy scalars and friends
    if hasattr(value, "item"):
        return to_scalar(value.item())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def product_components(x: Tuple[T, T, T, T], y: Tuple[T, T, T, T]) -> Tuple[T, T, T, T]:
    """Multiply two component quadruples by the paraquaternion rule.

    Works for any component type closed under ``+``, ``-`` and ``*`` so the
    same table drives exact scalars and polynomial components.
    """
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    return (
        x0 * y0 - x1 * y1 + x2 * y2 + x3 * y3,
        x0 * y1 + x1 * y0 - x2 * y3 + x3 * y2,
        x0 * y2 - x1 * y3 + x2 * y0 + x3 * y1,
        x0 * y3 + x1 * y2 - x2 * y1 + x3 * y0,
    )


# ---------------------------------------------------------------------------
# Data classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Paraquaternion:
    """Element ``re + im1*i1 + im2*i2 + im3*i3`` of the paraquaternion algebra."""

    re: Fraction = Fraction(0)
    im1: Fraction = Fraction(0)
    im2: Fraction = Fraction(0)
    im3: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("re", "im1", "im2", "im3"):
            object.__setattr__(self, name, to_scalar(getattr(self, name)))

    @classmethod
    def from_components(cls, comps) -> "Paraquaternion":
        re, im1, im2, im3 = comps
        return cls(re, im1, im2, im3)

    @classmethod
    def basis(cls, index: int) -> "Paraquaternion":
        """Return ``1`` for ``index == 0`` and ``i_index`` otherwise."""
        if index not in (0, 1, 2, 3):
            raise ValueError(f"basis index must be in 0..3, got {index!r}")
        comps = [0, 0, 0, 0]
        comps[index] = 1
        return cls.from_components(comps)

    @property
    def components(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.re, self.im1, self.im2, self.im3)

    def is_zero(self) -> bool:
        return not any(self.components)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other: Any) -> "Paraquaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Paraquaternion(*(a + b for a, b in zip(self.components, other.components)))

    __radd__ = __add__

    def __neg__(self) -> "Paraquaternion":
        return Paraquaternion(-self.re, -self.im1, -self.im2, -self.im3)

    def __sub__(self, other: Any) -> "Paraquaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "Paraquaternion":
        return (-self) + other

    def __mul__(self, other: Any) -> "Paraquaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other: Any) -> "Paraquaternion":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(other, self)

    def __truediv__(self, other: Any) -> "Paraquaternion":
        if isinstance(other, Paraquaternion):
            return mul(self, inverse(other))
        s = to_scalar(other)
        return Paraquaternion(*(c / s for c in self.components))

    def __str__(self) -> str:
        from .text import format_paraquaternion

        return format_paraquaternion(self)


def _coerce(value: Any) -> Any:
    if isinstance(value, Paraquaternion):
        return value
    try:
        return Paraquaternion(to_scalar(value))
    except (TypeError, ValueError):
        return NotImplemented


ZERO = Paraquaternion()
ONE = Paraquaternion(1)
I1 = Paraquaternion.basis(1)
I2 = Paraquaternion.basis(2)
I3 = Paraquaternion.basis(3)


class NormKind(Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    ZERO = "zero"


@dataclass(frozen=True)
class NormValue:
    """Value of ``sqrt(x * conj(x))``.

    A negative norm square yields a point of the upper half plane, stored as
    ``magnitude`` with kind ``IMAGINARY`` (the value is ``magnitude * i``).
    """

    magnitude: float
    kind: NormKind

    def __post_init__(self) -> None:
        if self.magnitude < 0:
            raise ValueError(f"magnitude must be >= 0, got {self.magnitude!r}")
        if (self.kind is NormKind.ZERO) != (self.magnitude == 0):
            raise ValueError("kind ZERO iff magnitude == 0")

    def __str__(self) -> str:
        if self.kind is NormKind.IMAGINARY:
            return f"{self.magnitude!r}*i"
        return repr(self.magnitude)


@dataclass(frozen=True)
class ElementClass:
    """Independent classification flags; idempotents may be zero divisors too."""

    invertible: bool
    zero_divisor: bool
    nilpotent: bool
    idempotent: bool

    def labels(self) -> Tuple[str, ...]:
        return tuple(
            name
            for name in ("invertible", "zero_divisor", "nilpotent", "idempotent")
            if getattr(self, name)
        )


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def mul(x: Paraquaternion, y: Paraquaternion) -> Paraquaternion:
    return Paraquaternion.from_components(product_components(x.components, y.components))


def conjugate(x: Paraquaternion) -> Paraquaternion:
    return Paraquaternion(x.re, -x.im1, -x.im2, -x.im3)


def real_part(x: Paraquaternion) -> Fraction:
    return x.re


def imag_part(x: Paraquaternion) -> Paraquaternion:
    return Paraquaternion(0, x.im1, x.im2, x.im3)


def normsq(x: Paraquaternion) -> Fraction:
    """Return ``x * conj(x) = x0^2 + x1^2 - x2^2 - x3^2`` exactly."""
    return x.re * x.re + x.im1 * x.im1 - x.im2 * x.im2 - x.im3 * x.im3


def norm(x: Paraquaternion) -> NormValue:
    n = normsq(x)
    if n > 0:
        return NormValue(math.sqrt(n), NormKind.REAL)
    if n < 0:
        return NormValue(math.sqrt(-n), NormKind.IMAGINARY)
    return NormValue(0.0, NormKind.ZERO)


def inverse(x: Paraquaternion) -> Paraquaternion:
    n = normsq(x)
    if n == 0:
        raise NotInvertible(f"{x} has zero norm square")
    c = conjugate(x)
    return Paraquaternion(*(comp / n for comp in c.components))


def classify(x: Paraquaternion) -> ElementClass:
    n = normsq(x)
    square = mul(x, x)
    nonzero = not x.is_zero()
    return ElementClass(
        invertible=n != 0,
        zero_divisor=nonzero and n == 0,
        nilpotent=nonzero and square.is_zero(),
        idempotent=square == x,
    )


Matrix2 = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def to_matrix(x: Paraquaternion) -> Matrix2:
    """2x2 real matrix image with i1, i2, i3 sent to
    ``[[0,-1],[1,0]]``, ``[[0,1],[1,0]]`` and ``[[-1,0],[0,1]]``."""
    x0, x1, x2, x3 = x.components
    return ((x0 - x3, -x1 + x2), (x1 + x2, x0 + x3))


def matrix_det(m: Matrix2) -> Fraction:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]
