"""Cauchy-Fueter type operators ``D_L`` and ``D_R`` and regularity checks.

``D_L f = d0 f + sum_a i_a (da f)`` applies the basis units on the left of
the partial derivatives, ``D_R f = d0 f + sum_a (da f) i_a`` on the right.
A map is left-regular when ``D_L f = 0`` and right-regular when ``D_R f = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .pqmap import PQPolyMap
from .realpoly import RealPoly4


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


EQUATION_LABELS = {
    Side.LEFT: (
        "d0f0 - d1f1 + d2f2 + d3f3 = 0",
        "d1f0 + d0f1 + d3f2 - d2f3 = 0",
        "d2f0 + d3f1 + d0f2 - d1f3 = 0",
        "d3f0 - d2f1 + d1f2 + d0f3 = 0",
    ),
    Side.RIGHT: (
        "d0f0 - d1f1 + d2f2 + d3f3 = 0",
        "d1f0 + d0f1 - d3f2 + d2f3 = 0",
        "d2f0 - d3f1 + d0f2 + d1f3 = 0",
        "d3f0 + d2f1 - d1f2 + d0f3 = 0",
    ),
}
"""Component equations of ``D f = 0`` in the order re, i1, i2, i3."""


def _jacobian(f: PQPolyMap) -> Tuple[Tuple[RealPoly4, ...], ...]:
    # d[j][k] = partial_j of component f^k
    return tuple(tuple(c.partial(j) for c in f.components) for j in range(4))


def regularity_equations(f: PQPolyMap, side: Side) -> Tuple[RealPoly4, RealPoly4, RealPoly4, RealPoly4]:
    """Left-hand sides of the four scalar equations of ``D f = 0``."""
    d = _jacobian(f)
    real = d[0][0] - d[1][1] + d[2][2] + d[3][3]
    if side is Side.LEFT:
        return (
            real,
            d[1][0] + d[0][1] + d[3][2] - d[2][3],
            d[2][0] + d[3][1] + d[0][2] - d[1][3],
            d[3][0] - d[2][1] + d[1][2] + d[0][3],
        )
    return (
        real,
        d[1][0] + d[0][1] - d[3][2] + d[2][3],
        d[2][0] - d[3][1] + d[0][2] + d[1][3],
        d[3][0] + d[2][1] - d[1][2] + d[0][3],
    )


def d_left(f: PQPolyMap) -> PQPolyMap:
    return PQPolyMap.from_components(regularity_equations(f, Side.LEFT))


def d_right(f: PQPolyMap) -> PQPolyMap:
    return PQPolyMap.from_components(regularity_equations(f, Side.RIGHT))


def apply_operator(f: PQPolyMap, side: Side) -> PQPolyMap:
    return d_left(f) if side is Side.LEFT else d_right(f)


def curl_conditions(f: PQPolyMap) -> Tuple[RealPoly4, RealPoly4, RealPoly4]:
    """The three expressions whose vanishing is equivalent to ``D_L f = D_R f``."""
    d = _jacobian(f)
    return (
        d[3][2] - d[2][3],
        d[3][1] - d[1][3],
        d[1][2] - d[2][1],
    )


def lr_difference(f: PQPolyMap) -> PQPolyMap:
    """``D_L f - D_R f``; its real part is always zero."""
    c1, c2, c3 = curl_conditions(f)
    return PQPolyMap(RealPoly4.zero(), c1 * 2, c2 * 2, c3 * 2)


@dataclass(frozen=True)
class RegularityVerdict:
    """Outcome of a regularity check; ``residual`` is ``D f`` itself."""

    side: Side
    residual: PQPolyMap

    @property
    def is_regular(self) -> bool:
        return self.residual.is_zero()

    def failing_equations(self) -> Tuple[str, ...]:
        labels = EQUATION_LABELS[self.side]
        return tuple(
            label for label, comp in zip(labels, self.residual.components) if not comp.is_zero()
        )

    def __bool__(self) -> bool:
        return self.is_regular


def is_left_regular(f: PQPolyMap) -> RegularityVerdict:
    return RegularityVerdict(Side.LEFT, d_left(f))


def is_right_regular(f: PQPolyMap) -> RegularityVerdict:
    return RegularityVerdict(Side.RIGHT, d_right(f))


def check_regular(f: PQPolyMap, side: Side) -> RegularityVerdict:
    return is_left_regular(f) if side is Side.LEFT else is_right_regular(f)


def derived_regular(f: PQPolyMap, side: Side) -> PQPolyMap:
    """Map ``f`` regular on ``side`` to a ``side``-regular map with zero real part.

    For a left-regular ``f`` this is ``D_R f``; for a right-regular one
    ``D_L f``.  The operators commute, so the result stays regular, and its
    real part equals that of ``D f = 0``.  The input is not checked.
    """
    return apply_operator(f, side.other)
