"""Fueter polynomials and the finite sums that generate regular maps.

``zeta_a(x) = x^a - x^0 i_a`` is both left- and right-regular.  Finite sums
``sum zeta_a1 ... zeta_ak * c`` (coefficient on the right) are left-regular,
``sum c * zeta_a1 ... zeta_ak`` (coefficient on the left) right-regular.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Optional, Sequence, Tuple

from algebra.paraquaternion import Paraquaternion, to_scalar
from .operators import Side
from .pqmap import PQPolyMap, constant_map, pointwise_mul
from .realpoly import COORDS, RealPoly4

Center = Optional[Tuple[Any, Any, Any, Any]]


class MixedSides(ValueError):
    """Fueter terms with different coefficient sides cannot be summed."""


@dataclass(frozen=True)
class FueterTerm:
    """One product ``zeta_{indices[0]} ... zeta_{indices[-1]}`` with a coefficient.

    ``Side.LEFT`` places the coefficient on the right of the product (a
    left-regular term); ``Side.RIGHT`` places it on the left.
    """

    indices: Tuple[int, ...]
    coefficient: Paraquaternion
    side: Side = Side.LEFT

    def __post_init__(self) -> None:
        indices = tuple(self.indices)
        if not indices:
            raise ValueError("indices must be nonempty; use constant_map for constants")
        if any(isinstance(a, bool) or a not in (1, 2, 3) for a in indices):
            raise ValueError(f"indices must be in 1..3, got {indices!r}")
        object.__setattr__(self, "indices", tuple(int(a) for a in indices))
        if not isinstance(self.coefficient, Paraquaternion):
            object.__setattr__(self, "coefficient", Paraquaternion(self.coefficient))
        if not isinstance(self.side, Side):
            object.__setattr__(self, "side", Side(self.side))


def _normalize_center(center: Optional[Sequence[Any]]) -> Center:
    if center is None:
        return None
    if len(center) != 4:
        raise ValueError(f"center must have 4 coordinates, got {center!r}")
    c = tuple(to_scalar(v) for v in center)
    return None if not any(c) else c  # type: ignore[return-value]


def _check_alpha(alpha: Any) -> int:
    # bools would share cache entries with 1 and 0
    if isinstance(alpha, bool) or alpha not in (1, 2, 3):
        raise ValueError(f"alpha must be in 1..3, got {alpha!r}")
    return int(alpha)


def fueter_zeta(alpha: int, center: Optional[Sequence[Any]] = None) -> PQPolyMap:
    """``zeta_alpha(x - center) = (x^a - c^a) - (x^0 - c^0) i_a``."""
    return _zeta(_check_alpha(alpha), _normalize_center(center))


@lru_cache(maxsize=4096)
def _zeta(alpha: int, center: Center) -> PQPolyMap:
    xa = COORDS[alpha]
    x0 = COORDS[0]
    if center is not None:
        xa = xa - center[alpha]
        x0 = x0 - center[0]
    comps = [xa, RealPoly4.zero(), RealPoly4.zero(), RealPoly4.zero()]
    comps[alpha] = -x0
    return PQPolyMap.from_components(comps)


def zeta_product(indices: Sequence[int], center: Optional[Sequence[Any]] = None) -> PQPolyMap:
    """Left-to-right product ``zeta_{i1} zeta_{i2} ...``; index order matters."""
    return _zeta_product(tuple(_check_alpha(a) for a in indices), _normalize_center(center))


@lru_cache(maxsize=4096)
def _zeta_product(indices: Tuple[int, ...], center: Center) -> PQPolyMap:
    if not indices:
        raise ValueError("indices must be nonempty")
    if len(indices) == 1:
        return _zeta(indices[0], center)
    return pointwise_mul(_zeta_product(indices[:-1], center), _zeta(indices[-1], center))


def fueter_sum(terms: Iterable[FueterTerm], center: Optional[Sequence[Any]] = None) -> PQPolyMap:
    """Sum of Fueter terms; all terms must share one side."""
    terms = list(terms)
    sides = {t.side for t in terms}
    if len(sides) > 1:
        raise MixedSides("Fueter terms mix left and right coefficients")
    c = _normalize_center(center)
    total = PQPolyMap()
    for term in terms:
        prod = _zeta_product(term.indices, c)
        coef = constant_map(term.coefficient)
        if term.side is Side.LEFT:
            total = total + pointwise_mul(prod, coef)
        else:
            total = total + pointwise_mul(coef, prod)
    return total


def from_potential(f0: RealPoly4, potential: RealPoly4) -> PQPolyMap:
    """Map with real part ``f0`` and ``f^a = d_a F``; then ``D_L f = D_R f``."""
    return PQPolyMap(f0, potential.partial(1), potential.partial(2), potential.partial(3))
