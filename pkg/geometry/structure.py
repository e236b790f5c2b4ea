"""Conformally flat almost epsilon-Kaehler structures built from regular maps.

On a canonical chart the metric is ``g = h G`` with ``G = diag(-1,-1,1,1)``,
and the fundamental form ``Omega(X, Y) = g(X, JY)`` has components that are
signed copies of ``f1, f2, f3``, where ``f = f1 i1 + f2 i2 + f3 i3``.
``d Omega = 0`` holds exactly when ``f`` is regular on the side matching the
chirality of ``J``; ``h`` is fixed by ``f1^2 - f2^2 - f3^2 = -eps h^2``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

from algebra.paraquaternion import I2, I3
from config import DEFAULTS
from poly.fueter import FueterTerm, fueter_sum
from poly.operators import RegularityVerdict, Side, check_regular
from poly.pqmap import PQPolyMap
from poly.realpoly import RealPoly4
from .box import Box

logger = logging.getLogger(__name__)

FLAT_DIAGONAL = np.array([-1.0, -1.0, 1.0, 1.0])
"""Diagonal of the flat Norden metric G, 0-based: G00 = G11 = -1, G22 = G33 = 1."""

TRIPLES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


class NonzeroRealPart(ValueError):
    """The structure map must be purely imaginary."""


class SignChange(ValueError):
    """``f1^2 - f2^2 - f3^2`` is not of one strict sign on the domain."""


class DegeneratePoint(ValueError):
    """``h^2 <= 0`` at an evaluation point."""


class NotRegular(ValueError):
    """The map is not regular on the side required by the chirality."""

    def __init__(self, verdict: RegularityVerdict) -> None:
        failing = "; ".join(verdict.failing_equations())
        super().__init__(f"map is not {verdict.side.value}-regular, failing: {failing}")
        self.verdict = verdict


# ---------------------------------------------------------------------------
# Chirality and the J / Omega component tables
# ---------------------------------------------------------------------------


class Chirality(Enum):
    LEFT_J = "left"
    RIGHT_J = "right"

    @property
    def side(self) -> Side:
        return Side.LEFT if self is Chirality.LEFT_J else Side.RIGHT

    @classmethod
    def parse(cls, text: str) -> "Chirality":
        return cls(str(text).strip().lower())


# Entry (i, j) of J is SIGN * (a, b, c)[SOURCE], SOURCE -1 meaning zero.
_J_SOURCE = np.array([
    [-1, 0, 1, 2],
    [0, -1, 2, 1],
    [1, 2, -1, 0],
    [2, 1, 0, -1],
])

J_SIGN = {
    Chirality.LEFT_J: np.array([
        [0, 1, 1, 1],
        [-1, 0, -1, 1],
        [1, -1, 0, -1],
        [1, 1, 1, 0],
    ]),
    Chirality.RIGHT_J: np.array([
        [0, 1, 1, 1],
        [-1, 0, 1, -1],
        [1, 1, 0, 1],
        [1, -1, -1, 0],
    ]),
}

# Omega_ij = sum_s g_is J^s_j = G_ii * h * J^i_j, and h*(a, b, c) = (f1, f2, f3).
OMEGA_SIGN = {ch: FLAT_DIAGONAL.astype(int)[:, None] * sign for ch, sign in J_SIGN.items()}


def j_pattern(abc: np.ndarray, chirality: Chirality) -> np.ndarray:
    """Fill the J matrix pattern from ``abc`` of shape ``(..., 3)``."""
    abc = np.asarray(abc, dtype=np.float64)
    padded = np.concatenate([abc, np.zeros(abc.shape[:-1] + (1,))], axis=-1)
    return J_SIGN[chirality] * padded[..., _J_SOURCE]


def omega_pattern(fvals: np.ndarray, chirality: Chirality) -> np.ndarray:
    fvals = np.asarray(fvals, dtype=np.float64)
    padded = np.concatenate([fvals, np.zeros(fvals.shape[:-1] + (1,))], axis=-1)
    return OMEGA_SIGN[chirality] * padded[..., _J_SOURCE]


# ---------------------------------------------------------------------------
# Exact (polynomial) parts of the structure
# ---------------------------------------------------------------------------


def _require_imaginary(f: PQPolyMap) -> None:
    if not f.f0.is_zero():
        raise NonzeroRealPart(f"real part must vanish, got f0 = {f.f0}")


def quadratic_form(f: PQPolyMap) -> RealPoly4:
    """``(f1)^2 - (f2)^2 - (f3)^2``."""
    return f.f1 * f.f1 - f.f2 * f.f2 - f.f3 * f.f3


def h_squared(f: PQPolyMap, epsilon: int) -> RealPoly4:
    _require_imaginary(f)
    if epsilon not in (1, -1):
        raise ValueError(f"epsilon must be +1 or -1, got {epsilon!r}")
    return quadratic_form(f) * (-epsilon)


def choose_epsilon(
    f: PQPolyMap,
    domain: Box,
    samples: int = DEFAULTS.epsilon_samples,
    seed: int = 0,
) -> int:
    """Pick epsilon so that ``h^2 > 0`` at every sampled point and box corner."""
    _require_imaginary(f)
    q = quadratic_form(f)
    points = domain.corners() + domain.sample(samples, seed)
    logger.debug("choose_epsilon: checking %d points", len(points))
    signs = set()
    for p in points:
        v = q.evaluate(p)
        if v == 0:
            raise SignChange(f"f1^2 - f2^2 - f3^2 vanishes at {tuple(str(c) for c in p)}")
        signs.add(v > 0)
        if len(signs) > 1:
            raise SignChange(f"f1^2 - f2^2 - f3^2 changes sign on box {domain}")
    return -1 if signs == {True} else 1


def omega_field(f: PQPolyMap, chirality: Chirality) -> Tuple[Tuple[RealPoly4, ...], ...]:
    """Exact components ``Omega_ij`` as a 4x4 antisymmetric nested tuple."""
    _require_imaginary(f)
    fs = (f.f1, f.f2, f.f3)
    zero = RealPoly4.zero()
    signs = OMEGA_SIGN[chirality]
    rows = []
    for i in range(4):
        row = []
        for j in range(4):
            src = _J_SOURCE[i, j]
            row.append(zero if src < 0 else fs[src] * int(signs[i, j]))
        rows.append(tuple(row))
    return tuple(rows)


def d_omega(f: PQPolyMap, chirality: Chirality) -> Dict[Tuple[int, int, int], RealPoly4]:
    """Independent components of ``d Omega``,
    ``(1/3)(d_i Omega_jk + d_j Omega_ki + d_k Omega_ij)`` for ``i < j < k``."""
    om = omega_field(f, chirality)
    out = {}
    for i, j, k in TRIPLES:
        total = om[j][k].partial(i) + om[k][i].partial(j) + om[i][j].partial(k)
        out[(i, j, k)] = total * Fraction(1, 3)
    return out


def domega_is_zero(f: PQPolyMap, chirality: Chirality) -> bool:
    return all(c.is_zero() for c in d_omega(f, chirality).values())


# ---------------------------------------------------------------------------
# The structure itself
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EpsilonStructure:
    """Almost epsilon-Kaehler structure ``(g = hG, J, Omega)`` on a box.

    Construction does not check the invariants so that damaged structures can
    still be inspected by :func:`geometry.verify.verify_structure`; call
    :meth:`validate` (done by :func:`build_structure` and the file loader).
    """

    chirality: Chirality
    epsilon: int
    f: PQPolyMap
    h_sq: RealPoly4
    domain: Box

    def validate(self, samples: int = DEFAULTS.epsilon_samples, seed: int = 0) -> None:
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")
        _require_imaginary(self.f)
        if self.h_sq != h_squared(self.f, self.epsilon):
            raise ValueError("h_sq is not -epsilon*((f1)^2 - (f2)^2 - (f3)^2)")
        verdict = check_regular(self.f, self.chirality.side)
        if not verdict.is_regular:
            raise NotRegular(verdict)
        for p in self.domain.corners() + self.domain.sample(samples, seed):
            if self.h_sq.evaluate(p) <= 0:
                raise DegeneratePoint(f"h^2 <= 0 at {tuple(str(c) for c in p)}")


def build_structure(
    f: PQPolyMap,
    chirality: Chirality,
    domain: Box,
    samples: int = DEFAULTS.epsilon_samples,
    seed: int = 0,
) -> EpsilonStructure:
    """Assemble the structure the regular map ``f`` defines on ``domain``."""
    _require_imaginary(f)
    verdict = check_regular(f, chirality.side)
    if not verdict.is_regular:
        raise NotRegular(verdict)
    epsilon = choose_epsilon(f, domain, samples=samples, seed=seed)
    structure = EpsilonStructure(
        chirality=chirality,
        epsilon=epsilon,
        f=f,
        h_sq=h_squared(f, epsilon),
        domain=domain,
    )
    logger.info(
        "built %s structure with epsilon=%d on box %s",
        chirality.value, epsilon, domain,
    )
    return structure


# ---------------------------------------------------------------------------
# The two worked examples
# ---------------------------------------------------------------------------


def example_terms(which: str) -> Tuple[FueterTerm, ...]:
    """Fueter terms of ``(z1 + z2 + z3)(-i2 + i3)`` (a) or ``(i2 - i3)(z1 + z2 + z3)`` (b)."""
    if which == "a":
        return tuple(FueterTerm((alpha,), I3 - I2, Side.LEFT) for alpha in (1, 2, 3))
    if which == "b":
        return tuple(FueterTerm((alpha,), I2 - I3, Side.RIGHT) for alpha in (1, 2, 3))
    raise ValueError(f"unknown example {which!r}, expected 'a' or 'b'")


def build_example(which: str) -> PQPolyMap:
    """The explicit maps

    (a) ``2x0 i1 + (x0 - x1 - x2 - x3) i2 + (x0 + x1 + x2 + x3) i3`` (left-regular),
    (b) ``2x0 i1 + (x0 + x1 + x2 + x3) i2 + (x0 - x1 - x2 - x3) i3`` (right-regular).
    """
    x0, x1, x2, x3 = (RealPoly4.variable(j) for j in range(4))
    s = x1 + x2 + x3
    plus, minus = x0 + s, x0 - s
    if which == "a":
        return PQPolyMap(RealPoly4.zero(), x0 * 2, minus, plus)
    if which == "b":
        return PQPolyMap(RealPoly4.zero(), x0 * 2, plus, minus)
    raise ValueError(f"unknown example {which!r}, expected 'a' or 'b'")


def example_from_fueter(which: str) -> PQPolyMap:
    return fueter_sum(example_terms(which))


def example_chirality(which: str) -> Chirality:
    return Chirality.LEFT_J if which == "a" else Chirality.RIGHT_J
