"""Pointwise numeric values of ``g``, ``J`` and ``Omega``.

Polynomial quantities (``f``, ``h^2``, ``Omega``) are evaluated exactly and
only then rounded to float; ``h = sqrt(h^2)`` is the one inexact step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from algebra.paraquaternion import to_scalar
from poly.pqmap import PQPolyMap
from poly.realpoly import RealPoly4
from .structure import (
    FLAT_DIAGONAL,
    Chirality,
    DegeneratePoint,
    EpsilonStructure,
    j_pattern,
    omega_field,
)

MetricSampler = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class FrameSample:
    """Numeric structure tensors at one point."""

    point: np.ndarray
    g: np.ndarray
    J: np.ndarray
    Omega: np.ndarray
    h: float
    a: float
    b: float
    c: float


def _positive_h(h_sq: RealPoly4, point: Sequence[Any]) -> float:
    value = h_sq.evaluate(point)
    if value <= 0:
        raise DegeneratePoint(f"h^2 = {value} <= 0 at {tuple(float(to_scalar(x)) for x in point)}")
    return math.sqrt(value)


def metric_field(h_sq: RealPoly4, point: Sequence[Any]) -> np.ndarray:
    """``g = h * diag(-1, -1, 1, 1)`` at ``point``."""
    return _positive_h(h_sq, point) * np.diag(FLAT_DIAGONAL)


def j_field(f: PQPolyMap, h_sq: RealPoly4, chirality: Chirality, point: Sequence[Any]) -> np.ndarray:
    """``J^i_j`` at ``point`` with ``a, b, c = f1/h, f2/h, f3/h``."""
    h = _positive_h(h_sq, point)
    abc = np.array([float(c.evaluate(point)) for c in (f.f1, f.f2, f.f3)]) / h
    return j_pattern(abc, chirality)


def frame_at(structure: EpsilonStructure, point: Sequence[Any]) -> FrameSample:
    f = structure.f
    h = _positive_h(structure.h_sq, point)
    abc = np.array([float(c.evaluate(point)) for c in (f.f1, f.f2, f.f3)]) / h
    omega = omega_field(f, structure.chirality)
    return FrameSample(
        point=np.array([float(to_scalar(x)) for x in point]),
        g=h * np.diag(FLAT_DIAGONAL),
        J=j_pattern(abc, structure.chirality),
        Omega=np.array([[float(e.evaluate(point)) for e in row] for row in omega]),
        h=h,
        a=float(abc[0]),
        b=float(abc[1]),
        c=float(abc[2]),
    )


def structure_metric_sampler(structure: EpsilonStructure) -> MetricSampler:
    """Float sampler ``x -> h(x) G`` used by the curvature check."""
    h_sq = structure.h_sq
    flat = np.diag(FLAT_DIAGONAL)

    def sampler(x: np.ndarray) -> np.ndarray:
        value = float(h_sq.evaluate_array(np.asarray(x, dtype=np.float64)))
        if value <= 0:
            raise DegeneratePoint(f"h^2 = {value} <= 0 at {tuple(np.asarray(x))}")
        return math.sqrt(value) * flat

    return sampler
