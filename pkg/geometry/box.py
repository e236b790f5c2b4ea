"""Axis-aligned coordinate boxes and reproducible quasi-random sampling."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

import numpy as np
from scipy.stats import qmc

from algebra.paraquaternion import to_scalar

Point = Tuple[Fraction, Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Box:
    """Closed box ``lower[i] <= x^i <= upper[i]`` with rational endpoints."""

    lower: Point
    upper: Point

    def __post_init__(self) -> None:
        if len(self.lower) != 4 or len(self.upper) != 4:
            raise ValueError("box endpoints must have 4 coordinates")
        lo = tuple(to_scalar(v) for v in self.lower)
        hi = tuple(to_scalar(v) for v in self.upper)
        for i, (a, b) in enumerate(zip(lo, hi)):
            if a > b:
                raise ValueError(f"box axis {i}: lower {a} > upper {b}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @classmethod
    def from_intervals(cls, intervals: Sequence[Tuple[Any, Any]]) -> "Box":
        if len(intervals) != 4:
            raise ValueError(f"need 4 intervals, got {len(intervals)}")
        return cls(tuple(a for a, _ in intervals), tuple(b for _, b in intervals))  # type: ignore[arg-type]

    @classmethod
    def parse(cls, text: str) -> "Box":
        """Parse ``lo:hi,lo:hi,lo:hi,lo:hi``."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"box needs 4 comma-separated intervals, got {text!r}")
        intervals = []
        for part in parts:
            bounds = part.split(":")
            if len(bounds) != 2:
                raise ValueError(f"interval must look like lo:hi, got {part!r}")
            try:
                intervals.append((Fraction(bounds[0].strip()), Fraction(bounds[1].strip())))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"bad interval bound in {part!r}") from None
        return cls.from_intervals(intervals)

    def __str__(self) -> str:
        return ",".join(f"{a}:{b}" for a, b in zip(self.lower, self.upper))

    def center(self) -> Point:
        return tuple((a + b) / 2 for a, b in zip(self.lower, self.upper))  # type: ignore[return-value]

    def corners(self) -> List[Point]:
        return [tuple(c) for c in itertools.product(*zip(self.lower, self.upper))]  # type: ignore[misc]

    def contains(self, point: Sequence[Any]) -> bool:
        return all(a <= to_scalar(x) <= b for a, x, b in zip(self.lower, point, self.upper))

    # -- sampling ------------------------------------------------------------------
    def unit_samples(self, count: int, seed: int = 0) -> np.ndarray:
        """``count`` Halton points of the unit cube, skipping ``seed`` points."""
        if count < 0:
            raise ValueError(f"count must be >= 0, got {count}")
        if seed < 0:
            raise ValueError(f"seed must be >= 0, got {seed}")
        engine = qmc.Halton(d=4, scramble=False)
        if seed:
            engine.fast_forward(seed)
        return engine.random(count)

    def sample(self, count: int, seed: int = 0) -> List[Point]:
        """Exact rational sample points; the Halton floats are taken exactly."""
        out = []
        widths = [b - a for a, b in zip(self.lower, self.upper)]
        for row in self.unit_samples(count, seed):
            out.append(tuple(a + Fraction(float(u)) * w for a, u, w in zip(self.lower, row, widths)))
        return out  # type: ignore[return-value]

    def sample_array(self, count: int, seed: int = 0) -> np.ndarray:
        lo = np.array([float(a) for a in self.lower])
        hi = np.array([float(b) for b in self.upper])
        return lo + self.unit_samples(count, seed) * (hi - lo)

    def interior_sample_array(self, count: int, margin: float, seed: int = 0) -> np.ndarray:
        """``sample_array`` on the box shrunk by ``margin`` on every side.

        Axes narrower than ``2 * margin`` collapse to their midpoint.
        """
        lo = np.array([float(a) for a in self.lower])
        hi = np.array([float(b) for b in self.upper])
        inset = np.minimum(margin, (hi - lo) / 2)
        return lo + inset + self.unit_samples(count, seed) * (hi - lo - 2 * inset)
