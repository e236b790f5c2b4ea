"""Exact polynomials in the four coordinates ``x0..x3``.

A :class:`RealPoly4` is a sparse mapping from exponent quadruples to nonzero
rational coefficients.  Instances are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

import numpy as np

from algebra.paraquaternion import to_scalar

Exponent = Tuple[int, int, int, int]
TermSource = Union[Mapping[Exponent, Any], Iterable[Tuple[Exponent, Any]]]

NVARS = 4


def _check_exponent(exp: Any) -> Exponent:
    try:
        exp = tuple(exp)
    except TypeError:
        raise ValueError(f"exponent must be a quadruple, got {exp!r}") from None
    if len(exp) != NVARS:
        raise ValueError(f"exponent must have {NVARS} entries, got {exp!r}")
    for e in exp:
        if isinstance(e, bool) or not isinstance(e, (int, np.integer)) or e < 0:
            raise ValueError(f"exponents must be nonnegative integers, got {exp!r}")
    return tuple(int(e) for e in exp)  # type: ignore[return-value]


class RealPoly4:
    """Sparse multivariate polynomial with :class:`Fraction` coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: TermSource = ()) -> None:
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Exponent, Fraction] = {}
        for exp, coef in items:
            key = _check_exponent(exp)
            acc[key] = acc.get(key, Fraction(0)) + to_scalar(coef)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def _from_dict(cls, terms: Dict[Exponent, Fraction]) -> "RealPoly4":
        # trusted path: keys validated, no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zero(cls) -> "RealPoly4":
        return cls._from_dict({})

    @classmethod
    def constant(cls, value: Any) -> "RealPoly4":
        c = to_scalar(value)
        return cls._from_dict({(0, 0, 0, 0): c} if c else {})

    @classmethod
    def variable(cls, index: int) -> "RealPoly4":
        if index not in range(NVARS):
            raise ValueError(f"variable index must be in 0..3, got {index!r}")
        exp = [0, 0, 0, 0]
        exp[index] = 1
        return cls._from_dict({tuple(exp): Fraction(1)})  # type: ignore[dict-item]

    # -- inspection ------------------------------------------------------------
    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in canonical (lexicographic exponent) order."""
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RealPoly4):
            return self._terms == other._terms
        try:
            return self._terms == RealPoly4.constant(other)._terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other: Any) -> "RealPoly4":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return RealPoly4._from_dict(out)

    __radd__ = __add__

    def __neg__(self) -> "RealPoly4":
        return RealPoly4._from_dict({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Any) -> "RealPoly4":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> "RealPoly4":
        return (-self) + other

    def __mul__(self, other: Any) -> "RealPoly4":
        if not isinstance(other, RealPoly4):
            try:
                s = to_scalar(other)
            except (TypeError, ValueError):
                return NotImplemented
            if s == 0:
                return RealPoly4.zero()
            return RealPoly4._from_dict({e: c * s for e, c in self._terms.items()})
        out: Dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exp = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
                out[exp] = out.get(exp, 0) + ca * cb
        return RealPoly4._from_dict({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RealPoly4":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"power must be a nonnegative integer, got {n!r}")
        result = RealPoly4.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and evaluation -----------------------------------------------
    def partial(self, index: int) -> "RealPoly4":
        """Formal partial derivative with respect to ``x<index>``."""
        if index not in range(NVARS):
            raise ValueError(f"variable index must be in 0..3, got {index!r}")
        out: Dict[Exponent, Fraction] = {}
        for exp, c in self._terms.items():
            e = exp[index]
            if e == 0:
                continue
            lowered = list(exp)
            lowered[index] = e - 1
            out[tuple(lowered)] = c * e  # type: ignore[index]
        return RealPoly4._from_dict(out)

    def evaluate(self, point: Sequence[Any]) -> Fraction:
        """Exact value at ``point``; float coordinates are taken exactly."""
        if len(point) != NVARS:
            raise ValueError(f"point must have {NVARS} coordinates, got {len(point)}")
        xs = [to_scalar(v) for v in point]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for x, e in zip(xs, exp):
                if e:
                    term *= x**e
            total += term
        return total

    def evaluate_array(self, points: np.ndarray) -> np.ndarray:
        """Float64 values at each row of an ``(n, 4)`` array of points."""
        pts = np.asarray(points, dtype=np.float64)
        if pts.ndim == 1:
            return self.evaluate_array(pts[None, :])[0]
        if pts.shape[-1] != NVARS:
            raise ValueError(f"points must have shape (n, {NVARS}), got {pts.shape}")
        out = np.zeros(pts.shape[0], dtype=np.float64)
        for exp, c in self._terms.items():
            term = np.full(pts.shape[0], float(c))
            for j, e in enumerate(exp):
                if e:
                    term = term * pts[:, j] ** e
            out += term
        return out

    # -- text ------------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for exp, c in sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))):
            mono = "*".join(
                f"x{j}" if e == 1 else f"x{j}^{e}" for j, e in enumerate(exp) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self) -> str:
        return f"RealPoly4({str(self)!r})"


def _coerce(value: Any) -> Any:
    if isinstance(value, RealPoly4):
        return value
    try:
        return RealPoly4.constant(value)
    except (TypeError, ValueError):
        return NotImplemented


X0 = RealPoly4.variable(0)
X1 = RealPoly4.variable(1)
X2 = RealPoly4.variable(2)
X3 = RealPoly4.variable(3)
COORDS = (X0, X1, X2, X3)
