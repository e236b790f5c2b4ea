from __future__ import annotations
"""Strict coercion helpers for values read from JSON documents.

Unlike in-memory constructors these helpers never trust their input: each one
either returns a clean value or raises :class:`FormatError` naming the field.
A warning is logged whenever a lossy JSON float has to be read as an exact
rational so malformed data can be diagnosed from the log.
"""

import logging
import math
import re
from fractions import Fraction
from typing import Any

logger = logging.getLogger(__name__)

# Rational "p/q" or decimal "1.25", "-3e-2"; decimal exponents stay below 1000.
_RATIONAL = re.compile(r"[+-]?\d{1,400}(?:/\d{1,400})?")
_DECIMAL = re.compile(r"[+-]?(?:\d{1,400}\.\d{0,400}|\.\d{1,400}|\d{1,400})(?:[eE][+-]?\d{1,3})?")

MAX_EXPONENT = 10_000


class FormatError(ValueError):
    """A document does not follow one of the file formats."""


def to_fraction(value: Any, where: str = "value") -> Fraction:
    """Coerce a coefficient to an exact :class:`Fraction`.

    Strings use the rational or decimal grammar, integers pass through and
    finite floats are read through their shortest decimal ``repr``.
    """
    if isinstance(value, bool):
        raise FormatError(f"{where}: expected a number, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise FormatError(f"{where}: non-finite number {value!r}")
        logger.warning("to_fraction: %s given as float %r, reading it as decimal", where, value)
        return Fraction(repr(value))
    if isinstance(value, str):
        s = value.strip()
        if _RATIONAL.fullmatch(s) or _DECIMAL.fullmatch(s):
            try:
                return Fraction(s)
            except (ValueError, ZeroDivisionError):
                pass
    logger.warning("to_fraction: rejecting %s = %r", where, value)
    raise FormatError(f"{where}: expected a rational or decimal string, got {value!r}")


def to_exponent(value: Any, where: str = "exponent") -> int:
    """Coerce a monomial exponent to a nonnegative ``int``."""
    if isinstance(value, int) and not isinstance(value, bool) and 0 <= value <= MAX_EXPONENT:
        return value
    logger.warning("to_exponent: rejecting %s = %r", where, value)
    raise FormatError(f"{where}: expected an integer in 0..{MAX_EXPONENT}, got {value!r}")


def to_sign(value: Any, where: str = "epsilon") -> int:
    if isinstance(value, int) and not isinstance(value, bool) and value in (1, -1):
        return value
    logger.warning("to_sign: rejecting %s = %r", where, value)
    raise FormatError(f"{where}: expected +1 or -1, got {value!r}")


def require(mapping: Any, key: str, where: str) -> Any:
    if not isinstance(mapping, dict):
        raise FormatError(f"{where}: expected an object, got {type(mapping).__name__}")
    if key not in mapping:
        raise FormatError(f"{where}: missing key {key!r}")
    return mapping[key]
