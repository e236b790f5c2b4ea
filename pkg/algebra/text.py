"""Text form ``a+b*i1+c*i2+d*i3`` of paraquaternions.

Coefficients are rational (``3/2``) or decimal (``0.25``) literals, omitted
terms are zero and whitespace is ignored.  Repeated terms accumulate.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .paraquaternion import Paraquaternion

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<num>\d+(?:\.\d+)?(?:/\d+)?)(?:\s*\*\s*(?P<unit>i[0-9]+))?"
    r"|(?P<bare>i[0-9]+))\s*"
)

_UNITS = {"i1": 1, "i2": 2, "i3": 3}


class ParseError(ValueError):
    """Malformed paraquaternion text; ``position`` indexes into the input."""

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def parse_paraquaternion(text: str) -> Paraquaternion:
    if not isinstance(text, str):
        raise ParseError("expected a string", repr(text), 0)
    comps = [Fraction(0)] * 4
    pos = 0
    n_terms = 0
    end = len(text)
    while pos < end:
        if not text[pos:].strip():
            break
        m = _TERM.match(text, pos)
        if m is None:
            raise ParseError("expected a term", text, pos)
        if n_terms and m.group("sign") is None:
            raise ParseError("expected '+' or '-'", text, pos)
        unit_group = "unit" if m.group("unit") else "bare"
        unit = m.group(unit_group)
        slot = 0
        if unit is not None:
            if unit not in _UNITS:
                raise ParseError(f"unknown basis element {unit!r}", text, m.start(unit_group))
            slot = _UNITS[unit]
        coef = Fraction(1)
        if m.group("num") is not None:
            try:
                coef = Fraction(m.group("num"))
            except (ZeroDivisionError, ValueError):
                raise ParseError("bad coefficient", text, m.start("num")) from None
        if m.group("sign") == "-":
            coef = -coef
        comps[slot] += coef
        n_terms += 1
        pos = m.end()
    if n_terms == 0:
        raise ParseError("empty paraquaternion", text, 0)
    return Paraquaternion.from_components(comps)


def format_paraquaternion(x: Paraquaternion) -> str:
    """Canonical printer; ``parse_paraquaternion`` inverts it exactly."""
    parts = []
    for slot, coef in enumerate(x.components):
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        if slot == 0:
            body = str(mag)
        elif mag == 1:
            body = f"i{slot}"
        else:
            body = f"{mag}*i{slot}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out
