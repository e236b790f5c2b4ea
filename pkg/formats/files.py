"""JSON documents for polynomial maps, structures and verification reports.

Polynomial map::

    {"f0": [{"coef": "3/2", "exp": [1, 0, 0, 0]}, ...], "f1": [...], "f2": [...], "f3": [...]}

Terms are written in lexicographic exponent order with canonical rational
coefficients, so a document read and written again is byte-identical.

Structure::

    {"chirality": "left", "epsilon": -1,
     "domain": {"lower": ["2", "0", "0", "0"], "upper": ["3", "1/10", "1/10", "1/10"]},
     "f": <polynomial map>, "h_sq": [<terms>]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from geometry.box import Box
from geometry.structure import Chirality, EpsilonStructure
from geometry.verify import StructureReport
from poly.pqmap import PQPolyMap
from poly.realpoly import RealPoly4
from .safe_parse import FormatError, require, to_exponent, to_fraction, to_sign

PathLike = Union[str, Path]
COMPONENTS = ("f0", "f1", "f2", "f3")


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def read_document(path: PathLike) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not UTF-8 text ({exc.reason})") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from None
    except RecursionError:
        raise FormatError(f"{path}: document nested too deeply") from None


def write_text(path: PathLike, text: str) -> None:
    p = Path(path)
    if p.parent and not p.parent.exists():
        p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def poly_to_terms(p: RealPoly4) -> List[Dict[str, Any]]:
    return [{"coef": str(c), "exp": list(exp)} for exp, c in p.items()]


def poly_from_terms(data: Any, where: str) -> RealPoly4:
    if not isinstance(data, list):
        raise FormatError(f"{where}: expected a list of terms, got {type(data).__name__}")
    terms = []
    seen = set()
    for n, term in enumerate(data):
        here = f"{where}[{n}]"
        coef = to_fraction(require(term, "coef", here), f"{here}.coef")
        exp = require(term, "exp", here)
        if not isinstance(exp, list) or len(exp) != 4:
            raise FormatError(f"{here}.exp: expected a list of 4 integers, got {exp!r}")
        key = tuple(to_exponent(e, f"{here}.exp") for e in exp)
        if key in seen:
            raise FormatError(f"{here}: duplicate exponent {list(key)}")
        seen.add(key)
        terms.append((key, coef))
    return RealPoly4(terms)


def pmap_to_dict(f: PQPolyMap) -> Dict[str, Any]:
    return {name: poly_to_terms(c) for name, c in zip(COMPONENTS, f.components)}


def pmap_from_dict(data: Any, where: str = "map") -> PQPolyMap:
    if not isinstance(data, dict):
        raise FormatError(f"{where}: expected an object with keys f0..f3")
    extra = set(data) - set(COMPONENTS)
    if extra:
        raise FormatError(f"{where}: unexpected keys {sorted(extra)}")
    return PQPolyMap.from_components(
        [poly_from_terms(require(data, name, where), f"{where}.{name}") for name in COMPONENTS]
    )


def dumps_pmap(f: PQPolyMap) -> str:
    return dumps(pmap_to_dict(f))


def load_pmap(path: PathLike) -> PQPolyMap:
    return pmap_from_dict(read_document(path), str(path))


def save_pmap(f: PQPolyMap, path: PathLike) -> None:
    write_text(path, dumps_pmap(f))


# ---------------------------------------------------------------------------
# Structures
# ---------------------------------------------------------------------------


def structure_to_dict(s: EpsilonStructure) -> Dict[str, Any]:
    return {
        "chirality": s.chirality.value,
        "epsilon": s.epsilon,
        "domain": {
            "lower": [str(v) for v in s.domain.lower],
            "upper": [str(v) for v in s.domain.upper],
        },
        "f": pmap_to_dict(s.f),
        "h_sq": poly_to_terms(s.h_sq),
    }


def structure_from_dict(data: Any, where: str = "structure") -> EpsilonStructure:
    chir = require(data, "chirality", where)
    try:
        chirality = Chirality.parse(chir) if isinstance(chir, str) else None
    except ValueError:
        chirality = None
    if chirality is None:
        raise FormatError(f"{where}.chirality: expected 'left' or 'right', got {chir!r}")
    epsilon = to_sign(require(data, "epsilon", where), f"{where}.epsilon")
    domain = require(data, "domain", where)
    bounds = []
    for key in ("lower", "upper"):
        values = require(domain, key, f"{where}.domain")
        if not isinstance(values, list) or len(values) != 4:
            raise FormatError(f"{where}.domain.{key}: expected 4 coordinates")
        bounds.append(tuple(to_fraction(v, f"{where}.domain.{key}") for v in values))
    try:
        box = Box(bounds[0], bounds[1])
    except ValueError as exc:
        raise FormatError(f"{where}.domain: {exc}") from None
    return EpsilonStructure(
        chirality=chirality,
        epsilon=epsilon,
        f=pmap_from_dict(require(data, "f", where), f"{where}.f"),
        h_sq=poly_from_terms(require(data, "h_sq", where), f"{where}.h_sq"),
        domain=box,
    )


def dumps_structure(s: EpsilonStructure) -> str:
    return dumps(structure_to_dict(s))


def load_structure(path: PathLike, validate: bool = True) -> EpsilonStructure:
    """Read a structure file; by default its invariants are checked too.

    Invariant violations (wrong ``h_sq``, non-regular ``f``) surface as the
    geometry exceptions so callers can tell them from syntax errors.
    """
    s = structure_from_dict(read_document(path), str(path))
    if validate:
        s.validate()
    return s


def save_structure(s: EpsilonStructure, path: PathLike) -> None:
    write_text(path, dumps_structure(s))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def report_to_dict(r: StructureReport) -> Dict[str, Any]:
    return {
        "passed": r.passed,
        "symbolic_dOmega_zero": r.symbolic_domega_zero,
        "regularity_verdict": r.regularity_verdict,
        "h_sq_consistent": r.h_sq_consistent,
        "failing_equations": list(r.failing_equations),
        "residuals": {k: repr(float(v)) for k, v in r.residuals.items()},
        "samples_used": r.samples_used,
        "weyl_points": r.weyl_points,
        "tolerances": {
            "tol": repr(r.tol),
            "weyl_tol": repr(r.weyl_tol),
            "weyl_step": repr(r.weyl_step),
        },
        "seed": r.seed,
        "failures": r.failures(),
    }


def dumps_report(r: StructureReport) -> str:
    return dumps(report_to_dict(r))
