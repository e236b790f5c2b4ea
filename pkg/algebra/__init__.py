"""
Algebra package: exact paraquaternion arithmetic and its text form.
"""

from .paraquaternion import (
    ElementClass,
    I1,
    I2,
    I3,
    NormKind,
    NormValue,
    NotInvertible,
    ONE,
    Paraquaternion,
    ZERO,
    classify,
    conjugate,
    imag_part,
    inverse,
    matrix_det,
    mul,
    norm,
    normsq,
    product_components,
    real_part,
    to_matrix,
    to_scalar,
)
from .text import ParseError, format_paraquaternion, parse_paraquaternion

__all__ = [
    "ElementClass", "I1", "I2", "I3", "NormKind", "NormValue", "NotInvertible", "ONE",
    "Paraquaternion", "ZERO", "classify", "conjugate", "imag_part", "inverse", "matrix_det",
    "mul", "norm", "normsq", "product_components", "real_part", "to_matrix", "to_scalar",
    "ParseError", "format_paraquaternion", "parse_paraquaternion",
]
