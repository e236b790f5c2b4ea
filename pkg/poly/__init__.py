"""
Poly package: exact polynomial maps R^4 -> paraquaternions, the D_L / D_R
operators and Fueter generators of regular maps.
"""

from .realpoly import COORDS, RealPoly4, X0, X1, X2, X3
from .pqmap import PQPolyMap, constant_map, evaluate, evaluate_array, partial, pointwise_mul
from .operators import (
    EQUATION_LABELS,
    RegularityVerdict,
    Side,
    apply_operator,
    check_regular,
    curl_conditions,
    d_left,
    d_right,
    derived_regular,
    is_left_regular,
    is_right_regular,
    lr_difference,
    regularity_equations,
)
from .fueter import FueterTerm, MixedSides, from_potential, fueter_sum, fueter_zeta, zeta_product

__all__ = [
    "COORDS", "RealPoly4", "X0", "X1", "X2", "X3",
    "PQPolyMap", "constant_map", "evaluate", "evaluate_array", "partial", "pointwise_mul",
    "EQUATION_LABELS", "RegularityVerdict", "Side", "apply_operator", "check_regular",
    "curl_conditions", "d_left", "d_right", "derived_regular", "is_left_regular",
    "is_right_regular", "lr_difference", "regularity_equations",
    "FueterTerm", "MixedSides", "from_potential", "fueter_sum", "fueter_zeta", "zeta_product",
]
