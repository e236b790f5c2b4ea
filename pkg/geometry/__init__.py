"""
Geometry package: conformally flat almost epsilon-Kaehler structures, their
numeric frames, finite-difference curvature and verification reports.
"""

from .box import Box
from .structure import (
    Chirality,
    DegeneratePoint,
    EpsilonStructure,
    FLAT_DIAGONAL,
    NonzeroRealPart,
    NotRegular,
    SignChange,
    build_example,
    build_structure,
    choose_epsilon,
    d_omega,
    domega_is_zero,
    example_chirality,
    h_squared,
    j_pattern,
    omega_field,
    omega_pattern,
    example_from_fueter,
    example_terms,
    quadratic_form,
)
from .frames import FrameSample, frame_at, j_field, metric_field, structure_metric_sampler
from .curvature import SingularMetric, converges, observed_order, roundoff_floor, weyl_numeric, weyl_tensor
from .verify import StructureReport, verify_structure

__all__ = [
    "Box",
    "Chirality", "DegeneratePoint", "EpsilonStructure", "FLAT_DIAGONAL", "NonzeroRealPart",
    "NotRegular", "SignChange", "build_example", "build_structure", "choose_epsilon",
    "d_omega", "domega_is_zero", "example_chirality", "h_squared", "j_pattern", "omega_field",
    "omega_pattern", "example_from_fueter", "example_terms", "quadratic_form",
    "FrameSample", "frame_at", "j_field", "metric_field", "structure_metric_sampler",
    "SingularMetric", "converges", "observed_order", "roundoff_floor", "weyl_numeric", "weyl_tensor",
    "StructureReport", "verify_structure",
]
