"""
Formats package: strict JSON readers and canonical writers for polynomial
maps, structures and verification reports.
"""

from .safe_parse import FormatError, to_exponent, to_fraction, to_sign
from .files import (
    dumps_pmap,
    dumps_report,
    dumps_structure,
    load_pmap,
    load_structure,
    pmap_from_dict,
    pmap_to_dict,
    report_to_dict,
    save_pmap,
    save_structure,
    structure_from_dict,
    structure_to_dict,
    write_text,
)

__all__ = [
    "FormatError", "to_exponent", "to_fraction", "to_sign",
    "dumps_pmap", "dumps_report", "dumps_structure", "load_pmap", "load_structure",
    "pmap_from_dict", "pmap_to_dict", "report_to_dict", "save_pmap", "save_structure",
    "structure_from_dict", "structure_to_dict", "write_text",
]
