"""Carlitz cyclotomic function fields and their norm-one units."""

from .fq import FieldSpec, make_field
from .poly import PolyRing, discrete_log, find_primitive_root
from .carlitz import carlitz_poly, cyclotomic_poly
from .ring import CycContext, RingElem, make_context, galois_apply, norm, is_unit, ring_inverse
from .units import UnitDecomposition, decompose, recompose, unit_witness, ell_invariant, cyclotomic_unit
from .textio import RunConfig, format_element, parse_element

__all__ = [
    "FieldSpec", "make_field", "PolyRing", "discrete_log", "find_primitive_root",
    "carlitz_poly", "cyclotomic_poly", "CycContext", "RingElem", "make_context",
    "galois_apply", "norm", "is_unit", "ring_inverse", "UnitDecomposition",
    "decompose", "recompose", "unit_witness", "ell_invariant", "cyclotomic_unit",
    "RunConfig", "format_element", "parse_element",
]

__version__ = "0.1.0"
