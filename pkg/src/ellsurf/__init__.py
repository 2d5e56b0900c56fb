"""Exact computations for rational elliptic surfaces whose J-invariant has degree one.

All arithmetic happens over K = Q(i, sqrt2). Fiber types come from the
Weierstrass family, while sections are handled twice: as lattice classes and
as explicit points built from the cubic pencil.
"""

from .field import FieldElem, field_sqrt, format_field, parse_field
from .poly import Poly, RationalFn, format_poly, parse_poly

__version__ = "0.1.0"

__all__ = [
    "FieldElem",
    "Poly",
    "RationalFn",
    "field_sqrt",
    "format_field",
    "parse_field",
    "format_poly",
    "parse_poly",
]
