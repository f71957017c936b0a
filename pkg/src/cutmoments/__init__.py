"""Exact moments of hyperplane-cut reference elements and equivalent polynomials."""

from .elements import Element, element, full_moment, integrate
from .equiv_poly import EquivPolySystem, equivalent_polynomial, evaluate, make_basis, solve
from .hypercube import hci
from .line_segment import BoundaryMode, lsi
from .polylog import lim_li
from .prism import pri
from .tetrahedron import TetVariant, tti
from .triangle import tri

__all__ = [
    "BoundaryMode",
    "Element",
    "EquivPolySystem",
    "TetVariant",
    "element",
    "equivalent_polynomial",
    "evaluate",
    "full_moment",
    "hci",
    "integrate",
    "lim_li",
    "lsi",
    "make_basis",
    "pri",
    "solve",
    "tri",
    "tti",
]
