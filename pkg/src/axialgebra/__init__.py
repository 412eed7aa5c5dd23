"""Exact computations with primitive axial algebras of Jordan type."""
from .scalar import QQ, Field, parse_scalar, render_scalar
from .algebra import Algebra, Element
from .axial import (axis_closure, discover_eta, jordan_miyamoto, jordan_peirce, jordan_table,
                    peirce_decompose, verify_fusion)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "QQ", "Field", "parse_scalar", "render_scalar", "Algebra", "Element", "axis_closure",
    "discover_eta", "jordan_miyamoto", "jordan_peirce", "jordan_table", "peirce_decompose",
    "verify_fusion", "BACKEND",
]
