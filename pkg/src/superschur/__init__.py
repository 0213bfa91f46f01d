"""Exact computations with Schur superfunctors, Schur superalgebras and their characters."""

from .exactalg import GF, QQ, FieldError, SparseMat, in_span, kernel_basis, parse_field, rank
from .shapes import Partition, SkewShape, Tableau, parse_shape
from .supercore import SuperBasis, act, charge, sgn, standardize

__all__ = [
    "GF", "QQ", "FieldError", "SparseMat", "in_span", "kernel_basis", "parse_field", "rank",
    "Partition", "SkewShape", "Tableau", "parse_shape",
    "SuperBasis", "act", "charge", "sgn", "standardize",
]
__version__ = "0.1.0"
