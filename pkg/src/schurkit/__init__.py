"""Exact-arithmetic toolkit for symmetric polynomials and tableau combinatorics."""

from .partitions import FrobeniusCoords, Partition, SkewShape, partitions_of
from .polynomials import IntPolynomial, e_poly, h_poly, m_poly
from .tableaux import Tableau, insert, kostka, p_tableau

__version__ = "0.1.0"

__all__ = [
    "FrobeniusCoords",
    "IntPolynomial",
    "Partition",
    "SkewShape",
    "Tableau",
    "e_poly",
    "h_poly",
    "insert",
    "kostka",
    "m_poly",
    "p_tableau",
    "partitions_of",
    "__version__",
]
