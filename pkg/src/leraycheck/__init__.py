"""Exact simplicial homology, Leray numbers and Stanley-Reisner invariants."""

from .complex import (
    ComplexError,
    GroundSetMismatch,
    GroundSetTooLarge,
    SimplicialComplex,
    VoidComplexError,
    intersection,
    join,
    union,
)
from .homology import BettiVector, boundary_matrix, reduced_betti, relative_betti
from .leray import check_P, leray_number, leray_number_via_links
from .linalg import GF2, GF3, QQ, FieldSpec, SparseMatrix, rank

__version__ = "0.1.0"
