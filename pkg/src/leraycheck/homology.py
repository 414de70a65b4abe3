"""Reduced and relative simplicial homology dimensions over a field.

Reduced homology comes from the augmented chain complex: the empty face spans
``C_{-1}``, and every vertex maps to it with coefficient 1.  With that
convention the void complex has no homology at all while the empty complex
``{∅}`` has a single class in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .complex import ComplexError, SimplicialComplex, VoidComplexError, popcount
from .linalg import GF2, FieldSpec, SparseMatrix, rank_gf2_bits, rank_of_columns

FaceGroups = Mapping[int, Sequence[int]]


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; ``values[0]`` is degree -1.  Absent degrees read as 0."""

    values: tuple[int, ...] = ()

    def __getitem__(self, degree: int) -> int:
        idx = degree + 1
        if 0 <= idx < len(self.values):
            return self.values[idx]
        return 0

    @property
    def top_degree(self) -> int:
        return len(self.values) - 2

    def items(self):
        return [(i - 1, v) for i, v in enumerate(self.values)]

    def as_dict(self) -> dict[int, int]:
        return dict(self.items())

    def nonzero(self) -> dict[int, int]:
        return {d: v for d, v in self.items() if v}

    def euler(self) -> int:
        return sum((-1) ** d * v for d, v in self.items())

    def is_zero(self) -> bool:
        return not any(self.values)


def _rank_boundary(hi: Sequence[int], lo_index: Mapping[int, int], fld: FieldSpec) -> int:
    """Rank of the boundary map from faces ``hi`` into the span of ``lo_index``.

    Faces of ``hi`` whose codimension-one faces are missing from ``lo_index``
    just drop those rows, which is exactly the quotient map of a pair.
    """
    if not hi or not lo_index:
        return 0
    if fld.p == 2:
        bits = []
        for f in hi:
            v = 0
            rest = f
            while rest:
                b = rest & -rest
                r = lo_index.get(f ^ b)
                if r is not None:
                    v |= 1 << r
                rest ^= b
            bits.append(v)
        return rank_gf2_bits(bits)
    cols = []
    for f in hi:
        col = {}
        sign = 1
        rest = f
        while rest:
            b = rest & -rest
            r = lo_index.get(f ^ b)
            if r is not None:
                col[r] = sign
            sign = -sign
            rest ^= b
        cols.append(col)
    return rank_of_columns(cols, fld)


class _ChainRanks:
    """Lazily computed boundary ranks for a graded family of faces."""

    def __init__(self, groups: FaceGroups, fld: FieldSpec):
        self.groups = groups
        self.fld = fld
        self._ranks: dict[int, int] = {}
        self._index: dict[int, dict[int, int]] = {}

    def size(self, d: int) -> int:
        return len(self.groups.get(d, ()))

    def index(self, d: int) -> dict[int, int]:
        idx = self._index.get(d)
        if idx is None:
            idx = {f: i for i, f in enumerate(self.groups.get(d, ()))}
            self._index[d] = idx
        return idx

    def rank(self, d: int) -> int:
        """Rank of the boundary out of degree ``d``."""
        r = self._ranks.get(d)
        if r is None:
            if d <= -1:
                r = 0
            else:
                r = _rank_boundary(self.groups.get(d, ()), self.index(d - 1), self.fld)
            self._ranks[d] = r
        return r

    def betti(self, d: int) -> int:
        n = self.size(d)
        if n == 0:
            return 0
        return n - self.rank(d) - self.rank(d + 1)


def group_faces(masks: Iterable[int]) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for f in masks:
        groups.setdefault(popcount(f) - 1, []).append(f)
    return groups


def betti_of_groups(groups: FaceGroups, fld: FieldSpec = GF2) -> BettiVector:
    """Reduced Betti numbers of the complex whose faces (incl. ∅) are ``groups``."""
    if not groups:
        return BettiVector(())
    top = max(groups)
    ch = _ChainRanks(groups, fld)
    return BettiVector(tuple(ch.betti(d) for d in range(-1, top + 1)))


def top_nonzero_degree(groups: FaceGroups, fld: FieldSpec, lowest: int) -> int | None:
    """Largest degree ``i >= lowest`` with nonzero reduced homology, else None.

    Works downward from the top dimension so only the boundary maps that
    matter for degrees ``>= lowest`` are ever reduced.
    """
    if not groups:
        return None
    ch = _ChainRanks(groups, fld)
    for d in range(max(groups), lowest - 1, -1):
        if ch.betti(d):
            return d
    return None


def boundary_matrix(x: SimplicialComplex, i: int, fld: FieldSpec = GF2) -> SparseMatrix:
    """Matrix of the boundary map from ``i``-chains to ``(i-1)``-chains.

    Rows and columns follow lexicographic face order.  Over GF(p) entries are
    reduced into ``0..p-1``.
    """
    if x.is_void:
        raise VoidComplexError("the void complex has no chain complex")
    if i < 0:
        raise ValueError("boundary maps start in degree 0")
    groups = x.faces_by_dim()
    hi = groups.get(i, ())
    lo = groups.get(i - 1, ())
    index = {f: r for r, f in enumerate(lo)}
    entries = {}
    for c, f in enumerate(hi):
        sign = 1
        rest = f
        while rest:
            b = rest & -rest
            entries[(index[f ^ b], c)] = sign if fld.p is None else sign % fld.p
            sign = -sign
            rest ^= b
    return SparseMatrix(len(lo), len(hi), entries)


def reduced_betti(x: SimplicialComplex, fld: FieldSpec = GF2) -> BettiVector:
    if x.is_void:
        return BettiVector(())
    return betti_of_groups(x.faces_by_dim(), fld)


def relative_betti(y: SimplicialComplex, a: SimplicialComplex, fld: FieldSpec = GF2) -> dict[int, int]:
    """Dimensions of ``H_k(Y, A)`` for ``k = 0 .. dim Y``."""
    if a.is_void:
        raise ComplexError("relative homology needs a non-void subcomplex")
    if y.n != a.n:
        raise ComplexError("ground sets differ")
    if not all(y.has_mask(f) for f in a.facet_masks):
        raise ComplexError("A is not a subcomplex of Y")
    a_faces = a.face_masks()
    groups = {
        d: [f for f in fs if f not in a_faces]
        for d, fs in y.faces_by_dim().items()
        if d >= 0
    }
    ch = _ChainRanks({d: fs for d, fs in groups.items() if fs}, fld)
    return {k: ch.betti(k) for k in range(0, y.dim + 1)}
