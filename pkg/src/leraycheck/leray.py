"""Leray numbers.

Two independent routes are provided: enumeration of induced subcomplexes and
enumeration of links of faces.  They must agree on every complex, which the
test suite exploits as an oracle pair.  ``check_P`` evaluates the
interpolating family of conditions between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complex import (
    DEFAULT_MAX_N,
    GroundSetMismatch,
    SimplicialComplex,
    VoidComplexError,
    check_ground_size,
    from_mask,
    popcount,
    submasks,
)
from .homology import group_faces, top_nonzero_degree
from .linalg import GF2, FieldSpec


@dataclass(frozen=True)
class LerayResult:
    """Leray number plus a witness: a vertex set (or face) and the homology degree."""

    value: int
    witness: tuple[int, ...] | None = None
    degree: int | None = None


def _require_nonvoid(x: SimplicialComplex) -> None:
    if x.is_void:
        raise VoidComplexError("Leray number of the void complex is undefined")


def _subsets_by_size_desc(mask: int):
    verts = from_mask(mask)
    for size in range(len(verts), -1, -1):
        for combo in combinations(verts, size):
            s = 0
            for v in combo:
                s |= 1 << v
            yield size, s


def leray_witness(x: SimplicialComplex, fld: FieldSpec = GF2, *, max_n: int | None = DEFAULT_MAX_N) -> LerayResult:
    """Leray number by scanning induced subcomplexes, largest vertex sets first.

    Only vertices of ``x`` are enumerated: a vertex outside every face adds
    nothing to an induced subcomplex.  A set of size ``s`` can only carry
    reduced homology up to degree ``s - 2``, so once that falls below the
    current best the scan stops.
    """
    _require_nonvoid(x)
    check_ground_size(x.n, max_n)
    best = LerayResult(0)
    if len(x.facet_masks) == 1:
        # every induced subcomplex of a simplex is a simplex or {∅}
        return best
    ceiling = x.dim + 1
    faces = x.face_masks()
    for size, s in _subsets_by_size_desc(x.vertex_mask):
        if best.value >= ceiling or size - 2 < best.value:
            break
        groups = group_faces(f for f in faces if f & ~s == 0)
        d = top_nonzero_degree(groups, fld, best.value)
        if d is not None:
            best = LerayResult(d + 1, from_mask(s), d)
    return best


def leray_number(x: SimplicialComplex, fld: FieldSpec = GF2, *, max_n: int | None = DEFAULT_MAX_N) -> int:
    return leray_witness(x, fld, max_n=max_n).value


def leray_links_witness(x: SimplicialComplex, fld: FieldSpec = GF2, *, max_n: int | None = DEFAULT_MAX_N) -> LerayResult:
    """Leray number as ``1 + max{i >= 0 : some link has nonzero H_i}``."""
    _require_nonvoid(x)
    check_ground_size(x.n, max_n)
    best = LerayResult(0)
    for sigma in sorted(x.face_masks(), key=lambda f: (popcount(f), from_mask(f))):
        lk = x.link_mask(sigma)
        if lk.dim < best.value:
            continue
        d = top_nonzero_degree(lk.faces_by_dim(), fld, best.value)
        if d is not None:
            best = LerayResult(d + 1, from_mask(sigma), d)
    return best


def leray_number_via_links(x: SimplicialComplex, fld: FieldSpec = GF2, *, max_n: int | None = DEFAULT_MAX_N) -> int:
    return leray_links_witness(x, fld, max_n=max_n).value


def _link_top_degree(xa: SimplicialComplex, b: int, fld: FieldSpec) -> int | None:
    """Top nonzero degree ``>= 0`` of ``lk(xa, B)``; None when it is acyclic or void."""
    lk = xa.link_mask(b)
    if lk.is_void or lk.dim < 0:
        return None
    return top_nonzero_degree(lk.faces_by_dim(), fld, 0)


def check_P(
    x: SimplicialComplex,
    d: int,
    k: int,
    m: int,
    fld: FieldSpec = GF2,
    *,
    max_n: int | None = 14,
) -> bool:
    """True iff ``H_i(lk(X[A], B)) = 0`` for all ``B ⊆ A``, ``|A| >= n - k``, ``|B| <= m``, ``i >= d``."""
    _require_nonvoid(x)
    check_ground_size(x.n, max_n)
    n = x.n
    full = (1 << n) - 1
    for a in submasks(full):
        if popcount(a) < n - k:
            continue
        xa = x.induced_mask(a)
        for b in xa.face_masks():
            # B outside X[A] has a void link, so only faces of X[A] matter
            if popcount(b) > m:
                continue
            top = _link_top_degree(xa, b, fld)
            if top is not None and top >= d:
                return False
    return True


class PConditionTable:
    """All ``P(k, m)`` conditions of one complex at once.

    For every pair ``B ⊆ A`` the top homology degree of ``lk(X[A], B)`` is
    computed once; ``holds(d, k, m)`` is then a lookup of the maximum over the
    admissible ``(n - |A|, |B|)`` region.
    """

    def __init__(self, x: SimplicialComplex, fld: FieldSpec = GF2, *, max_n: int | None = 14):
        _require_nonvoid(x)
        check_ground_size(x.n, max_n)
        n = self.n = x.n
        # top[c][s]: max top degree over pairs with n - |A| == c and |B| == s
        top = [[-1] * (n + 1) for _ in range(n + 1)]
        for a in submasks((1 << n) - 1):
            c = n - popcount(a)
            xa = x.induced_mask(a)
            for b in xa.face_masks():
                t = _link_top_degree(xa, b, fld)
                if t is not None:
                    s = popcount(b)
                    top[c][s] = max(top[c][s], t)
        self._top = top

    def max_degree(self, k: int, m: int) -> int:
        n = self.n
        best = -1
        for c in range(0, min(k, n) + 1):
            for s in range(0, min(m, n) + 1):
                best = max(best, self._top[c][s])
        return best

    def holds(self, d: int, k: int, m: int) -> bool:
        return self.max_degree(k, m) < d


def eq5_bound(x: SimplicialComplex, y: SimplicialComplex, fld: FieldSpec = GF2) -> int:
    """``max_S L(X[S]) + L(Y[S])`` over all vertex sets ``S``."""
    if x.n != y.n:
        raise GroundSetMismatch("ground sets differ")
    best = 0
    for s in submasks((1 << x.n) - 1):
        best = max(best, leray_number(x.induced_mask(s), fld) + leray_number(y.induced_mask(s), fld))
    return best
