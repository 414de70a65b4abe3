"""Finite simplicial complexes on a fixed ground set ``{0, ..., n-1}``.

Faces are stored internally as integer bitmasks (bit ``v`` set means vertex
``v`` is in the face).  The public surface accepts any iterable of vertex
indices and returns sorted tuples.

The *void* complex (no faces at all) and the *empty* complex (only the empty
face) are distinct values; the distinction is carried by an explicit flag
rather than inferred from the facet list.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

DEFAULT_MAX_N = 24


class ComplexError(ValueError):
    """Invalid construction or an operation outside its domain."""


class GroundSetMismatch(ComplexError):
    pass


class VoidComplexError(ComplexError):
    pass


class GroundSetTooLarge(ComplexError):
    pass


# -- bitmask helpers ---------------------------------------------------------

def to_mask(vertices: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for v in vertices:
        v = int(v)
        if v < 0 or (n is not None and v >= n):
            raise ComplexError(f"vertex {v} outside ground set [0, {n})")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including ``mask`` itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def lex_key(mask: int) -> tuple[int, ...]:
    return from_mask(mask)


def maximal_masks(masks: Iterable[int]) -> frozenset[int]:
    """Reduce a collection of faces to its inclusion-maximal members."""
    ordered = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in ordered:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return frozenset(kept)


def check_ground_size(n: int, max_n: int | None) -> None:
    if max_n is not None and n > max_n:
        raise GroundSetTooLarge(
            f"ground set of size {n} exceeds cap {max_n} (raise it with --max-n or max_n=)"
        )


# -- the complex -------------------------------------------------------------

class SimplicialComplex:
    """An immutable simplicial complex on ground set ``range(n)``, stored by facets."""

    __slots__ = ("n", "_facets", "_void", "_faces", "_by_dim")

    def __init__(self, n: int, facet_masks: Iterable[int] = (), *, void: bool = False):
        if n < 1:
            raise ComplexError("ground_size must be positive")
        facets = frozenset() if void else maximal_masks(facet_masks)
        if not void and not facets:
            facets = frozenset({0})
        full = (1 << n) - 1
        for f in facets:
            if f & ~full:
                raise ComplexError(f"face {from_mask(f)} outside ground set [0, {n})")
        self.n = n
        self._facets = facets
        self._void = void
        self._faces: frozenset[int] | None = None
        self._by_dim: dict[int, tuple[int, ...]] | None = None

    # construction

    @classmethod
    def from_facets(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of ``faces``; an empty list gives the void complex."""
        masks = [to_mask(f, n) for f in faces]
        if not masks:
            return cls(n, void=True)
        return cls(n, masks)

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, void=True)

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, [0])

    @classmethod
    def simplex(cls, n: int, vertices: Iterable[int] | None = None) -> "SimplicialComplex":
        """Full simplex on ``vertices`` (default: the whole ground set)."""
        mask = (1 << n) - 1 if vertices is None else to_mask(vertices, n)
        return cls(n, [mask])

    @classmethod
    def boundary_of_simplex(cls, n: int, vertices: Iterable[int] | None = None) -> "SimplicialComplex":
        mask = (1 << n) - 1 if vertices is None else to_mask(vertices, n)
        if mask == 0:
            raise ComplexError("boundary of the simplex on no vertices is undefined")
        return cls(n, [mask & ~(1 << v) for v in from_mask(mask)])

    # basic queries

    @property
    def is_void(self) -> bool:
        return self._void

    @property
    def facet_masks(self) -> frozenset[int]:
        return self._facets

    @property
    def facets(self) -> list[tuple[int, ...]]:
        return sorted((from_mask(f) for f in self._facets), key=lambda t: (len(t), t))

    @property
    def vertex_mask(self) -> int:
        out = 0
        for f in self._facets:
            out |= f
        return out

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex and -2 for the void complex."""
        if self._void:
            return -2
        return max(popcount(f) for f in self._facets) - 1

    def face_masks(self) -> frozenset[int]:
        if self._faces is None:
            if self._void:
                self._faces = frozenset()
            else:
                acc: set[int] = set()
                for f in self._facets:
                    acc.update(submasks(f))
                self._faces = frozenset(acc)
        return self._faces

    def faces_by_dim(self) -> dict[int, tuple[int, ...]]:
        """Face masks grouped by dimension, each group in lexicographic order."""
        if self._by_dim is None:
            groups: dict[int, list[int]] = {}
            for f in self.face_masks():
                groups.setdefault(popcount(f) - 1, []).append(f)
            self._by_dim = {d: tuple(sorted(g, key=lex_key)) for d, g in sorted(groups.items())}
        return self._by_dim

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        return [from_mask(f) for f in self.faces_by_dim().get(d, ())]

    def f_vector(self) -> dict[int, int]:
        return {d: len(g) for d, g in self.faces_by_dim().items()}

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** d * c for d, c in self.f_vector().items())

    def has_mask(self, mask: int) -> bool:
        if self._void:
            return False
        if self._faces is not None:
            return mask in self._faces
        return any(mask & ~f == 0 for f in self._facets)

    def member(self, face: Iterable[int]) -> bool:
        return self.has_mask(to_mask(face, self.n))

    __contains__ = member

    def is_full_simplex(self) -> bool:
        return self._facets == frozenset({(1 << self.n) - 1}) and not self._void

    def _same_ground(self, other: "SimplicialComplex") -> None:
        if self.n != other.n:
            raise GroundSetMismatch(f"ground sets differ: {self.n} vs {other.n}")

    # constructions

    def induced_mask(self, s: int) -> "SimplicialComplex":
        if self._void:
            return self
        return SimplicialComplex(self.n, [f & s for f in self._facets])

    def induced(self, vertices: Iterable[int]) -> "SimplicialComplex":
        """Induced subcomplex on ``vertices``; the ground set is kept."""
        return self.induced_mask(to_mask(vertices, self.n))

    def link_mask(self, a: int) -> "SimplicialComplex":
        if not self.has_mask(a):
            return SimplicialComplex(self.n, void=True)
        return SimplicialComplex(self.n, [f & ~a for f in self._facets if a & ~f == 0])

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        return self.link_mask(to_mask(face, self.n))

    def star_mask(self, a: int) -> "SimplicialComplex":
        if not self.has_mask(a):
            return SimplicialComplex(self.n, void=True)
        return SimplicialComplex(self.n, [f for f in self._facets if a & ~f == 0])

    def star(self, face: Iterable[int]) -> "SimplicialComplex":
        return self.star_mask(to_mask(face, self.n))

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        self._same_ground(other)
        if self._void or other._void:
            return SimplicialComplex(self.n, void=True)
        return SimplicialComplex(self.n, [f & g for f in self._facets for g in other._facets])

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        self._same_ground(other)
        if self._void:
            return other
        if other._void:
            return self
        return SimplicialComplex(self.n, self._facets | other._facets)

    __and__ = intersection
    __or__ = union

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Join with ``other``; its vertices are shifted up by ``self.n``."""
        n = self.n + other.n
        if self._void or other._void:
            return SimplicialComplex(n, void=True)
        shift = self.n
        return SimplicialComplex(n, [f | (g << shift) for f in self._facets for g in other._facets])

    def minimal_nonface_masks(self) -> frozenset[int]:
        """Inclusion-minimal subsets of the ground set that are not faces."""
        if self._void:
            raise VoidComplexError("the void complex has no Stanley-Reisner ideal")
        faces = self.face_masks()
        out = set()
        for f in faces:
            for v in range(self.n):
                bit = 1 << v
                if f & bit:
                    continue
                cand = f | bit
                if cand in faces or cand in out:
                    continue
                if all((cand & ~(1 << w)) in faces for w in from_mask(cand)):
                    out.add(cand)
        return frozenset(out)

    def alexander_dual(self) -> "SimplicialComplex":
        """Faces are the complements of non-faces."""
        if self._void:
            raise ComplexError("Alexander dual of the void complex is not defined")
        if self.is_full_simplex():
            raise ComplexError("Alexander dual of the full simplex is not defined")
        full = (1 << self.n) - 1
        return SimplicialComplex(self.n, [full & ~m for m in self.minimal_nonface_masks()])

    # value semantics

    def _key(self):
        return (self.n, self._void, self._facets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self._void:
            return f"SimplicialComplex(n={self.n}, void)"
        return f"SimplicialComplex(n={self.n}, facets={self.facets})"


def intersection(*complexes: SimplicialComplex) -> SimplicialComplex:
    out = complexes[0]
    for c in complexes[1:]:
        out = out.intersection(c)
    return out


def union(*complexes: SimplicialComplex) -> SimplicialComplex:
    out = complexes[0]
    for c in complexes[1:]:
        out = out.union(c)
    return out


def join(x: SimplicialComplex, y: SimplicialComplex) -> SimplicialComplex:
    return x.join(y)


def skeleton(n: int, d: int) -> SimplicialComplex:
    """Full ``d``-skeleton of the simplex on ``range(n)``."""
    if d < 0:
        return SimplicialComplex.empty(n)
    return SimplicialComplex(n, [to_mask(c) for c in combinations(range(n), min(d + 1, n))])
