"""Stanley-Reisner invariants through Hochster's formula.

Graded Betti numbers of ``I_X`` are sums of reduced homology dimensions of
induced subcomplexes; no free resolution is ever built.  Regularity and
projective dimension are read off the resulting table.  The zero ideal (``X``
the full simplex) has no regularity: functions return ``None`` there and the
theorem checks skip such inputs.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from .complex import (
    DEFAULT_MAX_N,
    ComplexError,
    GroundSetMismatch,
    SimplicialComplex,
    VoidComplexError,
    check_ground_size,
    from_mask,
    popcount,
    submasks,
    to_mask,
)
from .homology import group_faces, betti_of_groups
from .linalg import GF2, FieldSpec

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal in ``n`` variables given by generator supports."""

    n: int
    generators: frozenset[int]

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        masks = [to_mask(s, n) for s in supports]
        if any(m == 0 for m in masks):
            raise ComplexError("the constant monomial generates the unit ideal")
        minimal = [m for m in set(masks) if not any(o != m and o & ~m == 0 for o in masks)]
        return cls(n, frozenset(minimal))

    @property
    def supports(self) -> list[tuple[int, ...]]:
        return sorted((from_mask(m) for m in self.generators), key=lambda t: (len(t), t))


@dataclass
class BettiTable:
    """Graded Betti numbers ``beta[i, j]`` of ``I_X``; absent entries are zero."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def rows(self) -> list[list[int]]:
        return [[i, j, b] for (i, j), b in sorted(self.entries.items())]

    def regularity(self) -> int | None:
        return max((j - i for (i, j) in self.entries), default=None)

    def max_homological_degree(self) -> int | None:
        return max((i for (i, _) in self.entries), default=None)


def minimal_nonfaces(x: SimplicialComplex) -> list[tuple[int, ...]]:
    return sorted((from_mask(m) for m in x.minimal_nonface_masks()), key=lambda t: (len(t), t))


def stanley_reisner_ideal(x: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(x.n, x.minimal_nonface_masks())


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces contain no generator support."""
    if any(g == 0 for g in ideal.generators):
        raise ComplexError("the constant monomial generates the unit ideal")
    n = ideal.n
    gens = list(ideal.generators)
    faces = {s for s in submasks((1 << n) - 1) if not any(g & ~s == 0 for g in gens)}
    facets = [s for s in faces if not any((s | 1 << v) in faces for v in range(n) if not s >> v & 1)]
    return SimplicialComplex(n, facets)


def betti_table(x: SimplicialComplex, fld: FieldSpec = GF2, *, max_n: int | None = DEFAULT_MAX_N) -> BettiTable:
    """Graded Betti numbers of ``I_X`` from Hochster's formula.

    ``beta[i, j]`` is the sum over ``|W| = j`` of ``dim H~_{j-i-2}(X[W])``,
    restricted to ``i >= 0``.
    """
    if x.is_void:
        raise VoidComplexError("the void complex has no Stanley-Reisner ideal")
    check_ground_size(x.n, max_n)
    table: dict[tuple[int, int], int] = {}
    if x.is_full_simplex():
        return BettiTable(table)
    faces = x.face_masks()
    vmask = x.vertex_mask
    cache: dict[int, object] = {}
    for w in submasks((1 << x.n) - 1):
        j = popcount(w)
        if j == 0:
            continue
        core = w & vmask
        hv = cache.get(core)
        if hv is None:
            hv = betti_of_groups(group_faces(f for f in faces if f & ~core == 0), fld)
            cache[core] = hv
        for t, h in hv.items():
            i = j - t - 2
            if h and i >= 0:
                table[(i, j)] = table.get((i, j), 0) + h
    return BettiTable(table)


def regularity(x: SimplicialComplex, fld: FieldSpec = GF2) -> int | None:
    """``reg(I_X)``, or None for the zero ideal."""
    return betti_table(x, fld).regularity()


def projective_dimension_quotient(x: SimplicialComplex, fld: FieldSpec = GF2) -> int:
    """``pd(S/I_X)``: one more than the top homological degree of ``I_X``."""
    top = betti_table(x, fld).max_homological_degree()
    return 0 if top is None else top + 1


def projective_dimension_ideal(x: SimplicialComplex, fld: FieldSpec = GF2) -> int | None:
    """``pd(I_X)``, or None for the zero ideal."""
    return betti_table(x, fld).max_homological_degree()


def terai_check(x: SimplicialComplex, fld: FieldSpec = GF2) -> tuple[int, int]:
    """Returns ``(pd(S/I_X), reg(I_{X*}))``; they agree by Terai's identity."""
    return projective_dimension_quotient(x, fld), regularity(x.alexander_dual(), fld)


@dataclass
class InequalityReport:
    """Values entering a pair of inequalities, with their verdicts."""

    values: dict[str, int | None]
    checks: dict[str, bool]
    skipped: str | None = None

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def violations(self) -> list[str]:
        return [name for name, good in self.checks.items() if not good]


def _same_ground(x: SimplicialComplex, y: SimplicialComplex) -> None:
    if x.n != y.n:
        raise GroundSetMismatch(f"ground sets differ: {x.n} vs {y.n}")


def check_theorem_mono(x: SimplicialComplex, y: SimplicialComplex, fld: FieldSpec = GF2) -> InequalityReport:
    """Regularity of sum and intersection of two Stanley-Reisner ideals.

    ``I_X + I_Y = I_{X∩Y}`` and ``I_X ∩ I_Y = I_{X∪Y}``.
    """
    _same_ground(x, y)
    vals = {
        "reg_X": regularity(x, fld),
        "reg_Y": regularity(y, fld),
        "reg_sum": regularity(x & y, fld),
        "reg_intersection": regularity(x | y, fld),
    }
    if any(v is None for v in vals.values()):
        log.info("skipping regularity check: a zero ideal is involved")
        return InequalityReport(vals, {}, skipped="zero ideal")
    checks = {
        "reg(I_X+I_Y) <= reg(I_X)+reg(I_Y)-1": vals["reg_sum"] <= vals["reg_X"] + vals["reg_Y"] - 1,
        "reg(I_X∩I_Y) <= reg(I_X)+reg(I_Y)": vals["reg_intersection"] <= vals["reg_X"] + vals["reg_Y"],
    }
    return InequalityReport(vals, checks)


def check_theorem_proj(x: SimplicialComplex, y: SimplicialComplex, fld: FieldSpec = GF2) -> InequalityReport:
    _same_ground(x, y)
    vals = {
        "pd_X": projective_dimension_ideal(x, fld),
        "pd_Y": projective_dimension_ideal(y, fld),
        "pd_sum": projective_dimension_ideal(x & y, fld),
        "pd_intersection": projective_dimension_ideal(x | y, fld),
    }
    if any(v is None for v in vals.values()):
        log.info("skipping projective dimension check: a zero ideal is involved")
        return InequalityReport(vals, {}, skipped="zero ideal")
    checks = {
        "pd(I_X∩I_Y) <= pd(I_X)+pd(I_Y)": vals["pd_intersection"] <= vals["pd_X"] + vals["pd_Y"],
        "pd(I_X+I_Y) <= pd(I_X)+pd(I_Y)+1": vals["pd_sum"] <= vals["pd_X"] + vals["pd_Y"] + 1,
    }
    return InequalityReport(vals, checks)
