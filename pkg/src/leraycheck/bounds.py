"""Verification harness: the intersection bound for reduced homology, the
first-page dimensions behind it, Mayer-Vietoris rank bounds, the Leray
intersection/union bounds, and nerves with their Helly numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .complex import (
    ComplexError,
    GroundSetMismatch,
    SimplicialComplex,
    VoidComplexError,
    from_mask,
    popcount,
    to_mask,
)
from .homology import BettiVector, reduced_betti, relative_betti
from .leray import leray_number
from .linalg import GF2, FieldSpec


def _same_ground(*cs: SimplicialComplex) -> None:
    if len({c.n for c in cs}) > 1:
        raise GroundSetMismatch(f"ground sets differ: {[c.n for c in cs]}")


def _nonvoid(*cs: SimplicialComplex) -> None:
    if any(c.is_void for c in cs):
        raise VoidComplexError("inputs must be non-void")


class _FaceTerms:
    """Per-face homology of ``X[σ]`` and ``lk(Y, σ)`` for every face σ of Y."""

    def __init__(self, x: SimplicialComplex, y: SimplicialComplex, fld: FieldSpec):
        _same_ground(x, y)
        _nonvoid(x, y)
        self.x, self.y = x, y
        self.terms: list[tuple[int, BettiVector, BettiVector]] = []
        for sigma in sorted(y.face_masks(), key=lambda f: (popcount(f), from_mask(f))):
            self.terms.append(
                (sigma, reduced_betti(x.induced_mask(sigma), fld), reduced_betti(y.link_mask(sigma), fld))
            )

    @staticmethod
    def product(hx: BettiVector, hl: BettiVector, k: int) -> int:
        return sum(hx[i - 1] * hl[k - i - 1] for i in range(0, k + 1))

    def total(self, k: int, *, include_empty: bool = True) -> int:
        return sum(
            self.product(hx, hl, k)
            for sigma, hx, hl in self.terms
            if include_empty or sigma
        )

    def e1(self, p: int, q: int) -> int:
        n = self.y.dim
        if not (0 <= p <= n and q >= 0):
            return 0
        size = n - p + 1
        return sum(
            self.product(hx, hl, p + q)
            for sigma, hx, hl in self.terms
            if popcount(sigma) == size
        )


def theorem1_rhs(x: SimplicialComplex, y: SimplicialComplex, k: int, fld: FieldSpec = GF2) -> int:
    """``Σ_{σ∈Y} Σ_{i+j=k} h~_{i-1}(X[σ]) h~_{j-1}(lk(Y,σ))``, σ = ∅ included."""
    return _FaceTerms(x, y, fld).total(k)


@dataclass
class E1Page:
    """First-page dimensions ``dims[(p, q)]``; zero outside ``0 <= p <= n, q >= 0``."""

    n: int
    dims: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.dims.get(pq, 0)

    def total(self, k: int) -> int:
        return sum(v for (p, q), v in self.dims.items() if p + q == k)


def _e1_from_terms(terms: _FaceTerms) -> E1Page:
    n = terms.y.dim
    dims = {}
    for p in range(0, n + 1):
        # p + q is bounded by |σ| + dim lk + 1 <= n + 1
        for q in range(0, n + 3 - p):
            v = terms.e1(p, q)
            if v:
                dims[(p, q)] = v
    return E1Page(n, dims)


def e1_page(x: SimplicialComplex, y: SimplicialComplex, fld: FieldSpec = GF2) -> E1Page:
    return _e1_from_terms(_FaceTerms(x, y, fld))


@dataclass
class Theorem1Row:
    k: int
    lhs: int
    rhs: int
    y_term: int
    nonempty_sum: int
    relative: int | None
    e1_total: int

    @property
    def checks(self) -> dict[str, bool]:
        out = {
            "a: lhs <= rhs": self.lhs <= self.rhs,
            "rhs == y_term + nonempty_sum": self.rhs == self.y_term + self.nonempty_sum,
            "e1_total <= nonempty_sum": self.e1_total <= self.nonempty_sum,
        }
        if self.relative is not None:
            out["b: lhs <= y_term + relative"] = self.lhs <= self.y_term + self.relative
            out["c: relative <= e1_total"] = self.relative <= self.e1_total
            # the first-page formula without the q >= 0 truncation
            out["c*: relative <= nonempty_sum"] = self.relative <= self.nonempty_sum
        return out


@dataclass
class Report:
    """Outcome of one verification: named checks plus the rows behind them."""

    name: str
    rows: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def violations(self) -> list[tuple[str, object]]:
        out = []
        for row in self.rows:
            for check, good in row.checks.items():
                if not good:
                    out.append((check, getattr(row, "k", None)))
        return out

    @property
    def ok(self) -> bool:
        return not self.violations()


def verify_theorem1(x: SimplicialComplex, y: SimplicialComplex, fld: FieldSpec = GF2) -> Report:
    """Check the intersection bound and the chain of inequalities proving it.

    For each ``k`` in ``0 .. min(dim X, dim Y) + 2``:

    (a) ``h~_{k-1}(X∩Y) <= RHS(k)``
    (b) ``h~_{k-1}(X∩Y) <= h~_{k-1}(Y) + h_k(Y, X∩Y)``
    (c) ``h_k(Y, X∩Y) <= Σ_{p+q=k} dim E1_{p,q}``

    The page is truncated to ``q >= 0``.  When ``Y`` is not pure, a facet of
    dimension below ``n - k`` can carry a class in total degree ``k`` at a
    negative ``q``, and (c) then fails while (a) and (b) still hold.  Check
    (c*) compares against the untruncated sum over all nonempty faces.
    """
    terms = _FaceTerms(x, y, fld)
    xy = x & y
    h_xy = reduced_betti(xy, fld)
    h_y = reduced_betti(y, fld)
    report = Report("thm1")
    rel = None
    if xy.is_void:
        report.notes.append("X∩Y is void; relative leg skipped")
    else:
        rel = relative_betti(y, xy, fld)
    e1 = _e1_from_terms(terms)
    for k in range(0, min(x.dim, y.dim) + 3):
        report.rows.append(
            Theorem1Row(
                k=k,
                lhs=h_xy[k - 1],
                rhs=terms.total(k),
                y_term=h_y[k - 1],
                nonempty_sum=terms.total(k, include_empty=False),
                relative=None if rel is None else rel.get(k, 0),
                e1_total=e1.total(k),
            )
        )
    return report


@dataclass
class MVRow:
    k: int
    union: int
    x: int
    y: int
    inter_prev: int
    inter: int
    union_next: int
    x_prev: int = 0
    y_prev: int = 0

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "h(X∪Y) <= h(X)+h(Y)+h_{k-1}(X∩Y)": self.union <= self.x + self.y + self.inter_prev,
            "h_{k-1}(X∩Y) <= h_{k-1}(X)+h_{k-1}(Y)+h(X∪Y)": self.inter_prev <= self.x_prev + self.y_prev + self.union,
        }


@dataclass
class EulerRow:
    lhs: int
    rhs: int
    k: None = None

    @property
    def checks(self) -> dict[str, bool]:
        return {"euler: χ(X)+χ(Y) == χ(X∪Y)+χ(X∩Y)": self.lhs == self.rhs}


def mayer_vietoris_check(x: SimplicialComplex, y: SimplicialComplex, fld: FieldSpec = GF2) -> Report:
    _same_ground(x, y)
    _nonvoid(x, y)
    u, i = x | y, x & y
    hu, hi, hx, hy = (reduced_betti(c, fld) for c in (u, i, x, y))
    report = Report("mv")
    for k in range(-1, u.dim + 2):
        report.rows.append(
            MVRow(k, hu[k], hx[k], hy[k], hi[k - 1], hi[k], hu[k + 1], hx[k - 1], hy[k - 1])
        )
    report.rows.append(
        EulerRow(
            x.reduced_euler_characteristic() + y.reduced_euler_characteristic(),
            u.reduced_euler_characteristic() + i.reduced_euler_characteristic(),
        )
    )
    return report


@dataclass
class LerayFamilyRow:
    leray: list[int]
    intersection: int
    union: int
    k: None = None

    @property
    def r(self) -> int:
        return len(self.leray)

    @property
    def intersection_slack(self) -> int:
        return sum(self.leray) - self.intersection

    @property
    def union_slack(self) -> int:
        return sum(self.leray) + self.r - 1 - self.union

    @property
    def checks(self) -> dict[str, bool]:
        return {
            "L(∩X_i) <= ΣL(X_i)": self.intersection_slack >= 0,
            "L(∪X_i) <= ΣL(X_i)+r-1": self.union_slack >= 0,
        }


def verify_theorem2(family: Sequence[SimplicialComplex], fld: FieldSpec = GF2) -> Report:
    if not family:
        raise ComplexError("empty family")
    _same_ground(*family)
    _nonvoid(*family)
    inter = family[0]
    uni = family[0]
    for c in family[1:]:
        inter = inter & c
        uni = uni | c
    report = Report("thm2")
    report.rows.append(
        LerayFamilyRow([leray_number(c, fld) for c in family], leray_number(inter, fld), leray_number(uni, fld))
    )
    return report


# -- nerves and Helly numbers -----------------------------------------------

@dataclass(frozen=True)
class SetFamily:
    """Ordered list of subsets of ``range(ground_size)`` (repeats allowed)."""

    ground_size: int
    sets: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, ground_size: int, sets: Sequence[Sequence[int]]) -> "SetFamily":
        for s in sets:
            to_mask(s, ground_size)
        return cls(ground_size, tuple(frozenset(s) for s in sets))

    def masks(self) -> list[int]:
        return [to_mask(s) for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)


def nerve(fam: SetFamily) -> SimplicialComplex:
    """One vertex per member; a subfamily is a face iff it has a common element."""
    if not fam.sets:
        raise ComplexError("nerve of an empty family")
    masks = fam.masks()
    facets = []
    for g in range(fam.ground_size):
        facets.append(sum(1 << idx for idx, m in enumerate(masks) if m >> g & 1))
    return SimplicialComplex(len(masks), facets)


def helly_number(fam: SetFamily, *, max_size: int | None = 16) -> int:
    """Smallest ``h >= 1`` such that, for every subfamily, pairwise-up-to-``h``
    intersection forces a common point.  Exhaustive over all ``2^|F|`` subfamilies.
    """
    m = len(fam)
    if m == 0:
        raise ComplexError("Helly number of an empty family")
    if max_size is not None and m > max_size:
        raise ComplexError(f"family of size {m} exceeds cap {max_size} (raise it with --max-n)")
    masks = fam.masks()
    full_ground = (1 << fam.ground_size) - 1
    size = 1 << m
    inter = [0] * size
    inter[0] = full_ground
    # smallest[K]: size of a smallest non-intersecting subfamily of K (0 = none)
    smallest = [0] * size
    best = 1
    for k in range(1, size):
        low = k & -k
        inter[k] = inter[k ^ low] & masks[low.bit_length() - 1]
        if inter[k]:
            continue
        s = 0
        rest = k
        while rest:
            b = rest & -rest
            t = smallest[k ^ b]
            if t and (s == 0 or t < s):
                s = t
            rest ^= b
        if s == 0:
            s = popcount(k)
        smallest[k] = s
        best = max(best, s)
    return best


def helly_via_nerve(fam: SetFamily) -> int:
    """Largest minimal non-face of the nerve (at least 1)."""
    return max([1] + [popcount(m) for m in nerve(fam).minimal_nonface_masks()])


def helly_check(fam: SetFamily, fld: FieldSpec = GF2) -> tuple[int, int]:
    """``(h(F), 1 + L(N(F)))``; the first never exceeds the second."""
    return helly_number(fam), 1 + leray_number(nerve(fam), fld)
