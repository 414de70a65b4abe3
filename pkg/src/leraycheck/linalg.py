"""Exact rank computation over GF(p) and over the rationals.

Matrices are sparse: a map ``(row, col) -> value`` with integer values.  Over
GF(p) the values are reduced mod p on entry.  Over Q the elimination keeps
every row integral (fraction-free): a row update is
``pivot * row - row[c] * pivot_row`` followed by division by the row content.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

DENSE_CUTOFF = 64


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``GF(p)`` when ``p`` is set, the rationals otherwise."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None:
            if not (2 <= self.p < 2**31) or not is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime 2 <= p < 2^31, got {self.p}")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``gf:<p>`` or ``q``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(None)
        if t.startswith("gf:"):
            try:
                return cls(int(t[3:]))
            except ValueError as exc:
                raise ValueError(f"bad field {text!r}: {exc}") from None
        raise ValueError(f"bad field {text!r}; expected gf:<p> or q")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(None)


@dataclass(frozen=True)
class SparseMatrix:
    n_rows: int
    n_cols: int
    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.n_rows and 0 <= c < self.n_cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.n_rows}x{self.n_cols}")
            if v:
                clean[(r, c)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "SparseMatrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        return cls(n_rows, n_cols, {(r, c): v for r, row in enumerate(rows) for c, v in enumerate(row) if v})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.n_cols for _ in range(self.n_rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.n_cols, self.n_rows, {(c, r): v for (r, c), v in self.entries.items()})

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [{} for _ in range(self.n_cols)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                acc[(r, c)] = acc.get((r, c), 0) + v * w
        return SparseMatrix(self.n_rows, other.n_cols, acc)

    def reduce_mod(self, p: int) -> "SparseMatrix":
        return SparseMatrix(self.n_rows, self.n_cols, {k: v % p for k, v in self.entries.items()})


def rank(m: SparseMatrix, fld: FieldSpec = GF2) -> int:
    """Rank of ``m`` over ``fld``."""
    if m.n_rows == 0 or m.n_cols == 0:
        return 0
    cols = m.columns()
    if fld.is_rational and m.n_rows <= DENSE_CUTOFF and m.n_cols <= DENSE_CUTOFF:
        return rank_bareiss(m.to_dense())
    # sparsest columns first: a cheap Markowitz-style ordering that limits fill-in
    cols.sort(key=len)
    return rank_of_columns(cols, fld)


def rank_of_columns(cols: Iterable[Mapping[int, int]], fld: FieldSpec) -> int:
    """Rank of the matrix whose columns are the sparse vectors ``cols``."""
    if fld.p == 2:
        return _rank_gf2(cols)
    if fld.p is None:
        return _rank_integral(cols)
    return _rank_gfp(cols, fld.p)


def _rank_gf2(cols: Iterable[Mapping[int, int]]) -> int:
    pivots: dict[int, int] = {}
    for col in cols:
        v = 0
        for r, x in col.items():
            if x & 1:
                v ^= 1 << r
        while v:
            low = v.bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = v
                break
            v ^= piv
    return len(pivots)


def rank_gf2_bits(cols: Iterable[int]) -> int:
    """GF(2) rank of columns already packed as row bitmasks."""
    pivots: dict[int, int] = {}
    for v in cols:
        while v:
            low = v.bit_length() - 1
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = v
                break
            v ^= piv
    return len(pivots)


def _rank_gfp(cols: Iterable[Mapping[int, int]], p: int) -> int:
    # pivots are kept monic at their leading (largest) row index
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        v = {r: x % p for r, x in col.items() if x % p}
        while v:
            low = max(v)
            piv = pivots.get(low)
            if piv is None:
                inv = pow(v[low], p - 2, p)
                pivots[low] = {r: x * inv % p for r, x in v.items()}
                break
            f = v[low]
            for r, x in piv.items():
                y = (v.get(r, 0) - f * x) % p
                if y:
                    v[r] = y
                else:
                    v.pop(r, None)
    return len(pivots)


def _content(v: Mapping[int, int]) -> int:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _rank_integral(cols: Iterable[Mapping[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        v = {r: x for r, x in col.items() if x}
        while v:
            low = max(v)
            piv = pivots.get(low)
            if piv is None:
                g = _content(v)
                if v[low] < 0:
                    g = -g
                pivots[low] = {r: x // g for r, x in v.items()}
                break
            a, b = piv[low], v[low]
            new = {r: a * x for r, x in v.items()}
            for r, x in piv.items():
                y = new.get(r, 0) - b * x
                if y:
                    new[r] = y
                else:
                    new.pop(r, None)
            g = _content(new)
            v = {r: x // g for r, x in new.items()} if g > 1 else new
    return len(pivots)


def rank_bareiss(rows: Sequence[Sequence[int]]) -> int:
    """Rank of a dense integer matrix by Bareiss fraction-free elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
    return r
