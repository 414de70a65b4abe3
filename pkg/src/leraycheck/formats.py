"""Text and JSON formats for complexes, monomial ideals and set families.

``.cplx``::

    # comment
    n 4
    0 1 2
    2 3

A line ``empty`` is the empty face (so a file with only that line is the
empty complex); a line ``void`` makes the complex void.

``.ideal``: first line ``vars <n>``, then one generator support per line.
``.fam``: first line ``ground <g>``, then one set per line (a blank set is
written as ``-``).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from .algebra import MonomialIdeal, complex_of_ideal
from .bounds import SetFamily
from .complex import ComplexError, SimplicialComplex, from_mask


class ParseError(ValueError):
    def __init__(self, path: str, line: int | None, msg: str):
        where = f"{path}:{line}" if line is not None else path
        super().__init__(f"{where}: {msg}")
        self.path = path
        self.line = line


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _header(lines, keyword: str, path: str) -> tuple[int, int]:
    try:
        no, line = next(lines)
    except StopIteration:
        raise ParseError(path, None, f"missing '{keyword} <size>' header") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError(path, no, f"expected '{keyword} <positive int>', got {line!r}")
    return no, int(parts[1])


def _int_row(no: int, line: str, size: int, path: str) -> list[int]:
    try:
        row = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(path, no, f"non-integer token in {line!r}") from None
    for v in row:
        if not 0 <= v < size:
            raise ParseError(path, no, f"index {v} outside [0, {size})")
    return row


def parse_cplx(text: str, path: str = "<string>") -> SimplicialComplex:
    lines = iter(_content_lines(text))
    _, n = _header(lines, "n", path)
    facets: list[list[int]] = []
    void = False
    for no, line in lines:
        if line == "void":
            void = True
        elif line == "empty":
            facets.append([])
        else:
            facets.append(_int_row(no, line, n, path))
    if void and facets:
        raise ParseError(path, None, "a void complex cannot list faces")
    return SimplicialComplex.from_facets(n, facets)


def format_cplx(x: SimplicialComplex, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.append(f"n {x.n}")
    if x.is_void:
        out.append("void")
    else:
        for f in x.facets:
            out.append(" ".join(map(str, f)) if f else "empty")
    return "\n".join(out) + "\n"


def complex_to_json(x: SimplicialComplex) -> dict:
    return {"n": x.n, "facets": [list(f) for f in x.facets], "status": "void" if x.is_void else "nonvoid"}


def complex_from_json(obj: dict, path: str = "<json>") -> SimplicialComplex:
    try:
        n = int(obj["n"])
        status = obj.get("status", "nonvoid")
        facets = obj.get("facets", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(path, None, f"bad complex JSON: {exc}") from None
    if status == "void":
        if facets:
            raise ParseError(path, None, "a void complex cannot list facets")
        return SimplicialComplex.void(n)
    if status != "nonvoid":
        raise ParseError(path, None, f"unknown status {status!r}")
    try:
        if not facets:
            return SimplicialComplex.empty(n)
        return SimplicialComplex.from_facets(n, facets)
    except ComplexError as exc:
        raise ParseError(path, None, str(exc)) from None


def parse_ideal(text: str, path: str = "<string>") -> MonomialIdeal:
    lines = iter(_content_lines(text))
    _, n = _header(lines, "vars", path)
    gens = []
    for no, line in lines:
        row = _int_row(no, line, n, path)
        if not row:
            raise ParseError(path, no, "empty generator (unit ideal)")
        gens.append(row)
    return MonomialIdeal.from_supports(n, gens)


def format_ideal(ideal: MonomialIdeal) -> str:
    return "\n".join([f"vars {ideal.n}"] + [" ".join(map(str, s)) for s in ideal.supports]) + "\n"


def parse_family(text: str, path: str = "<string>") -> SetFamily:
    lines = iter(_content_lines(text))
    _, g = _header(lines, "ground", path)
    sets = []
    for no, line in lines:
        sets.append([] if line == "-" else _int_row(no, line, g, path))
    if not sets:
        raise ParseError(path, None, "family has no members")
    return SetFamily.of(g, sets)


def format_family(fam: SetFamily) -> str:
    rows = [" ".join(map(str, sorted(s))) or "-" for s in fam.sets]
    return "\n".join([f"ground {fam.ground_size}"] + rows) + "\n"


def load_complex(path: str | Path) -> SimplicialComplex:
    """Read a complex from ``.cplx``, ``.json`` or ``.ideal`` (Stanley-Reisner complex)."""
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(p), exc.lineno, exc.msg) from None
        return complex_from_json(obj, str(p))
    first = next((line for _, line in _content_lines(text)), "")
    if p.suffix == ".ideal" or first.startswith("vars"):
        return complex_of_ideal(parse_ideal(text, str(p)))
    return parse_cplx(text, str(p))


def load_family(path: str | Path) -> SetFamily:
    p = Path(path)
    return parse_family(p.read_text(), str(p))


def face_str(mask_or_face) -> str:
    face = from_mask(mask_or_face) if isinstance(mask_or_face, int) else tuple(mask_or_face)
    return "{" + ",".join(map(str, face)) + "}"

