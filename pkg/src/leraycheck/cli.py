"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 a verified inequality failed
(counterexamples are written to ``--dump-dir``).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import algebra, bounds, generators, leray
from .complex import ComplexError, SimplicialComplex, intersection, union
from .formats import (
    ParseError,
    complex_to_json,
    face_str,
    format_cplx,
    format_family,
    load_complex,
    load_family,
)
from .homology import reduced_betti
from .linalg import FieldSpec

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

DEFAULT_CAPS = {"homology": 24, "p": 14, "helly": 16}

log = logging.getLogger("leraycheck")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cap(args, kind: str) -> int:
    if args.max_n is not None:
        return args.max_n
    env = os.environ.get("LERAY_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"LERAY_MAX_N must be an integer, got {env!r}") from None
    return DEFAULT_CAPS[kind]


def _guard(n: int, args, kind: str, what: str = "ground set") -> None:
    cap = _cap(args, kind)
    if n > cap:
        raise UsageError(f"{what} of size {n} exceeds cap {cap}; override with --max-n or LERAY_MAX_N")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _load(args, path: str, kind: str = "homology") -> SimplicialComplex:
    x = load_complex(path)
    _guard(x.n, args, kind)
    return x


# -- single-complex commands -------------------------------------------------

def cmd_homology(args) -> int:
    x = _load(args, args.file)
    hv = reduced_betti(x, args.field)
    degrees = range(-1, max(x.dim, -1) + 1)
    payload = {"field": str(args.field), "reduced_betti": {str(d): hv[d] for d in degrees}}
    text = "\n".join(f"h~[{d}] = {hv[d]}" for d in degrees)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_leray(args) -> int:
    x = _load(args, args.file)
    results = {}
    cap = _cap(args, "homology")
    if args.method in ("induced", "both"):
        results["induced"] = leray.leray_witness(x, args.field, max_n=cap)
    if args.method in ("links", "both"):
        results["links"] = leray.leray_links_witness(x, args.field, max_n=cap)
    payload = {
        "field": str(args.field),
        "leray": {
            m: {"L": r.value, "witness": None if r.witness is None else list(r.witness), "degree": r.degree}
            for m, r in results.items()
        },
    }
    lines = []
    for m, r in results.items():
        what = "S" if m == "induced" else "face"
        wit = "" if r.witness is None else f"; witness {what}={face_str(r.witness)}, degree {r.degree}"
        lines.append(f"L = {r.value}  ({m}{wit})")
    _emit(args, payload, "\n".join(lines))
    values = {r.value for r in results.values()}
    if len(values) > 1:
        print("methods disagree", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_betti(args) -> int:
    x = _load(args, args.file)
    table = algebra.betti_table(x, args.field, max_n=_cap(args, "homology"))
    rows = table.rows()
    text = "\n".join(f"beta[{i},{j}] = {b}" for i, j, b in rows) or "(zero ideal: empty table)"
    if args.json:
        print(json.dumps(rows))
    else:
        print(text)
    return EXIT_OK


def cmd_reg(args) -> int:
    x = _load(args, args.file)
    reg = algebra.betti_table(x, args.field, max_n=_cap(args, "homology")).regularity()
    text = f"reg(I_X) = {reg if reg is not None else 'undefined (zero ideal)'}"
    _emit(args, {"field": str(args.field), "regularity": reg}, text)
    return EXIT_OK


def cmd_pd(args) -> int:
    x = _load(args, args.file)
    top = algebra.betti_table(x, args.field, max_n=_cap(args, "homology")).max_homological_degree()
    pd_quot = 0 if top is None else top + 1
    text = f"pd(S/I_X) = {pd_quot}\npd(I_X) = {top if top is not None else 'undefined (zero ideal)'}"
    _emit(args, {"field": str(args.field), "pd_quotient": pd_quot, "pd_ideal": top}, text)
    return EXIT_OK


def _write_or_print(args, x: SimplicialComplex, comment: str) -> None:
    if args.json:
        out = json.dumps(complex_to_json(x), sort_keys=True)
    else:
        out = format_cplx(x, comment).rstrip("\n")
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out)


def cmd_dual(args) -> int:
    x = _load(args, args.file)
    _write_or_print(args, x.alexander_dual(), f"Alexander dual of {args.file}")
    return EXIT_OK


def cmd_nerve(args) -> int:
    fam = load_family(args.file)
    _guard(len(fam), args, "homology", "family")
    _write_or_print(args, bounds.nerve(fam), f"nerve of {args.file}; vertex i = member i")
    return EXIT_OK


def cmd_helly(args) -> int:
    fam = load_family(args.file)
    _guard(len(fam), args, "helly", "family")
    h = bounds.helly_number(fam, max_size=None)
    bound = 1 + leray.leray_number(bounds.nerve(fam), args.field, max_n=None)
    _emit(args, {"helly": h, "one_plus_leray_nerve": bound}, f"h(F) = {h}\n1 + L(N(F)) = {bound}")
    return EXIT_OK if h <= bound else EXIT_VIOLATION


# -- generation ---------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.model == "lm":
        if args.d is None:
            raise UsageError("gen lm needs --d")
        _guard(args.n, args, "homology")
        outs = [("", generators.random_lm(args.n, args.d, args.p, args.seed))]
    elif args.model == "flag":
        _guard(args.n, args, "homology")
        outs = [("", generators.random_flag(args.n, args.p, args.seed))]
    else:
        if not args.blocks:
            raise UsageError("gen joinexample needs block sizes, e.g. 'gen joinexample 3 3'")
        _guard(sum(args.blocks), args, "homology")
        fam = generators.paper_join_family(args.blocks)
        outs = [(f"_X{i + 1}", x) for i, x in enumerate(fam)]
        outs += [("_intersection", intersection(*fam)), ("_union", union(*fam))]
    if args.out is None:
        for suffix, x in outs:
            print(format_cplx(x, f"{args.model}{suffix}").rstrip("\n"))
        return EXIT_OK
    base = Path(args.out)
    for suffix, x in outs:
        path = base if not suffix else base.with_name(base.stem + suffix + (base.suffix or ".cplx"))
        path.write_text(format_cplx(x, f"{args.model}{suffix}"))
        print(path)
    return EXIT_OK


# -- verification ------------------------------------------------------------

def _parse_random(tokens: Sequence[str]) -> dict:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"--random expects key=value pairs, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def _checks_of_report(rep) -> list[dict]:
    return [{"check": c, "k": k} for c, k in rep.violations()]


def _check_inequality_report(rep) -> list[dict]:
    return [{"check": c, "k": None} for c in rep.violations()]


def _v_thm1(cs, args):
    rep = bounds.verify_theorem1(cs[0], cs[1], args.field)
    rows = [{"k": r.k, "lhs": r.lhs, "rhs": r.rhs, "relative": r.relative, "e1": r.e1_total} for r in rep.rows]
    return _checks_of_report(rep), {"rows": rows}


def _v_thm2(cs, args):
    rep = bounds.verify_theorem2(cs, args.field)
    row = rep.rows[0]
    return _checks_of_report(rep), {
        "leray": row.leray,
        "intersection": row.intersection,
        "union": row.union,
        "intersection_slack": row.intersection_slack,
        "union_slack": row.union_slack,
    }


def _v_mono(cs, args):
    rep = algebra.check_theorem_mono(cs[0], cs[1], args.field)
    return _check_inequality_report(rep), {"values": rep.values, "skipped": rep.skipped}


def _v_proj(cs, args):
    rep = algebra.check_theorem_proj(cs[0], cs[1], args.field)
    return _check_inequality_report(rep), {"values": rep.values, "skipped": rep.skipped}


def _v_terai(cs, args):
    x = cs[0]
    if x.is_full_simplex():
        return [], {"skipped": "full simplex"}
    pd, reg = algebra.terai_check(x, args.field)
    bad = [] if pd == reg else [{"check": "pd(S/I_X) == reg(I_X*)", "k": None}]
    return bad, {"pd_quotient": pd, "reg_dual": reg}


def _v_mv(cs, args):
    rep = bounds.mayer_vietoris_check(cs[0], cs[1], args.field)
    return _checks_of_report(rep), {}


def _v_folk(cs, args):
    x = cs[0]
    a = leray.leray_number(x, args.field)
    b = leray.leray_number_via_links(x, args.field)
    bad = [] if a == b else [{"check": "L(induced) == L(links)", "k": None}]
    detail = {"induced": a, "links": b}
    if x.n <= _cap(args, "p"):
        table = leray.PConditionTable(x, args.field, max_n=None)
        n = x.n
        for d in range(0, n + 1):
            for k in range(0, n + 1):
                for m in range(1, n + 1):
                    if table.holds(d, k, m) != table.holds(d, k + 1, m - 1):
                        bad.append({"check": f"P({k},{m}) <=> P({k + 1},{m - 1}) at d={d}", "k": None})
        if table.holds(a, n, 0) is not True or table.holds(b, 0, n) is not True:
            bad.append({"check": "P(n,0)/P(0,n) at d=L", "k": None})
    else:
        detail["p_sweep"] = "skipped (n above cap)"
    return bad, detail


VERIFIERS: dict[str, tuple[int, Callable]] = {
    # name -> (number of complexes, function); 0 means "any number >= 1"
    "thm1": (2, _v_thm1),
    "thm2": (0, _v_thm2),
    "mono": (2, _v_mono),
    "proj": (2, _v_proj),
    "terai": (1, _v_terai),
    "mv": (2, _v_mv),
    "folk": (1, _v_folk),
}


def _dump(args, trial, cs, violations, manifest) -> list[str]:
    d = Path(args.dump_dir)
    d.mkdir(parents=True, exist_ok=True)
    files = []
    for i, c in enumerate(cs):
        path = d / f"{args.kind}_trial{trial}_{i}.cplx"
        if isinstance(c, bounds.SetFamily):
            path = path.with_suffix(".fam")
            path.write_text(format_family(c))
        else:
            path.write_text(format_cplx(c, f"counterexample for {args.kind}, trial {trial}"))
        files.append(str(path))
    for v in violations:
        manifest.append({"kind": args.kind, "trial": trial, "field": str(args.field), **v, "files": files})
    return files


def _random_inputs(args, params: dict):
    try:
        n = int(params.get("n", 6))
        trials = int(params.get("trials", 10))
        seed = int(params.get("seed", 0))
        r = int(params.get("r", 2))
        model = params.get("model", "mix")
        ground = int(params.get("ground", 6))
        size = int(params.get("size", 6))
    except ValueError as exc:
        raise UsageError(f"bad --random value: {exc}") from None
    if args.kind == "helly":
        _guard(size, args, "helly", "family")
        for t in range(trials):
            yield t, [generators.random_family(ground, size, generators.trial_seed(seed, t))]
        return
    _guard(n, args, "p" if args.kind == "folk" else "homology")
    count = VERIFIERS[args.kind][0] or r
    for t in range(trials):
        base = generators.trial_seed(seed, t)
        yield t, [generators.random_complex(n, model, base + i) for i in range(count)]


def _file_inputs(args):
    paths = list(args.file or [])
    if args.file2:
        paths.append(args.file2)
    if args.kind == "helly":
        if len(paths) != 1:
            raise UsageError("verify helly needs exactly one --file (.fam)")
        fam = load_family(paths[0])
        _guard(len(fam), args, "helly", "family")
        return [(0, [fam])]
    need = VERIFIERS[args.kind][0]
    if need and len(paths) != need:
        raise UsageError(f"verify {args.kind} needs {need} complex file(s)")
    if not paths:
        raise UsageError("no input: give --file or --random")
    cs = [_load(args, p) for p in paths]
    if len({c.n for c in cs}) > 1:
        raise UsageError("input complexes have different ground sets")
    return [(0, cs)]


def _v_helly(cs, args):
    fam = cs[0]
    h, bound = bounds.helly_check(fam, args.field)
    bad = [] if h <= bound else [{"check": "h(F) <= 1 + L(N(F))", "k": None}]
    return bad, {"helly": h, "one_plus_leray_nerve": bound}


def cmd_verify(args) -> int:
    inputs = _random_inputs(args, _parse_random(args.random)) if args.random else _file_inputs(args)
    fn = _v_helly if args.kind == "helly" else VERIFIERS[args.kind][1]
    trials = []
    manifest: list[dict] = []
    for t, cs in inputs:
        bad, detail = fn(cs, args)
        entry = {"trial": t, "ok": not bad, "violations": bad, "detail": detail}
        if bad:
            entry["files"] = _dump(args, t, cs, bad, manifest)
        trials.append(entry)
    if manifest:
        d = Path(args.dump_dir)
        (d / f"{args.kind}_manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True))
    n_bad = sum(1 for e in trials if not e["ok"])
    summary = {"kind": args.kind, "field": str(args.field), "trials": len(trials), "violations": n_bad}
    if args.report == "json" or args.json:
        print(json.dumps({**summary, "results": trials}, sort_keys=True, default=str))
    else:
        for e in trials:
            status = "ok" if e["ok"] else "VIOLATION " + "; ".join(
                v["check"] + (f" (k={v['k']})" if v["k"] is not None else "") for v in e["violations"]
            )
            print(f"trial {e['trial']}: {status}")
        print(f"{args.kind}: {len(trials)} trials, {n_bad} with violations (field {args.field})")
    return EXIT_VIOLATION if n_bad else EXIT_OK


# -- argument parsing ---------------------------------------------------------

def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldSpec(2), help="gf:<p> or q (default gf:2)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--max-n", type=int, default=None, help="override the ground-set size cap")

    p = _Parser(prog="leraycheck", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, helptext in [
        ("homology", cmd_homology, "reduced Betti numbers"),
        ("betti", cmd_betti, "graded Betti table of I_X (Hochster)"),
        ("reg", cmd_reg, "regularity of I_X"),
        ("pd", cmd_pd, "projective dimensions of S/I_X and I_X"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file", help=".cplx, .json or .ideal")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("leray", parents=[common], help="Leray number")
    sp.add_argument("file")
    sp.add_argument("--method", choices=["induced", "links", "both"], default="induced")
    sp.set_defaults(func=cmd_leray)

    for name, fn, helptext in [("dual", cmd_dual, "Alexander dual"), ("nerve", cmd_nerve, "nerve of a .fam family")]:
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file")
        sp.add_argument("--out", help="write the result here instead of stdout")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("helly", parents=[common], help="Helly number of a .fam family")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_helly)

    sp = sub.add_parser(
        "gen",
        parents=[common],
        help="generate complexes",
        description="joinexample writes X_1..X_r, their intersection and union; "
        "block i occupies the next a_i consecutive vertex indices.",
    )
    sp.add_argument("model", choices=["lm", "flag", "joinexample"])
    sp.add_argument("blocks", nargs="*", type=int, help="block sizes for joinexample")
    sp.add_argument("--n", type=int, default=6)
    sp.add_argument("--d", type=int, default=None)
    sp.add_argument("--p", type=float, default=0.5)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", help="output path (joinexample appends _X1, ... to the stem)")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", parents=[common], help="check an inequality on files or a random corpus")
    sp.add_argument("kind", choices=sorted(list(VERIFIERS) + ["helly"]))
    sp.add_argument("--file", action="append", help="input file (repeat for families)")
    sp.add_argument("--file2", help="second complex")
    sp.add_argument("--random", nargs="+", metavar="KEY=VALUE", help="n=, trials=, seed=, model=lm|flag|mix, r=, ground=, size=")
    sp.add_argument("--report", choices=["text", "json"], default="text")
    sp.add_argument("--dump-dir", default="counterexamples")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, argument errors exit 1
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, ParseError, ComplexError, OSError, ValueError) as exc:
        print(f"leraycheck: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
