"""Command line interface: ``mvpoly <subcommand> ...``.

Weights are comma-separated integers in the fundamental-weight basis.
Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  ``MVPOLY_DATA_DIR`` overrides the directory of shipped tables.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import figures
from . import geometry as geo
from .calibration import CalibrationError, calibrate_group
from .hopf import CONVENTIONS, DEFAULT_CONVENTION
from .mvcalc import (
    dimension_identity,
    mv_polytopes,
    tensor_decompose,
    tensor_multiplicity,
    tensor_witnesses,
    weight_count,
)
from .rootsys import SUPPORTED_GROUPS, fund_to_root, is_dominant, load_root_system, weyl_dimension
from .suite import run_suite
from .tables import TableError, builtin_table, data_dir, dumps_table, load_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
_NEGATIVE_TUPLE = re.compile(r"^-\d+(,-?\d+)*$")


class UsageError(Exception):
    pass


def _tuple(text: str, rank: int, what: str):
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} {text!r}: expected comma-separated integers") from None
    if len(vals) != rank:
        raise UsageError(f"{what} {text!r}: expected {rank} entries for this group")
    return vals


def _weight(text: str, rank: int, what: str, dominant: bool = False):
    w = _tuple(text, rank, what)
    if dominant and not is_dominant(w):
        raise UsageError(f"{what} {text!r} is not dominant")
    return w


def _table(args):
    if getattr(args, "table", None):
        return load_table(args.table)
    return builtin_table(args.group)


def _fmt_weight(w) -> str:
    return ",".join(str(c) for c in w)


def _emit_json(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


# --------------------------------------------------------------- commands

def cmd_mult(args) -> int:
    t = _table(args)
    rs = load_root_system(t.group)
    lam = _weight(args.lam, rs.rank, "lambda", dominant=True)
    nu = _weight(args.nu, rs.rank, "nu")
    inside, total, excluded = weight_count(t, rs, lam, nu)
    if args.json:
        doc = {"group": t.group, "lambda": list(lam), "nu": list(nu), "multiplicity": inside,
               "contained": inside, "total": total}
        if args.excluded:
            doc["excluded"] = [str(m) for m in excluded]
        _emit_json(doc)
        return EXIT_OK
    print(f"multiplicity of weight {_fmt_weight(nu)} in V({_fmt_weight(lam)}) for {t.group}: {inside}")
    print(f"  {inside} of {total} contained")
    if args.excluded:
        for m in excluded:
            print(f"  excluded: {m}")
    return EXIT_OK


def cmd_tensor(args) -> int:
    t = _table(args)
    rs = load_root_system(t.group)
    lam = _weight(args.lam, rs.rank, "lambda", dominant=True)
    mu = _weight(args.mu, rs.rank, "mu", dominant=True)
    if args.nu is not None:
        nu = _weight(args.nu, rs.rank, "nu", dominant=True)
        n = tensor_multiplicity(t, rs, lam, mu, nu)
        if args.json:
            _emit_json({"group": t.group, "lambda": list(lam), "mu": list(mu), "nu": list(nu),
                        "multiplicity": n, "witnesses": [str(m) for m in tensor_witnesses(t, rs, lam, mu, nu)]})
        else:
            print(n)
        return EXIT_OK
    dec = tensor_decompose(t, rs, lam, mu)
    ok = dimension_identity(rs, lam, mu, dec)
    lhs = sum(n * weyl_dimension(rs, nu) for nu, n in dec.items())
    rhs = weyl_dimension(rs, lam) * weyl_dimension(rs, mu)
    if args.json:
        _emit_json({"group": t.group, "lambda": list(lam), "mu": list(mu),
                    "decomposition": [{"nu": list(nu), "multiplicity": n} for nu, n in dec.items()],
                    "dimension_identity": {"sum": lhs, "product": rhs, "holds": ok}})
    else:
        for nu, n in sorted(dec.items(), reverse=True):
            print(f"{_fmt_weight(nu)}:{n}")
        print(f"dimension check: sum N*dim = {lhs}, dim*dim = {rhs}: {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_list_polytopes(args) -> int:
    t = _table(args)
    rs = load_root_system(t.group)
    raw = _tuple(args.nu, rs.rank, "nu")
    nu = raw if args.basis == "root" else fund_to_root(rs, raw)
    if not all(isinstance(c, int) and c <= 0 for c in nu):
        raise UsageError(f"nu {args.nu!r} is not in the negative root semigroup")
    mv = mv_polytopes(t, nu)
    entries = [(str(m), P) for m, P in mv.entries]
    if args.json:
        _emit_json({"group": t.group, "degree": list(nu), "polytopes": [
            {"monomial": lbl, "vertices": geo.polytope_to_json(P)} for lbl, P in entries]})
    else:
        print(f"{len(entries)} MV polytope(s) of degree {_fmt_weight(nu)} (simple-root coordinates)")
        for lbl, P in entries:
            print(f"  {lbl:<16} {P}")
    if args.svg:
        out = Path(args.svg)
        out.mkdir(parents=True, exist_ok=True)
        stem = "deg_" + "_".join(str(-c) for c in nu)
        written = []
        if rs.rank <= 2:
            for i, (lbl, P) in enumerate(entries):
                name = out / f"{stem}_{i + 1}.svg"
                name.write_text(figures.polytope_svg(rs, P, lbl, args.projection), encoding="utf-8")
                written.append(name)
            name = out / f"{stem}_all.svg"
            name.write_text(figures.combined_svg(rs, entries, args.projection, f"{t.group} degree {_fmt_weight(nu)}"),
                            encoding="utf-8")
            written.append(name)
        else:
            name = out / f"{stem}_scene.json"
            name.write_text(figures.scene_json(t.group, nu, entries), encoding="utf-8")
            written.append(name)
        for name in written:
            print(f"wrote {name}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    t = _table(args)
    if args.hopf and t.group != "C2":
        raise UsageError("--hopf applies to the C2 table only")
    rep = run_suite(t, args.height, args.coords, args.hopf, args.convention, args.tensor_coords)
    print(rep.summary())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_calibrate(args) -> int:
    try:
        result = calibrate_group(args.group)
    except CalibrationError as exc:
        print(f"calibration failed: {exc}", file=sys.stderr)
        for i, sol in enumerate(exc.solutions):
            print(f"--- candidate {i + 1}", file=sys.stderr)
            sys.stderr.write(dumps_table(sol))
        return EXIT_FAIL
    text = dumps_table(result.table)
    print(result.certificate(), file=sys.stderr)
    shipped = data_dir() / f"{args.group}.json"
    if shipped.exists():
        same = shipped.read_text(encoding="utf-8") == text
        print(f"  byte-identical to {shipped}: {'yes' if same else 'NO'}", file=sys.stderr)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mvpoly", description="Representation multiplicities from MV polytopes.")
    sub = p.add_subparsers(dest="command", required=True)

    def group_arg(sp, choices=SUPPORTED_GROUPS):
        sp.add_argument("group", choices=choices)

    def table_arg(sp):
        sp.add_argument("--table", help="table file to use instead of the shipped one")

    sp = sub.add_parser("mult", help="weight multiplicity of nu in V(lambda)")
    group_arg(sp)
    sp.add_argument("lam", metavar="LAMBDA")
    sp.add_argument("nu", metavar="NU")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--excluded", action="store_true", help="list the monomials whose polytope sticks out")
    table_arg(sp)
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("tensor", help="tensor product multiplicities")
    group_arg(sp)
    sp.add_argument("lam", metavar="LAMBDA")
    sp.add_argument("mu", metavar="MU")
    sp.add_argument("nu", metavar="NU", nargs="?")
    sp.add_argument("--json", action="store_true")
    table_arg(sp)
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("list-polytopes", help="MV polytopes of one degree")
    group_arg(sp)
    sp.add_argument("nu", metavar="NU", help="degree, e.g. -1,-1")
    sp.add_argument("--basis", choices=("root", "fund"), default="root",
                    help="basis of NU (default: simple roots)")
    sp.add_argument("--svg", metavar="DIR", help="write SVG figures (rank <= 2) or a JSON scene (rank 3)")
    sp.add_argument("--projection", choices=("euclid", "chart"), default="euclid")
    sp.add_argument("--json", action="store_true")
    table_arg(sp)
    sp.set_defaults(func=cmd_list_polytopes)

    sp = sub.add_parser("verify", help="run the invariant and oracle suite")
    group_arg(sp)
    sp.add_argument("--height", type=int, default=8)
    sp.add_argument("--coords", type=int, default=2)
    sp.add_argument("--tensor-coords", type=int, default=None,
                    help="coordinate bound for the tensor batteries (default: --coords)")
    sp.add_argument("--hopf", action="store_true", help="also check the Sp4 coproduct table (C2)")
    sp.add_argument("--convention", choices=CONVENTIONS, default=DEFAULT_CONVENTION)
    table_arg(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("calibrate", help="regenerate a shipped table by search")
    group_arg(sp)
    sp.add_argument("--out", metavar="FILE", help="write the table here instead of stdout")
    sp.set_defaults(func=cmd_calibrate)
    # tuples such as -1,-2 are values, not option flags
    for parser in (p, *sub.choices.values()):
        parser._negative_number_matcher = _NEGATIVE_TUPLE
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mvpoly {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TableError, FileNotFoundError) as exc:
        print(f"mvpoly {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"mvpoly {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
