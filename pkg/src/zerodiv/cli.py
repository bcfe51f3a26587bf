"""Command-line front end: ``zerodiv <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import export
from .boxkites import Context, discover_boxkites, sail_trip_system
from .cdp_core import MAX_N, enumerate_trips, orient_trip, rule1_trips, rule2_trips, unit_product
from .emanation import build_table, census
from .errors import OutOfScopeError, ZeroDivisorError
from .genealogy import genealogy_run, pathion_family
from .verify import check_census, check_flipbook, check_genealogy, run_all


def parse_range(text: str) -> list[int]:
    """``"5"`` -> [5]; ``"4..6"`` -> [4, 5, 6]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _n_arg(value: str) -> int:
    n = int(value)
    if not 1 <= n <= MAX_N:
        raise argparse.ArgumentTypeError(f"N must be in 1..{MAX_N}")
    return n


def _emit(args, text: str | bytes) -> None:
    path = getattr(args, "output", None)
    if path:
        mode = "wb" if isinstance(text, bytes) else "w"
        kw = {} if mode == "wb" else {"encoding": "utf-8", "newline": "\n"}
        with open(path, mode, **kw) as fh:
            fh.write(text)
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
    else:
        sys.stdout.write(text)


def cmd_product(args) -> int:
    res = unit_product(args.p, args.q, args.n)
    line = str(res)
    if args.bits:
        line += f"  {args.p:0{args.n}b} * {args.q:0{args.n}b} -> {res.index:0{args.n}b}"
    print(line)
    return 0


def cmd_trips(args) -> int:
    if args.rule1 is not None:
        trips = rule1_trips(args.rule1)
    elif args.rule2 is not None:
        base = orient_trip(int(x) for x in args.rule2.split(","))
        trips = rule2_trips(base, args.g)
    else:
        trips = enumerate_trips(args.n)
    if args.count:
        print(len(trips))
    else:
        for t in trips:
            print(t)
    return 0


def cmd_et(args) -> int:
    et = build_table(Context(args.n, args.s), jobs=args.jobs)
    if args.format == "ascii":
        out = export.to_ascii(et, args.bits)
    elif args.format == "csv":
        out = export.to_csv(et, args.bits)
    elif args.format == "pgm":
        out = export.to_pgm(et, binary=args.binary)
    else:
        out = export.to_json(et, args.bits)
    _emit(args, out)
    return 0


def cmd_render(args) -> int:
    et = build_table(Context(args.n, args.s), jobs=args.jobs)
    _emit(args, export.to_pgm(et, binary=True, scale=args.scale))
    return 0


def _kite_doc(bk) -> dict:
    doc = {
        "labels": list(bk.labels),
        "zigzag": list(bk.zigzag),
        "type": bk.kite_type.value,
        "edges": {k: s.symbol for k, s in bk.edges},
        "sails": {name: {"l_trip": list(st.l_trip), "u_trips": [list(t) for t in st.u_trips]}
                  for name in ("ABC", "ADE", "FDB", "FEC")
                  for st in [sail_trip_system(bk, name)]},
    }
    if bk.ctx.N == 5:
        doc["family"] = pathion_family(bk.ctx.S, bk)
    return doc


def cmd_boxkites(args) -> int:
    ctx = Context(args.n, args.s)
    kites = discover_boxkites(ctx)
    if args.format == "json":
        print(json.dumps({"N": ctx.N, "S": ctx.S, "count": len(kites),
                          "boxkites": [_kite_doc(k) for k in kites]}))
        return 0
    print(f"N={ctx.N} S={ctx.S} G={ctx.G} X={ctx.X}: {len(kites)} box-kites")
    for k in kites:
        extra = f" {pathion_family(ctx.S, k)}" if ctx.N == 5 else ""
        print(f"{k} {k.kite_type.value}{extra}")
    return 0


def cmd_census(args) -> int:
    rows = census(args.n, jobs=args.jobs)
    total = sum(r.boxkites for r in rows)
    type_ii = sum(r.type_ii for r in rows)
    if args.format == "json":
        doc = {
            "N": args.n,
            "total": total,
            "type_ii": type_ii,
            "rows": [{"S": r.S, "band": str(r.band), "band_note": r.band.note,
                      "boxkites": r.boxkites, "type_ii": r.type_ii, "filled": r.filled,
                      "near_solid_lines": list(r.near_solid_lines)} for r in rows],
        }
        print(json.dumps(doc))
        return 0
    print(f"{'S':>4} {'band':>13} {'boxkites':>9} {'typeII':>7} {'filled':>8}")
    for r in rows:
        print(f"{r.S:>4} {str(r.band):>13} {r.boxkites:>9} {r.type_ii:>7} {r.filled:>8}")
    print(f"total {total} box-kites, {type_ii} Type II")
    return 0


def _genealogy_doc(levels) -> list:
    out = []
    for lvl in levels:
        entry = {"N": lvl.N, "count": len(lvl.zigzags),
                 "zigzags": [{"trip": list(t), "role": lvl.role(t)} for t in lvl.zigzags]}
        m = lvl.machine
        if m is not None:
            entry["g"] = m.g
            entry["rule0"] = [list(t) for t in m.rule0_padded]
            entry["rule1"] = [list(z) for z in m.median_zigzags]
            entry["rule1_redundant"] = [
                {"trip": list(r.rule1), "zigzag": list(r.zigzag),
                 "parents": [list(p) for p in r.parents]} for r in m.redundant]
            entry["rule2"] = [{"parent": list(p), "sides": [list(t) for t in ts]}
                              for p, ts in m.rule2_sides]
            entry["raw"] = m.raw_count
        out.append(entry)
    return out


def cmd_genealogy(args) -> int:
    levels = genealogy_run(args.s, args.nmax)
    if args.format == "json":
        print(json.dumps({"S": args.s, "levels": _genealogy_doc(levels)}))
        return 0
    for lvl in levels:
        m = lvl.machine
        print(f"N={lvl.N}: {len(lvl.zigzags)} zigzags")
        if m is None:
            print(f"  seed: {lvl.zigzags[0]}")
            continue
        print("  Rule 0: " + "; ".join(map(str, m.rule0_padded)))
        print("  Rule 1: " + "; ".join(map(str, m.median_zigzags)))
        for r in m.redundant:
            print(f"    redundant {r.rule1} -> (f,d,b) of {r.zigzag}")
        print("  Rule 2:")
        for p, ts in m.rule2_sides:
            print(f"    {p} -> " + "; ".join(map(str, ts)))
        print(f"  raw {m.raw_count}, distinct {len(lvl.zigzags)}")
    return 0


def cmd_verify(args) -> int:
    n_values = args.n
    if any(not 4 <= n <= MAX_N for n in n_values):
        raise OutOfScopeError(f"verify needs N within 4..{MAX_N}")
    if args.census:
        checks = [check_census(n, args.jobs) for n in n_values]
    elif args.flipbook:
        checks = [check_flipbook()]
    elif args.genealogy:
        checks = [check_genealogy(s, min(max(n_values), 7)) for s in (args.s or range(1, 8))]
    else:
        checks = run_all(n_values, thm=args.thm, jobs=args.jobs)
    report = {"passed": all(c.passed for c in checks), "checks": [c.as_dict() for c in checks]}
    text = json.dumps(report, default=str)
    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name}", file=sys.stderr)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    jobs_default = os.cpu_count() or 1
    p = argparse.ArgumentParser(prog="zerodiv", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("product", help="product of two basis units")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("--n", type=_n_arg, required=True)
    sp.add_argument("--bits", action="store_true")
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("trips", help="list trips")
    sp.add_argument("--n", type=_n_arg, default=3)
    sp.add_argument("--rule1", type=int, metavar="G")
    sp.add_argument("--rule2", metavar="X,Y,Z")
    sp.add_argument("--g", type=int, help="generator for --rule2")
    sp.add_argument("--count", action="store_true")
    sp.set_defaults(func=cmd_trips)

    for name, func, helptext in (("et", cmd_et, "emanation table"),
                                 ("render", cmd_render, "write a binary PGM image")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--n", type=_n_arg, required=True)
        sp.add_argument("--s", type=int, required=True)
        sp.add_argument("--jobs", type=int, default=jobs_default)
        sp.add_argument("--output", "-o")
        if name == "et":
            sp.add_argument("--format", choices=("ascii", "csv", "pgm", "json"), default="ascii")
            sp.add_argument("--binary", action="store_true", help="P5 instead of P2 for pgm")
            sp.add_argument("--bits", action="store_true")
        else:
            sp.add_argument("--scale", type=int, default=1)
        sp.set_defaults(func=func)

    sp = sub.add_parser("boxkites", help="discover box-kites")
    sp.add_argument("--n", type=_n_arg, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_boxkites)

    sp = sub.add_parser("census", help="box-kite counts for every S")
    sp.add_argument("--n", type=_n_arg, required=True)
    sp.add_argument("--jobs", type=int, default=jobs_default)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("genealogy", help="fixed-S zigzag genealogy")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--nmax", type=int, default=6)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_genealogy)

    sp = sub.add_parser("verify", help="run the invariant suites")
    sp.add_argument("--n", type=parse_range, default=[4, 5, 6])
    sp.add_argument("--s", type=parse_range)
    sp.add_argument("--thm", type=int, choices=(8, 9, 10),
                    help="8: fill counts divide by 24; 9: full tables for S < 8; 10: number hub")
    sp.add_argument("--census", action="store_true")
    sp.add_argument("--flipbook", action="store_true")
    sp.add_argument("--genealogy", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--report", help="write the JSON report here instead of stdout")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ZeroDivisorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
