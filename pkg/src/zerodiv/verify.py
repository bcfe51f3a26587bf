"""Whole-range checks of the box-kite laws, shared by the CLI and the tests.

Each suite returns a list of :class:`Check` records instead of raising, so a
single run can report every violation at once.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .boxkites import Context, EdgeSign, KiteType, assessor_of, dmz_edge, vizier_check
from .cdp_core import enumerate_trips, trip_count, unit_product
from .doubling import calibrate_convention, doubling_product
from .emanation import (
    boxkites_from_table,
    build_table,
    census,
    extract_zigzags,
    fill_stats,
    flipbook,
    max_fill,
)
from .errors import ZeroDivisorError
from .genealogy import genealogy_run, pathion_family


@dataclass
class Check:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return asdict(self)


def _guard(name: str, fn) -> Check:
    try:
        return fn()
    except ZeroDivisorError as exc:
        return Check(name, False, {"error": f"{type(exc).__name__}: {exc}"})


def check_oracle(N_max: int = 7) -> Check:
    """Trip-rule products equal calibrated doubling products on every pair."""
    def run():
        conv = calibrate_convention(N_max)
        size = 1 << N_max
        bad = [(p, q) for p in range(size) for q in range(size)
               if unit_product(p, q, N_max) != doubling_product(p, q, N_max, conv)]
        return Check(f"oracle N<={N_max}", not bad,
                     {"convention": conv.formula, "pairs": size * size, "mismatches": bad[:10]})
    return _guard(f"oracle N<={N_max}", run)


def check_fill_divisibility(N: int) -> Check:
    def run():
        counts = {}
        bad = []
        for S in range(1, 1 << (N - 1)):
            n = build_table(Context(N, S)).filled
            counts[S] = n
            if n % 24:
                bad.append(S)
        return Check(f"fill24 N={N}", not bad, {"filled": counts, "violations": bad})
    return _guard(f"fill24 N={N}", run)


def check_full_tables(N: int) -> Check:
    def run():
        rows = {}
        ok = True
        for S in range(1, 8):
            ctx = Context(N, S)
            et = build_table(ctx)
            stats = fill_stats(et)
            kites = boxkites_from_table(et)
            full = stats.full and stats.filled == max_fill(ctx)
            ok &= full and len(kites) == trip_count(N - 2)
            rows[S] = {"filled": stats.filled, "boxkites": len(kites)}
        return Check(f"full N={N}", ok, {"expected_boxkites": trip_count(N - 2), "per_S": rows})
    return _guard(f"full N={N}", run)


def check_number_hub(N: int) -> Check:
    def run():
        ctx = Context(N, 1 << (N - 2))
        g = ctx.g
        et = build_table(ctx)
        stats = fill_stats(et)
        low = [i for i, L in enumerate(et.labels) if L < g]
        quad = et.marks[np.ix_(low, low)]
        off_diag = ~np.eye(len(low), dtype=bool)
        quadrant_red = bool(np.all(quad[off_diag] == EdgeSign.RED))
        zigzags = extract_zigzags(et)
        atlas = zigzags == set(enumerate_trips(N - 2))
        kites = boxkites_from_table(et)
        sextets = all(max(a, b, c) < g and k.labels == (a, b, c, g + c, g + b, g + a)
                      for k in kites for a, b, c in [k.labels[:3]])
        ok = stats.full and quadrant_red and atlas and sextets and len(kites) == trip_count(N - 2)
        return Check(f"hub N={N}", ok, {
            "S": ctx.S, "filled": stats.filled, "full": stats.full,
            "quadrant_unmarked": quadrant_red, "zigzags_are_all_trips": atlas,
            "sextet_form": sextets, "boxkites": len(kites)})
    return _guard(f"hub N={N}", run)


def check_flipbook() -> Check:
    def run():
        frames = flipbook(5)
        ok = True
        details = {}
        for f in frames:
            good = (f.boxkites == 3 and f.table.filled == 72 and f.line_cells == 48
                    and f.content_cells == 24)
            if f.S == 15:
                good &= f.crossbar and f.diamond
            ok &= good
            details[f.S] = f.describe()
        return Check("flipbook N=5", ok, details)
    return _guard("flipbook N=5", run)


def check_census(N: int, jobs: int = 1) -> Check:
    def run():
        rows = census(N, jobs=jobs)
        total = sum(r.boxkites for r in rows)
        type_ii = sum(r.type_ii for r in rows)
        details = {"total": total, "type_ii": type_ii,
                   "per_S": {r.S: [str(r.band), r.boxkites, r.type_ii] for r in rows}}
        ok = True
        if N == 4:
            ok = total == 7 and type_ii == 0
        elif N == 5:
            ok = total == 77 and type_ii == 21
            families = {}
            for S in range(1, 16):
                ctx = Context(5, S)
                fam = [pathion_family(S, k) for k in boxkites_from_table(build_table(ctx))]
                families[S] = {f: fam.count(f) for f in sorted(set(fam))}
            for S in range(1, 8):
                ok &= families[S] == {"Strongbox": 3, "TypeII": 3, "ZeroPadded": 1}
            ok &= families[8] == {"Atlas": 7}
            ok &= all(families[S] == {"SandMandala": 3} for S in range(9, 16))
            details["families"] = families
        elif N == 6:
            ok = rows[14].boxkites == 19
        return Check(f"census N={N}", ok, details)
    return _guard(f"census N={N}", run)


def check_genealogy(S: int, N_max: int) -> Check:
    def run():
        levels = genealogy_run(S, N_max)
        counts = {lvl.N: len(lvl.zigzags) for lvl in levels}
        ok = all(counts[n] == trip_count(n - 2) for n in counts)
        return Check(f"genealogy S={S} N<={N_max}", ok, {"counts": counts})
    return _guard(f"genealogy S={S} N<={N_max}", run)


def check_properties(N: int) -> Check:
    """Structural laws that every table and box-kite at this ``N`` must obey."""
    def run():
        ok = True
        notes = {}
        for S in range(1, 1 << (N - 1)):
            ctx = Context(N, S)
            et = build_table(ctx)
            sym = bool(np.array_equal(et.marks, et.marks.T))
            struts = all(dmz_edge(assessor_of(L, ctx), assessor_of(L ^ S, ctx), ctx) is None
                         for L in ctx.l_indices())
            pos = {L: i for i, L in enumerate(et.labels)}
            closure = all(et.marks[pos[r], pos[r ^ c]] and et.marks[pos[c], pos[r ^ c]]
                          for _, _, r, c, _ in et.filled_cells())
            census_ok = True
            for k in boxkites_from_table(et):
                red = {e for e, s in k.edges if s is EdgeSign.RED}
                census_ok &= red == {"AB", "AC", "BC", "DE", "DF", "EF"}
                rep = vizier_check(k)
                if N == 4:
                    census_ok &= rep.all_signed
                census_ok &= all(s.vz2 for s in rep.struts)
                census_ok &= rep.reversed_vz1 == (2 if k.kite_type is KiteType.TYPE_II else 0)
            if not (sym and struts and closure and census_ok):
                ok = False
                notes[S] = {"symmetric": sym, "struts_blank": struts,
                            "closure": closure, "edge_census": census_ok}
        return Check(f"properties N={N}", ok, {"failures": notes})
    return _guard(f"properties N={N}", run)


# numbering used by ``zerodiv verify --thm``
SUITES_BY_NUMBER = {8: check_fill_divisibility, 9: check_full_tables, 10: check_number_hub}


def run_all(n_values, *, thm=None, include_census=True, include_flipbook=True,
            include_genealogy=True, include_oracle=True, jobs: int = 1) -> list[Check]:
    """Run every suite applicable to ``n_values``.

    ``thm`` is a key of :data:`SUITES_BY_NUMBER` and runs that suite alone.
    """
    checks = []
    n_values = sorted(set(n_values))
    if thm is not None:
        fn = SUITES_BY_NUMBER[thm]
        return [fn(N) for N in n_values if thm != 9 or N >= 5]
    if include_oracle:
        checks.append(check_oracle(min(max(n_values), 7)))
    for N in n_values:
        checks.append(check_fill_divisibility(N))
        if N >= 5:
            checks.append(check_full_tables(N))
        checks.append(check_number_hub(N))
        if N <= 6:
            checks.append(check_properties(N))
        if include_census and N <= 6:
            checks.append(check_census(N, jobs))
    if include_flipbook and 5 in n_values:
        checks.append(check_flipbook())
    if include_genealogy:
        top = min(max(n_values), 7)
        if top >= 4:
            checks.append(check_genealogy(1, top))
    return checks
