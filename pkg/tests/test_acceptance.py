"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its wall time, even
under pytest's output capture. Run this file directly for the same report
without pytest.
"""

import random
import sys
import time

import numpy as np
import pytest

from zerodiv.boxkites import Context, assessor_of, discover_boxkites, dmz_edge
from zerodiv.cdp_core import enumerate_trips, orient_trip, rule2_trips, unit_product, zero_pad
from zerodiv.cli import main
from zerodiv.emanation import build_table, census
from zerodiv.genealogy import genealogy_run, pathion_family
from zerodiv.verify import (
    check_census,
    check_flipbook,
    check_oracle,
    check_fill_divisibility,
    check_full_tables,
    check_number_hub,
)

GOLDEN_ASCII = """\
       2   4   6   7   5   3
   2       6  -4   5  -7
   4   6      -2   3      -7
   6  -4  -2           3   5
   7   5   3          -2  -4
   5  -7       3  -2       6
   3      -7   5  -4   6
"""

TYPE_II_S1 = {(3, 13, 14, 15, 12, 2), (6, 11, 13, 12, 10, 7), (5, 14, 11, 10, 15, 4)}

N5_LISTS = {
    "rule0": [(3, 6, 5)],
    "rule1": [(3, 10, 9), (6, 15, 9), (5, 12, 9)],
    "rule2": [(3, 13, 14), (6, 11, 13), (5, 14, 11)],
}
N6_MEDIANS = [(3, 18, 17), (5, 20, 17), (6, 23, 17), (9, 24, 17),
              (10, 27, 17), (12, 29, 17), (15, 30, 17)]
N6_SIDES = [
    ((3, 6, 5), [(3, 21, 22), (6, 19, 21), (5, 22, 19)]),
    ((3, 10, 9), [(3, 25, 26), (10, 19, 25), (9, 26, 19)]),
    ((6, 15, 9), [(6, 25, 31), (15, 22, 25), (9, 31, 22)]),
    ((5, 12, 9), [(5, 25, 28), (12, 21, 25), (9, 28, 21)]),
    ((3, 13, 14), [(3, 30, 29), (13, 19, 30), (14, 29, 19)]),
    ((6, 11, 13), [(6, 29, 27), (11, 22, 29), (13, 27, 22)]),
    ((5, 14, 11), [(5, 27, 30), (14, 21, 27), (11, 30, 21)]),
]
NAMED_DUPLICATES = {(14, 16, 30), (11, 16, 27)}


def c01_golden_table():
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["et", "--n", "4", "--s", "1"])
    return code == 0 and buf.getvalue() == GOLDEN_ASCII, "6x6 table"


def c02_product_anchors():
    prods = [unit_product(1, 2, 3), unit_product(2, 1, 3), unit_product(4, 5, 3), unit_product(4, 3, 3)]
    ok = prods == [(1, 3), (-1, 3), (1, 1), (-1, 7)]
    sides = rule2_trips(orient_trip((1, 2, 3)), 4)
    ok &= sides == [(1, 7, 6), (2, 5, 7), (3, 6, 5)]
    ok &= all(orient_trip(t) == t for t in sides)
    return ok, f"{[str(p) for p in prods]} {[str(t) for t in sides]}"


def c03_oracle():
    chk = check_oracle(7)
    return chk.passed, f"{chk.details['pairs']} pairs under {chk.details['convention']}"


def c04_trip_counts():
    counts = [len(enumerate_trips(N)) for N in (3, 4, 5)]
    return counts == [7, 35, 155], counts


def c05_fill_divisibility():
    checks = [check_fill_divisibility(N) for N in (4, 5, 6)]
    n_tables = sum(len(c.details["filled"]) for c in checks)
    return all(c.passed for c in checks), f"{n_tables} tables"


def c06_full_tables():
    checks = [check_full_tables(N) for N in (5, 6)]
    ok = all(c.passed for c in checks)
    for c, (filled, kites) in zip(checks, [(168, 7), (840, 35)]):
        ok &= all(row == {"filled": filled, "boxkites": kites} for row in c.details["per_S"].values())
    return ok, "N=5: 168/7, N=6: 840/35"


def c07_number_hub():
    checks = [check_number_hub(N) for N in (5, 6)]
    return all(c.passed for c in checks), [c.details["boxkites"] for c in checks]


def c08_flipbook():
    chk = check_flipbook()
    frames = chk.details
    ok = chk.passed and all(
        set(f["line_positions"]) == {S - 8, 8} and f["filled"] == 72 and f["boxkites"] == 3
        and f["line_cells"] == 48 and f["content_cells"] == 24 for S, f in frames.items())
    ok &= frames[15]["crossbar"]
    return ok, "S=9..15"


def c09_pathion_census():
    chk = check_census(5)
    kites = discover_boxkites(Context(5, 1))
    type_ii = {k.labels for k in kites if pathion_family(1, k) == "TypeII"}
    ok = chk.passed and chk.details["total"] == 77 and type_ii == TYPE_II_S1
    return ok, f"total {chk.details['total']}, TypeII {chk.details['type_ii']}"


def c10_genealogy():
    levels = genealogy_run(1, 7)
    m5, m6 = levels[1].machine, levels[2].machine
    ok = (m5.rule0_padded == N5_LISTS["rule0"] and m5.median_zigzags == N5_LISTS["rule1"]
          and m5.sides == N5_LISTS["rule2"])
    ok &= m6.rule0_padded == levels[1].zigzags
    ok &= sorted(m6.median_zigzags) == N6_MEDIANS
    ok &= m6.rule2_sides == N6_SIDES
    redundant = {r.rule1 for r in m6.redundant}
    ok &= len(m6.rule1_medians) == 10 and m6.raw_count == 38 and len(levels[2].zigzags) == 35
    ok &= NAMED_DUPLICATES <= redundant
    ok &= len(levels[3].zigzags) == 155
    return ok, f"raw 38/35 distinct, redundant {[str(t) for t in sorted(redundant)]}, N=7 {len(levels[3].zigzags)}"


def c11_missing_count():
    n6 = census(6, s_values=[15])[0].boxkites
    n5 = census(5, s_values=[15])[0].boxkites
    # pairwise DMZ search, independent of the vectorized sign table
    brute = [len(discover_boxkites(Context(N, 15), engine="reference")) for N in (6, 5)]
    ok = (n6, n5) == (19, 3) and brute == [19, 3]
    return ok, f"N=6 S=15: {n6} (35 - 16), N=5 S=15: {n5} (7 - 4)"


def c12_properties():
    rng = random.Random(20240101)
    pool = enumerate_trips(7)
    for _ in range(1000):
        t = rng.choice(pool)
        j = rng.randint(0, max(t).bit_length())
        n = rng.randint(0, 4)
        padded = zero_pad(t, j, n)
        if orient_trip(padded) != padded:
            return False, f"padding {t} at {j} by {n}"
    for N in (4, 5):
        for S in range(1, 1 << (N - 1)):
            ctx = Context(N, S)
            et = build_table(ctx)
            if not np.array_equal(et.marks, et.marks.T):
                return False, f"asymmetric N={N} S={S}"
            for L in ctx.l_indices():
                if dmz_edge(assessor_of(L, ctx), assessor_of(L ^ S, ctx), ctx) is not None:
                    return False, f"strut ({L},{L ^ S}) divides at N={N} S={S}"
            for _, _, r, c, cell in et.filled_cells():
                p = cell.P
                if et.cell_at(r, p) is None or et.cell_at(c, p) is None:
                    return False, f"edge ({r},{c}) does not close at N={N} S={S}"
    for N, S in [(5, 9), (7, 40), (8, 77)]:
        ctx = Context(N, S)
        if not build_table(ctx, jobs=1) == build_table(ctx, jobs=2) == build_table(ctx, jobs=4):
            return False, f"jobs changed N={N} S={S}"
    if census(5, jobs=1) != census(5, jobs=4):
        return False, "census depends on jobs"
    return True, "1000 paddings, N<=5 closure/struts/symmetry, jobs 1/2/4"


CRITERIA = [
    (1, "golden table", c01_golden_table, 1.0),
    (2, "product anchors", c02_product_anchors, 1.0),
    (3, "oracle equivalence N<=7", c03_oracle, 5.0),
    (4, "trip counts", c04_trip_counts, 5.0),
    (5, "fill counts divisible by 24", c05_fill_divisibility, 120.0),
    (6, "full tables for S < 8", c06_full_tables, 120.0),
    (7, "number hub", c07_number_hub, 120.0),
    (8, "flip-book", c08_flipbook, 60.0),
    (9, "pathion census", c09_pathion_census, 30.0),
    (10, "genealogy", c10_genealogy, 60.0),
    (11, "chingon missing count", c11_missing_count, 120.0),
    (12, "property suite", c12_properties, 120.0),
]


def evaluate(number, label, fn, limit):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # report, then fail
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    if elapsed > limit:
        ok, detail = False, f"{detail}; {elapsed:.2f}s over {limit:.0f}s limit"
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {label}: {detail} ({elapsed:.2f}s)"
    return ok, line


@pytest.mark.parametrize("number,label,fn,limit", CRITERIA, ids=[f"c{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, label, fn, limit, capsys):
    ok, line = evaluate(number, label, fn, limit)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
