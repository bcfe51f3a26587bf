"""Emanation tables: the zero-divisor analogue of a Cayley table.

Rows and columns are labelled by the ``G - 2`` assessor L-indices of a
fixed ``(N, S)``. Cell ``(r, c)`` holds ``P = r ^ c`` when the two
assessors zero-divide, with a mark recording the edge sign: blue edges
are printed with a leading dash, red edges unmarked. Same-assessor and
strut-opposite cells (the two long diagonals) are always blank.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .boxkites import (
    BoxKite,
    Context,
    EdgeSign,
    KiteType,
    assessor_of,
    edge_sign_grid,
    emanation_third,
    group_sails,
)
from .cdp_core import orient_trip
from .errors import OutOfScopeError, TheoremViolation


def label_order(ctx: Context) -> tuple:
    """Row/column labels: each unplaced index goes left, its strut opposite right."""
    n = ctx.G - 2
    slots: list = [None] * n
    left, right = 0, n - 1
    placed = set()
    for k in ctx.l_indices():
        if k in placed:
            continue
        slots[left], slots[right] = k, k ^ ctx.S
        placed.update((k, k ^ ctx.S))
        left += 1
        right -= 1
    return tuple(slots)


class Cell(NamedTuple):
    P: int
    sign: EdgeSign

    @property
    def dashed(self) -> bool:
        return self.sign is EdgeSign.BLUE

    def __str__(self) -> str:
        return f"-{self.P}" if self.dashed else str(self.P)


@dataclass(frozen=True, eq=False)
class EmanationTable:
    """Labels plus an int8 mark grid: +1 blue (dashed), -1 red, 0 blank.

    ``P`` is not stored; every filled cell holds ``row_label ^ col_label``.
    """

    ctx: Context
    labels: tuple
    marks: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.marks.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    def position(self, label: int) -> int:
        return self.labels.index(label)

    def cell(self, i: int, j: int) -> Optional[Cell]:
        m = int(self.marks[i, j])
        if not m:
            return None
        return Cell(self.labels[i] ^ self.labels[j], EdgeSign(m))

    def cell_at(self, r: int, c: int) -> Optional[Cell]:
        return self.cell(self.position(r), self.position(c))

    def filled_cells(self) -> Iterator[tuple]:
        """Yield ``(i, j, row_label, col_label, Cell)`` in row-major order."""
        for i, j in zip(*np.nonzero(self.marks)):
            i, j = int(i), int(j)
            yield i, j, self.labels[i], self.labels[j], self.cell(i, j)

    @property
    def filled(self) -> int:
        return int(np.count_nonzero(self.marks))

    def p_grid(self) -> np.ndarray:
        """Dense ``P`` values with 0 for blank cells."""
        L = np.asarray(self.labels, dtype=np.int64)
        return np.where(self.marks != 0, L[:, None] ^ L[None, :], 0)

    def edge_sign(self, r: int, c: int) -> Optional[EdgeSign]:
        m = int(self.marks[self.position(r), self.position(c)])
        return EdgeSign(m) if m else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmanationTable):
            return NotImplemented
        return (self.ctx == other.ctx and self.labels == other.labels
                and np.array_equal(self.marks, other.marks))

    __hash__ = None


def _reference_marks(ctx: Context, labels: tuple) -> np.ndarray:
    n = len(labels)
    marks = np.zeros((n, n), dtype=np.int8)
    for i, r in enumerate(labels):
        for j in range(i + 1, n):
            hit = emanation_third(assessor_of(r, ctx), assessor_of(labels[j], ctx), ctx)
            if hit is not None:
                marks[i, j] = marks[j, i] = int(hit[1])
    return marks


def build_table(ctx: Context, *, engine: str = "fast", jobs: int = 1) -> EmanationTable:
    """Build the emanation table for ``ctx``.

    ``engine="fast"`` evaluates rows through the vectorized sign table in
    ``jobs`` row blocks; ``engine="reference"`` calls
    :func:`emanation_third` cell by cell. Both give identical tables.
    """
    labels = label_order(ctx)
    if engine == "reference":
        return EmanationTable(ctx, labels, _reference_marks(ctx, labels))
    if engine != "fast":
        raise ValueError(f"unknown engine {engine!r}")
    jobs = max(1, int(jobs))
    if jobs == 1 or len(labels) < 64:
        marks = edge_sign_grid(ctx, labels)
    else:
        blocks = np.array_split(np.asarray(labels), jobs)
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda rows: edge_sign_grid(ctx, labels, rows), blocks))
        marks = np.vstack(parts)
    return EmanationTable(ctx, labels, marks)


def boxkites_from_table(et: EmanationTable) -> list[BoxKite]:
    """Box-kites read back off a built table."""
    pos = {L: i for i, L in enumerate(et.labels)}

    def sign(x, y):
        m = int(et.marks[pos[x], pos[y]])
        return EdgeSign(m) if m else None

    return group_sails(et.ctx, sign)


@dataclass(frozen=True)
class FillStats:
    filled: int
    boxkites: int
    full: bool


def max_fill(ctx: Context) -> int:
    return (ctx.G - 4) * (ctx.G - 2)


def fill_stats(et: EmanationTable) -> FillStats:
    """Count filled cells; a count not divisible by 24 raises TheoremViolation."""
    n = et.filled
    if n % 24:
        raise TheoremViolation(f"N={et.ctx.N}, S={et.ctx.S}: {n} filled cells, not a multiple of 24")
    return FillStats(n, n // 24, n == max_fill(et.ctx))


def extract_zigzags(et: EmanationTable) -> set:
    """Zigzag L-trips read from rows holding two complementary unmarked cells.

    In row ``r``, unmarked cells under columns ``c1`` and ``c2`` whose
    contents are ``c2`` and ``c1`` respectively give the trip {r, c1, c2}.
    """
    found = set()
    for i, r in enumerate(et.labels):
        red = {et.labels[j] for j in np.nonzero(et.marks[i] == EdgeSign.RED)[0]}
        for c in red:
            other = r ^ c
            if other in red and c < other:
                found.add(orient_trip((r, c, other)))
    return found


def near_solid_lines(et: EmanationTable) -> list[int]:
    """Row positions filled everywhere except their two long-diagonal crossings.

    The grid is symmetric, so the same positions are the near-solid columns.
    """
    return [i for i in range(et.size) if np.count_nonzero(et.marks[i]) == et.size - 2]


@dataclass
class FlipbookFrame:
    S: int
    table: EmanationTable
    s: int
    g: int
    line_positions: dict
    line_cells: int
    s_line_cells: int
    g_line_cells: int
    content_cells: int
    boxkites: int
    crossbar: bool
    s_content_sums: list
    g_content_diffs: list

    @property
    def diamond(self) -> bool:
        """``P = s`` cells on two anti-diagonals, ``P = g`` cells on two diagonals."""
        return len(self.s_content_sums) == 2 and len(self.g_content_diffs) == 2

    def describe(self) -> dict:
        return {
            "S": self.S, "s": self.s, "g": self.g,
            "line_positions": self.line_positions,
            "line_cells": self.line_cells,
            "s_line_cells": self.s_line_cells,
            "g_line_cells": self.g_line_cells,
            "content_cells": self.content_cells,
            "filled": self.table.filled,
            "boxkites": self.boxkites,
            "crossbar": self.crossbar,
            "diamond": self.diamond,
            "s_content_row_plus_col": self.s_content_sums,
            "g_content_row_minus_col": self.g_content_diffs,
        }


def flipbook(N: int = 5) -> list[FlipbookFrame]:
    """Sand Mandala frames for ``g < S < G`` with the line/content geometry of each."""
    if N != 5:
        raise OutOfScopeError("the flip-book is defined for N = 5 only")
    frames = []
    for S in range(9, 16):
        ctx = Context(N, S)
        et = build_table(ctx)
        g = ctx.g
        s = S - g
        ps, pg = et.position(s), et.position(g)
        filled = et.marks != 0
        on_s = np.zeros_like(filled)
        on_s[ps, :] = on_s[:, ps] = True
        on_g = np.zeros_like(filled)
        on_g[pg, :] = on_g[:, pg] = True
        P = et.p_grid()
        s_cells = np.argwhere(filled & (P == s) & ~on_s & ~on_g)
        g_cells = np.argwhere(filled & (P == g) & ~on_s & ~on_g)
        frames.append(FlipbookFrame(
            S=S, table=et, s=s, g=g,
            line_positions={s: ps, g: pg},
            line_cells=int(np.count_nonzero(filled & (on_s | on_g))),
            s_line_cells=int(np.count_nonzero(filled & on_s)),
            g_line_cells=int(np.count_nonzero(filled & on_g)),
            content_cells=int(np.count_nonzero(filled & ((P == s) | (P == g)) & ~on_s & ~on_g)),
            boxkites=len(boxkites_from_table(et)),
            crossbar=abs(ps - pg) == 1,
            s_content_sums=sorted({int(i + j) for i, j in s_cells}),
            g_content_diffs=sorted({int(i - j) for i, j in g_cells}),
        ))
    return frames


_BAND_NOTES = {
    1: "recursivity (Sand Mandala band)",
    2: "(s,g)-modularity",
    3: "hide/fill involution",
}


@dataclass(frozen=True)
class BandClass:
    kind: str  # "low", "power-of-two" or "band"
    m: Optional[int] = None
    note: str = ""

    def __str__(self) -> str:
        return f"band({self.m})" if self.kind == "band" else self.kind


def band_class(ctx: Context) -> BandClass:
    """Spectral band of the strut constant.

    ``S <= 8`` is the low band; larger powers of two form their own class;
    every other ``S`` falls in ``band(m)`` for ``8m < S <= 8(m+1)``.
    """
    S = ctx.S
    if S <= 8:
        return BandClass("low", note="full tables, Trip(N-2) box-kites")
    if S & (S - 1) == 0:
        return BandClass("power-of-two", note="Number Hub" if S == ctx.g else "")
    m = -(-S // 8) - 1
    return BandClass("band", m, _BAND_NOTES.get(m, ""))


@dataclass(frozen=True)
class CensusRow:
    S: int
    band: BandClass
    boxkites: int
    type_ii: int
    filled: int
    near_solid_lines: tuple = ()


def _census_row(ctx: Context) -> CensusRow:
    et = build_table(ctx)
    stats = fill_stats(et)
    kites = boxkites_from_table(et)
    if len(kites) != stats.boxkites:
        raise TheoremViolation(
            f"N={ctx.N}, S={ctx.S}: {len(kites)} box-kites for {stats.filled} filled cells")
    n2 = sum(k.kite_type is KiteType.TYPE_II for k in kites)
    return CensusRow(ctx.S, band_class(ctx), len(kites), n2, stats.filled,
                     tuple(near_solid_lines(et)))


def _census_worker(args) -> CensusRow:
    return _census_row(Context(*args))


def census(N: int, jobs: int = 1, s_values=None) -> list[CensusRow]:
    """Box-kite and Type II counts for every strut constant of the 2**N-ions.

    Rows come back ordered by ``S`` regardless of ``jobs``.
    """
    G = 1 << (N - 1)
    s_values = list(range(1, G)) if s_values is None else list(s_values)
    args = [(N, S) for S in s_values]
    for a in args:
        Context(*a)
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_census_worker, args))
    return [_census_worker(a) for a in args]


def kite_cells(et: EmanationTable, bk: BoxKite) -> int:
    """Filled cells of ``et`` whose row and column both belong to ``bk``."""
    idx = [et.position(L) for L in bk.labels]
    return int(np.count_nonzero(et.marks[np.ix_(idx, idx)]))
