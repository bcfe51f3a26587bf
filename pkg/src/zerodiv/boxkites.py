"""Assessors, zero-divisor (DMZ) edges, and box-kite discovery.

Within the 2**N-ions, fix a strut constant ``S`` with ``0 < S < G``,
``G = 2**(N-1)``. An assessor is the plane spanned by ``e_L`` and ``e_U``
with ``L < G`` and ``U = L ^ X``, ``X = G + S``. Its two diagonals
``e_L + e_U`` and ``e_L - e_U`` are the candidate zero divisors.

Box-kites are found by brute force. Annihilating assessor pairs become
edges and XOR-closed edge triangles become sails. Sails are then grouped
by the six assessors they span, which are a sail's vertices together with
their strut opposites.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import NamedTuple, Optional

import numpy as np

from .cdp_core import MAX_N, MIN_N, SignedUnit, Trip, orient_trip, product_signs, unit_product
from .errors import ContextError, StructuralAnomalyError


@dataclass(frozen=True)
class Context:
    """Dimension exponent ``N`` and strut constant ``S``."""

    N: int
    S: int

    def __post_init__(self):
        if not MIN_N <= self.N <= MAX_N:
            raise ContextError(f"N={self.N} outside supported range {MIN_N}..{MAX_N}")
        if not 0 < self.S < self.G:
            raise ContextError(f"strut constant S={self.S} must satisfy 0 < S < {self.G}")

    @property
    def G(self) -> int:
        return 1 << (self.N - 1)

    @property
    def g(self) -> int:
        return self.G >> 1

    @property
    def X(self) -> int:
        return self.G ^ self.S

    def l_indices(self) -> list[int]:
        """Valid assessor L-indices in ascending order."""
        return [L for L in range(1, self.G) if L != self.S]


class Assessor(NamedTuple):
    L: int
    U: int


class EdgeSign(enum.IntEnum):
    """Blue edges join like-sloped diagonals, red edges opposite-sloped ones."""

    BLUE = 1
    RED = -1

    @property
    def symbol(self) -> str:
        return "+" if self is EdgeSign.BLUE else "-"


class KiteType(str, enum.Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"


def assessor_of(L: int, ctx: Context) -> Assessor:
    if not 0 < L < ctx.G or L == ctx.S:
        raise ContextError(f"L={L} is not an assessor index for N={ctx.N}, S={ctx.S}")
    return Assessor(L, L ^ ctx.X)


def strut_opposite(L: int, ctx: Context) -> int:
    assessor_of(L, ctx)
    return L ^ ctx.S


def dyad_product(a1: Assessor, s1: int, a2: Assessor, s2: int, N: int) -> dict:
    """Expand ``(e_L1 + s1 e_U1)(e_L2 + s2 e_U2)`` into ``{index: coefficient}``.

    Zero coefficients are dropped, so an empty dict means the diagonals
    annihilate.
    """
    out: dict = {}
    for c1, x in ((1, a1.L), (s1, a1.U)):
        for c2, y in ((1, a2.L), (s2, a2.U)):
            sign, k = unit_product(x, y, N)
            out[k] = out.get(k, 0) + c1 * c2 * sign
    return {k: v for k, v in out.items() if v}


def dmz_edge(a1: Assessor, a2: Assessor, ctx: Context) -> Optional[EdgeSign]:
    """Edge sign between two assessors, or ``None`` if they do not zero-divide."""
    if a1 == a2:
        raise ContextError("an assessor has no edge to itself")
    blue = not dyad_product(a1, 1, a2, 1, ctx.N)
    red = not dyad_product(a1, 1, a2, -1, ctx.N)
    if blue and red:
        raise StructuralAnomalyError(f"{a1} and {a2} annihilate with both edge signs")
    if blue:
        return EdgeSign.BLUE
    if red:
        return EdgeSign.RED
    return None


def emanation_third(a1: Assessor, a2: Assessor, ctx: Context) -> Optional[tuple]:
    """The L-index emanated by a DMZ edge together with its sign.

    Returns ``None`` for an assessor paired with itself or its strut
    opposite, and for pairs that do not zero-divide.
    """
    if a1 == a2 or a1.L ^ a2.L == ctx.S:
        return None
    sign = dmz_edge(a1, a2, ctx)
    if sign is None:
        return None
    return a1.L ^ a2.L, sign


def edge_sign_grid(ctx: Context, labels, row_labels=None) -> np.ndarray:
    """Vectorized DMZ test of ``row_labels`` (default ``labels``) against ``labels``.

    Returns an int8 array: ``+1`` blue, ``-1`` red, ``0`` no edge. Same and
    strut-opposite pairs are forced to ``0``. The four signed terms of each
    dyad product are looked up in :func:`product_signs`, which is the
    trip-rule sign table, so this is the same brute expansion as
    :func:`dmz_edge`.
    """
    T = product_signs(ctx.N)
    L = np.asarray(labels, dtype=np.int64)
    R = L if row_labels is None else np.asarray(row_labels, dtype=np.int64)
    Lr, Lc = R[:, None], L[None, :]
    Ur, Uc = Lr ^ ctx.X, Lc ^ ctx.X
    s_ll = T[Lr, Lc].astype(np.int8)
    s_uu = T[Ur, Uc]
    s_lu = T[Lr, Uc]
    s_ul = T[Ur, Lc]
    blue = (s_ll == -s_uu) & (s_lu == -s_ul)
    red = (s_ll == s_uu) & (s_lu == s_ul)
    if np.any(blue & red):
        raise StructuralAnomalyError("pair annihilates with both edge signs")
    out = blue.astype(np.int8) - red.astype(np.int8)
    out[(Lr == Lc) | ((Lr ^ Lc) == ctx.S)] = 0
    return out


SAILS = ("ABC", "ADE", "FDB", "FEC")
LETTERS = "ABCDEF"
_STRUTS = (("A", "F"), ("B", "E"), ("C", "D"))
EDGE_LETTERS = tuple(
    a + b for a, b in combinations(LETTERS, 2) if (a, b) not in _STRUTS
)


@dataclass(frozen=True)
class BoxKite:
    """Six assessors A..F with (A,F), (B,E), (C,D) strut-opposite.

    ``labels`` holds L-indices in A..F order; ABC is the all-red Zigzag sail
    with A its least L-index and (A, B, C) in CPO.
    """

    ctx: Context
    labels: tuple
    edges: tuple = field(compare=False)
    reversed_struts: int = field(compare=False, default=0)

    def __getitem__(self, letter: str) -> int:
        return self.labels[LETTERS.index(letter)]

    def assessor(self, letter: str) -> Assessor:
        return assessor_of(self[letter], self.ctx)

    @property
    def assessors(self) -> dict:
        return {k: self.assessor(k) for k in LETTERS}

    @property
    def zigzag(self) -> Trip:
        return orient_trip(self.labels[:3])

    def sail(self, name: str) -> tuple:
        if name not in SAILS:
            raise ValueError(f"unknown sail {name!r}")
        return tuple(self[k] for k in name)

    def struts(self) -> list[tuple]:
        """(zigzag L, vent L) pairs."""
        return [(self[z], self[v]) for z, v in _STRUTS]

    def edge_sign(self, a: str, b: str) -> EdgeSign:
        key = "".join(sorted(a + b))
        return dict(self.edges)[key]

    @cached_property
    def kite_type(self) -> KiteType:
        return classify_kite_type(self)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.labels)) + ")"


def _strut_reversed(z: int, v: int, ctx: Context) -> bool:
    return unit_product(v, z, ctx.N) != SignedUnit(1, ctx.S)


def classify_kite_type(bk: BoxKite) -> KiteType:
    """Type I if every strut has standard orientation, Type II if two are reversed.

    A strut (z, v) is standard when ``e_v * e_z = +e_S``.
    """
    n = sum(_strut_reversed(z, v, bk.ctx) for z, v in bk.struts())
    if n == 0:
        return KiteType.TYPE_I
    if n == 2:
        return KiteType.TYPE_II
    raise StructuralAnomalyError(f"box-kite {bk} has {n} reversed struts")


def _canonical_kite(ctx: Context, sails: list, sign) -> BoxKite:
    """Label a group of four sails A..F; ``sign(x, y)`` gives edge signs."""
    S = ctx.S
    zigzags = [s for s in sails if all(sign(x, y) == EdgeSign.RED for x, y in combinations(s, 2))]
    if len(zigzags) != 1:
        raise StructuralAnomalyError(f"sails {sails} have {len(zigzags)} all-red members")
    z = orient_trip(zigzags[0])
    A, B, C = z
    labels = (A, B, C, C ^ S, B ^ S, A ^ S)
    edges = tuple((k, EdgeSign(sign(labels[LETTERS.index(k[0])], labels[LETTERS.index(k[1])])))
                  for k in EDGE_LETTERS)
    n_rev = sum(_strut_reversed(labels[i], labels[5 - i], ctx) for i in range(3))
    return BoxKite(ctx, labels, edges, n_rev)


def group_sails(ctx: Context, edge_sign) -> list[BoxKite]:
    """Assemble box-kites from an edge-sign oracle ``edge_sign(L1, L2)``.

    ``edge_sign`` returns an :class:`EdgeSign` or ``None``. Every edge must
    lie in a sail and every sail in a complete four-sail box-kite,
    otherwise :class:`StructuralAnomalyError` is raised.
    """
    S = ctx.S
    labels = ctx.l_indices()
    sails = set()
    for x, y in combinations(labels, 2):
        if x ^ y == S or edge_sign(x, y) is None:
            continue
        third = x ^ y
        if edge_sign(x, third) is None or edge_sign(y, third) is None:
            raise StructuralAnomalyError(
                f"edge ({x},{y}) emanates {third} but the sail does not close")
        sails.add(frozenset((x, y, third)))
    groups: dict = {}
    for s in sails:
        key = frozenset(s | {m ^ S for m in s})
        groups.setdefault(key, []).append(s)
    kites = []
    for key, members in groups.items():
        if len(members) != 4:
            raise StructuralAnomalyError(
                f"assessors {sorted(key)} carry {len(members)} sails, expected 4")
        for x, y in combinations(key, 2):
            if (x ^ y == S) != (edge_sign(x, y) is None):
                raise StructuralAnomalyError(f"assessors {sorted(key)} are not an octahedron")
        kites.append(_canonical_kite(ctx, sorted(sorted(m) for m in members), edge_sign))
    kites.sort(key=lambda k: k.labels)
    return kites


def discover_boxkites(ctx: Context, engine: str = "fast") -> list[BoxKite]:
    """All box-kites for ``ctx``, sorted by their A..F label tuple.

    ``engine="fast"`` evaluates the DMZ graph through the vectorized sign
    table; ``engine="reference"`` calls :func:`dmz_edge` pair by pair.
    """
    if engine == "reference":
        cache: dict = {}

        def edge_sign(x, y):
            key = (min(x, y), max(x, y))
            if key not in cache:
                cache[key] = dmz_edge(assessor_of(x, ctx), assessor_of(y, ctx), ctx)
            return cache[key]
    elif engine == "fast":
        labels = ctx.l_indices()
        grid = edge_sign_grid(ctx, labels)
        pos = {L: i for i, L in enumerate(labels)}

        def edge_sign(x, y):
            v = int(grid[pos[x], pos[y]])
            return EdgeSign(v) if v else None
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return group_sails(ctx, edge_sign)


class SailTrips(NamedTuple):
    l_trip: Trip
    u_trips: tuple
    in_sync: bool


def sail_trip_system(bk: BoxKite, sail: str) -> SailTrips:
    """The sail's L-trip plus its three U-trips.

    For sail vertices (x, y, z) in CPO, the U-trips are
    (x, Y, Z), (X, y, Z), (X, Y, z) with capitals the U-partners.
    ``in_sync`` reports whether each U-trip is CPO in that written order.
    """
    X = bk.ctx.X
    vertices = bk.sail(sail)
    try:
        l_trip = orient_trip(vertices, bk.ctx.N)
        x, y, z = l_trip
        written = ((x, y ^ X, z ^ X), (x ^ X, y, z ^ X), (x ^ X, y ^ X, z))
        u_trips = tuple(orient_trip(w, bk.ctx.N) for w in written)
    except ValueError as exc:
        raise StructuralAnomalyError(f"sail {sail} of {bk} fails trip validation: {exc}") from exc
    in_sync = all(Trip.cpo(*w) == t for w, t in zip(written, u_trips))
    return SailTrips(l_trip, u_trips, in_sync)


@dataclass
class StrutReport:
    z: int
    v: int
    vz1: bool
    vz2: bool
    vz3: bool


@dataclass
class VizierReport:
    kite: BoxKite
    struts: list

    @property
    def all_signed(self) -> bool:
        return all(s.vz1 and s.vz2 and s.vz3 for s in self.struts)

    @property
    def reversed_vz1(self) -> int:
        return sum(not s.vz1 for s in self.struts)


def vizier_check(bk: BoxKite) -> VizierReport:
    """Check the three Vizier identities on every strut.

    XOR-level identities (``v^z = S``, ``Z^v = G``, ``V^v = X``) must hold
    and raise :class:`StructuralAnomalyError` otherwise. Signed conformance
    is recorded per strut without raising.
    """
    ctx = bk.ctx
    N, S, G, X = ctx.N, ctx.S, ctx.G, ctx.X
    rows = []
    for z, v in bk.struts():
        Z, V = z ^ X, v ^ X
        if v ^ z != S or Z ^ v != G or V ^ v != X:
            raise StructuralAnomalyError(f"strut ({z},{v}) of {bk} breaks an XOR Vizier")
        vz1 = unit_product(v, z, N) == (1, S) and unit_product(V, Z, N) == (1, S)
        vz2 = unit_product(Z, v, N) == (1, G) and unit_product(V, z, N) == (1, G)
        vz3 = unit_product(V, v, N) == (1, X) and unit_product(z, Z, N) == (1, X)
        rows.append(StrutReport(z, v, vz1, vz2, vz3))
    return VizierReport(bk, rows)
