"""The PSL(2,7) trip machine and fixed-S Zigzag genealogies.

One level of the machine takes the Zigzag L-trips of the 2**(N-1)-ions for
a strut constant ``S`` ("Rule 0" inputs) and a central ``g = 2**(N-2)``:

* Rule 0: inputs carry over unchanged (zero padding).
* Rule 2 sides: :func:`rule2_trips` of each input.
* Rule 1 medians: for each index ``u`` used by the inputs, the trip
  ``(u, g, g+u)``. It is the (a,d,e) Trefoil of a new box-kite whose
  Zigzag is ``(u, (g+u)^S, g^S)``, unless ``u`` sits at F, in which case it
  is an (f,d,b) sail of a box-kite some other ``u`` already produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .boxkites import BoxKite, Context, EdgeSign, KiteType, assessor_of, dmz_edge, discover_boxkites
from .cdp_core import Trip, orient_trip, rule2_trips, trip_count, zero_pad
from .errors import OutOfScopeError, StructuralAnomalyError, TheoremViolation


@dataclass(frozen=True)
class Median:
    u: int
    rule1: Trip
    zigzag: Trip | None
    role: str  # "ade", "fdb", or "rule1" when no strut constant is given
    parents: tuple  # Rule 0 inputs that contain u


@dataclass
class MachineOutput:
    g: int
    S: int | None
    rule0_padded: list
    rule1_medians: list
    rule2_sides: list  # (parent, [3 trips]) in input order

    @property
    def sides(self) -> list:
        return [t for _, ts in self.rule2_sides for t in ts]

    @property
    def median_zigzags(self) -> list:
        if self.S is None:
            return [m.rule1 for m in self.rule1_medians]
        return [m.zigzag for m in self.rule1_medians if m.role == "ade"]

    @property
    def redundant(self) -> list:
        return [m for m in self.rule1_medians if m.role == "fdb"]

    @property
    def raw_count(self) -> int:
        return len(self.rule0_padded) + len(self.rule1_medians) + len(self.sides)

    def zigzags(self) -> list:
        """Distinct Zigzag L-trips in generation order: Rule 0, Rule 1, Rule 2."""
        return list(dict.fromkeys(self.rule0_padded + self.median_zigzags + self.sides))


def _is_zigzag(members, ctx: Context) -> bool:
    try:
        t = orient_trip(members)
    except ValueError:
        return False
    for x, y in combinations(t, 2):
        if x ^ y == ctx.S:
            return False
        try:
            edge = dmz_edge(assessor_of(x, ctx), assessor_of(y, ctx), ctx)
        except ValueError:
            return False
        if edge is not EdgeSign.RED:
            return False
    return True


def trip_machine(rule0, g: int, S: int | None = None) -> MachineOutput:
    """Run one PSL(2,7) level with central ``g``.

    Without ``S`` the medians are plain Rule 1 trips (e.g. the octonions
    from ``(1,2,3)`` and ``g = 4``). With ``S`` each median's role is
    settled by direct DMZ tests: ``(u, (g+u)^S, g^S)`` is the Zigzag when
    all its edges are red, otherwise ``u`` is an F vertex and the Zigzag is
    ``(u^S, g+u, g^S)``.
    """
    if g < 2 or g & (g - 1):
        raise ValueError(f"central index g={g} must be a power of 2")
    inputs = [orient_trip(t) for t in rule0]
    if any(max(t) >= g for t in inputs):
        raise ValueError(f"Rule 0 inputs must lie below g={g}")
    sides = [(t, rule2_trips(t, g)) for t in inputs]
    medians = []
    if S is not None:
        if not 0 < S < g:
            raise OutOfScopeError(f"S={S} must lie below g={g}")
        ctx = Context((2 * g).bit_length(), S)
    for u in dict.fromkeys(m for t in inputs for m in t):
        parents = tuple(t for t in inputs if u in t)
        rule1 = orient_trip((u, g, g + u))
        if S is None:
            medians.append(Median(u, rule1, None, "rule1", parents))
            continue
        ade = ((g + u) ^ S, u, g ^ S)
        fdb = (u ^ S, g + u, g ^ S)
        if _is_zigzag(ade, ctx):
            medians.append(Median(u, rule1, orient_trip(ade), "ade", parents))
        elif _is_zigzag(fdb, ctx):
            medians.append(Median(u, rule1, orient_trip(fdb), "fdb", parents))
        else:
            raise StructuralAnomalyError(f"median {rule1} is neither (a,d,e) nor (f,d,b)")
    return MachineOutput(g, S, list(inputs), medians, sides)


@dataclass
class Level:
    N: int
    zigzags: list
    machine: MachineOutput | None = None
    kites: list = field(default_factory=list, repr=False)

    def role(self, t: Trip) -> str:
        if self.machine is None:
            return "seed"
        if t in self.machine.rule0_padded:
            return "rule0"
        if t in self.machine.median_zigzags:
            return "rule1"
        return "rule2"


def sedenion_zigzag(S: int) -> Trip:
    (bk,) = discover_boxkites(Context(4, S))
    return bk.zigzag


def genealogy_run(S: int, N_max: int, cross_validate: bool = True) -> list[Level]:
    """Zigzag L-trip families for strut constant ``S`` at N = 4..N_max.

    Each level's count must be ``Trip(N-2)``. With ``cross_validate`` every
    emitted trip must be the Zigzag of exactly one discovered box-kite.
    """
    if not 0 < S < 8:
        raise OutOfScopeError(f"genealogy recursion starts from a Sedenion zigzag; S={S} must be < 8")
    if not 4 <= N_max <= 12:
        raise OutOfScopeError(f"N_max={N_max} outside 4..12")
    levels = [Level(4, [sedenion_zigzag(S)])]
    for N in range(5, N_max + 1):
        out = trip_machine(levels[-1].zigzags, 1 << (N - 2), S)
        levels.append(Level(N, out.zigzags(), out))
    for lvl in levels:
        if len(lvl.zigzags) != trip_count(lvl.N - 2):
            raise TheoremViolation(
                f"S={S}, N={lvl.N}: {len(lvl.zigzags)} zigzags, expected {trip_count(lvl.N - 2)}")
        if cross_validate:
            kites = discover_boxkites(Context(lvl.N, S))
            found = sorted(k.zigzag for k in kites)
            if found != sorted(lvl.zigzags):
                raise TheoremViolation(f"S={S}, N={lvl.N}: genealogy disagrees with box-kite discovery")
            lvl.kites = kites
    return levels


FAMILIES = ("ZeroPadded", "Strongbox", "TypeII", "Atlas", "SandMandala")


def pathion_family(S: int, bk: BoxKite) -> str:
    """Family name of a Pathion (N = 5) box-kite."""
    if bk.ctx.N != 5 or bk.ctx.S != S:
        raise OutOfScopeError("pathion_family needs an N=5 box-kite with matching S")
    if S == 8:
        return "Atlas"
    if S > 8:
        return "SandMandala"
    padded = zero_pad(sedenion_zigzag(S), 0, 0)
    if bk.zigzag == padded:
        family = "ZeroPadded"
    elif 8 in bk.labels:
        family = "Strongbox"
    else:
        family = "TypeII"
    if (family == "TypeII") != (bk.kite_type is KiteType.TYPE_II):
        raise StructuralAnomalyError(f"{bk} is {family} but classified {bk.kite_type.value}")
    return family
