"""Index-level Cayley-Dickson arithmetic driven by trip orientation.

Basis units of the 2**N-ions are indexed by integers ``0 <= k < 2**N``; the
product of two units always has index ``p ^ q``. Only the sign needs work,
and it is read off the cyclic positive order (CPO) of the associative
triplet ("trip") containing the two factors. Trip orientation is derived
recursively with two rules:

* Rule 1: for ``u < G`` (``G`` a power of two), ``(u, G, G + u)`` is CPO.
* Rule 2: if ``(a, b, c)`` is CPO and all members are below ``G``, then
  ``(a, c + G, b + G)`` is CPO.

The doubling-formula oracle lives in :mod:`zerodiv.doubling` and shares no
code with this module.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from .errors import IndexBoundsError, InvalidTripError

#: Largest dimension exponent accepted by contexts and the CLI.
MAX_N = 12
#: Smallest dimension exponent with zero divisors.
MIN_N = 4


class SignedUnit(NamedTuple):
    sign: int
    index: int

    def __neg__(self) -> "SignedUnit":
        return SignedUnit(-self.sign, self.index)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}e{self.index}"


class Trip(NamedTuple):
    """An associative triplet stored in CPO, rotated so the least member leads."""

    x: int
    y: int
    z: int

    @classmethod
    def cpo(cls, a: int, b: int, c: int) -> "Trip":
        """Rotate an already-oriented sequence so the least member comes first."""
        seq = (a, b, c)
        i = seq.index(min(seq))
        return cls(seq[i], seq[(i + 1) % 3], seq[(i + 2) % 3])

    @property
    def members(self) -> frozenset:
        return frozenset(self)

    def forward_pairs(self) -> tuple:
        """Ordered pairs whose product carries a plus sign."""
        return ((self.x, self.y), (self.y, self.z), (self.z, self.x))

    def successors(self, member: int) -> tuple:
        """The two CPO successors of ``member``, in order."""
        i = self.index(member)
        return self[(i + 1) % 3], self[(i + 2) % 3]

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"


def _top_bit(x: int) -> int:
    return 1 << (x.bit_length() - 1)


def _check_index(k: int, N: int) -> None:
    if not 0 <= k < (1 << N):
        raise IndexBoundsError(f"index {k} outside 0..{(1 << N) - 1} for N={N}")


@lru_cache(maxsize=None)
def _orient(members: frozenset) -> Trip:
    lo_m, mid, hi_m = sorted(members)
    if (lo_m, mid, hi_m) == (1, 2, 3):
        return Trip(1, 2, 3)
    G = _top_bit(hi_m)
    high = [m for m in members if m & G]
    (low,) = [m for m in members if not m & G]
    if G in high:
        return Trip.cpo(low, G, G + low)
    h1, h2 = high
    parent = _orient(frozenset((low, h1 - G, h2 - G)))
    b, c = parent.successors(low)
    return Trip.cpo(low, c + G, b + G)


def orient_trip(members: Iterable[int], N: int | None = None) -> Trip:
    """Return the CPO ordering of three XOR-closed unit indices.

    Raises :class:`InvalidTripError` unless the members are distinct positive
    indices below ``2**N`` whose XOR is zero.
    """
    ms = tuple(members)
    if len(ms) != 3 or len(set(ms)) != 3:
        raise InvalidTripError(f"trip needs three distinct members, got {ms}")
    if 0 in ms or any(m < 0 for m in ms):
        raise InvalidTripError(f"trip members must be positive, got {ms}")
    if ms[0] ^ ms[1] ^ ms[2]:
        raise InvalidTripError(f"members {ms} do not XOR to zero")
    if N is not None and max(ms) >= (1 << N):
        raise InvalidTripError(f"member of {ms} exceeds 2**{N} - 1")
    return _orient(frozenset(ms))


def unit_product(p: int, q: int, N: int) -> SignedUnit:
    """Product ``e_p * e_q`` of two basis units of the 2**N-ions."""
    _check_index(p, N)
    _check_index(q, N)
    if p == 0:
        return SignedUnit(1, q)
    if q == 0:
        return SignedUnit(1, p)
    if p == q:
        return SignedUnit(-1, 0)
    trip = _orient(frozenset((p, q, p ^ q)))
    return SignedUnit(1 if (p, q) in trip.forward_pairs() else -1, p ^ q)


def enumerate_trips(N: int) -> list[Trip]:
    """All trips of the 2**N-ions, sorted, each once.

    There are ``(2**N - 1)(2**N - 2) / 6`` of them.
    """
    if N < 2:
        raise IndexBoundsError(f"trips need N >= 2, got {N}")
    top = 1 << N
    out = []
    for p, q in combinations(range(1, top), 2):
        r = p ^ q
        if r > q:
            out.append(_orient(frozenset((p, q, r))))
    return sorted(out)


def trip_count(N: int) -> int:
    return ((1 << N) - 1) * ((1 << N) - 2) // 6


def _check_power_of_two(G: int) -> None:
    if G < 1 or G & (G - 1):
        raise IndexBoundsError(f"{G} is not a power of 2")


def rule1_trips(G: int) -> list[Trip]:
    """Trips ``(u, G, G + u)`` for every ``0 < u < G``."""
    _check_power_of_two(G)
    return [Trip.cpo(u, G, G + u) for u in range(1, G)]


def rule2_trips(t: Trip, G: int) -> list[Trip]:
    """The three trips obtained by fixing each member of ``t`` in turn.

    For fixed ``a`` with CPO successors ``b, c`` the result is
    ``(a, c + G, b + G)``, in the order the members appear in ``t``.
    """
    _check_power_of_two(G)
    if max(t) >= G:
        raise InvalidTripError(f"{t} has a member >= G={G}")
    out = []
    for a in t:
        b, c = t.successors(a)
        out.append(Trip.cpo(a, c + G, b + G))
    return out


def _pad_index(x: int, j: int, n: int) -> int:
    low = x & ((1 << j) - 1)
    return ((x >> j) << (j + n)) | low


def zero_pad(t: Trip, j: int, n: int, N_max: int = MAX_N) -> Trip:
    """Insert ``n`` zero bits at bit position ``j`` of every member.

    Bits below ``j`` stay put; bits at ``j`` and above shift left by ``n``.
    ``j = 0`` pads on the right, ``j = bit_length - 1`` pads just after
    the leftmost bit of the largest member.

    The padded sequence keeps the orientation of ``t``; this is checked
    against :func:`orient_trip` and an :class:`InvalidTripError` is raised
    if it ever fails.
    """
    if n < 0:
        raise ValueError("pad width must be non-negative")
    width = max(t).bit_length()
    if not 0 <= j <= width:
        raise ValueError(f"pad position {j} outside 0..{width}")
    padded = tuple(_pad_index(m, j, n) for m in t)
    if max(padded) >= (1 << N_max):
        raise IndexBoundsError(f"padding {t} overflows N={N_max}")
    image = Trip.cpo(*padded)
    if orient_trip(padded) != image:
        raise InvalidTripError(f"zero padding flipped orientation of {t}")
    return image


@lru_cache(maxsize=None)
def product_signs(N: int) -> np.ndarray:
    """Dense ``2**N x 2**N`` int8 table of ``sign(e_p * e_q)``.

    Built level by level from the same Rule 0/1/2 recursion that
    :func:`unit_product` uses per pair, so whole emanation tables can be
    evaluated with array indexing. The returned array is read-only.
    """
    if not 0 <= N <= MAX_N:
        raise IndexBoundsError(f"N={N} outside 0..{MAX_N}")
    table = np.ones((1, 1), dtype=np.int8)
    for _ in range(N):
        H = table.shape[0]
        nxt = np.empty((2 * H, 2 * H), dtype=np.int8)
        diag = np.arange(1, H)
        # low x low: unchanged (Rule 0)
        nxt[:H, :H] = table
        # low x high: e_p * e_(G+q) = -sign(p, q); fix identity, Rule 1, squares
        blk = -table
        blk[:, 0] = 1
        blk[diag, diag] = -1
        blk[0, :] = 1
        nxt[:H, H:] = blk
        # high x low
        blk = -table
        blk[:, 0] = 1
        nxt[H:, :H] = blk
        # high x high
        blk = -table
        blk[diag, diag] = -1
        blk[0, 1:] = 1
        nxt[H:, H:] = blk
        table = nxt
    table.setflags(write=False)
    return table
