import pytest

from zerodiv.boxkites import Context
from zerodiv.emanation import build_table

# Rows of the N=4, S=1 table with "" for blank cells.
GOLDEN_N4_S1 = {
    "labels": (2, 4, 6, 7, 5, 3),
    "rows": [
        ["", "6", "-4", "5", "-7", ""],
        ["6", "", "-2", "3", "", "-7"],
        ["-4", "-2", "", "", "3", "5"],
        ["5", "3", "", "", "-2", "-4"],
        ["-7", "", "3", "-2", "", "6"],
        ["", "-7", "5", "-4", "6", ""],
    ],
}


@pytest.fixture(scope="session")
def golden():
    return GOLDEN_N4_S1


@pytest.fixture(scope="session")
def table():
    """Memoized ``build_table`` keyed by ``(N, S)``."""
    cache = {}

    def get(N, S):
        if (N, S) not in cache:
            cache[N, S] = build_table(Context(N, S))
        return cache[N, S]

    return get
