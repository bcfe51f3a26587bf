import pytest

from zerodiv.boxkites import Context, discover_boxkites
from zerodiv.cdp_core import enumerate_trips
from zerodiv.errors import OutOfScopeError
from zerodiv.genealogy import genealogy_run, pathion_family, trip_machine

N5_RULE1 = [(3, 10, 9), (6, 15, 9), (5, 12, 9)]
N5_RULE2 = [(3, 13, 14), (6, 11, 13), (5, 14, 11)]
N6_MEDIANS = {(3, 18, 17), (5, 20, 17), (6, 23, 17), (9, 24, 17),
              (10, 27, 17), (12, 29, 17), (15, 30, 17)}


def test_octonions_from_quaternions():
    out = trip_machine([(1, 2, 3)], 4)
    assert set(out.zigzags()) == set(enumerate_trips(3))


def test_pathion_level():
    out = trip_machine([(3, 6, 5)], 8, S=1)
    assert out.median_zigzags == N5_RULE1
    assert out.sides == N5_RULE2
    assert out.redundant == []


def test_chingon_level_redundancy():
    levels = genealogy_run(1, 6)
    m = levels[2].machine
    assert set(m.median_zigzags) == N6_MEDIANS
    assert len(m.rule1_medians) == 10
    assert m.raw_count == 38 and len(levels[2].zigzags) == 35
    assert {r.rule1 for r in m.redundant} == {(11, 16, 27), (13, 16, 29), (14, 16, 30)}
    sides = dict(m.rule2_sides)
    assert sides[(5, 14, 11)] == [(5, 27, 30), (14, 21, 27), (11, 30, 21)]


def test_trip_machine_rejects():
    with pytest.raises(ValueError):
        trip_machine([(1, 2, 3)], 6)
    with pytest.raises(ValueError):
        trip_machine([(3, 6, 5)], 4)


@pytest.mark.parametrize("S", range(1, 8))
def test_counts_every_sedenion_strut(S):
    levels = genealogy_run(S, 7)
    assert [len(lvl.zigzags) for lvl in levels] == [1, 7, 35, 155]


def test_roles():
    lvl = genealogy_run(1, 5)[1]
    assert lvl.role((3, 6, 5)) == "rule0"
    assert lvl.role((6, 15, 9)) == "rule1"
    assert lvl.role((6, 11, 13)) == "rule2"


@pytest.mark.parametrize("S", [0, 8, 9])
def test_out_of_scope(S):
    with pytest.raises(OutOfScopeError):
        genealogy_run(S, 6)


def test_pathion_families():
    fam = {k.labels: pathion_family(1, k) for k in discover_boxkites(Context(5, 1))}
    assert fam[(3, 6, 5, 4, 7, 2)] == "ZeroPadded"
    assert fam[(3, 10, 9, 8, 11, 2)] == "Strongbox"
    assert fam[(6, 11, 13, 12, 10, 7)] == "TypeII"
    k8 = discover_boxkites(Context(5, 8))[0]
    assert pathion_family(8, k8) == "Atlas"
    with pytest.raises(OutOfScopeError):
        pathion_family(2, k8)
