import json
import subprocess
import sys

import pytest

from zerodiv.cdp_core import unit_product
from zerodiv.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_product(capsys):
    assert run(capsys, "product", "1", "2", "--n", "4")[:2] == (0, "+e3\n")
    assert run(capsys, "product", "9", "9", "--n", "4")[1] == "-e0\n"
    assert run(capsys, "product", "13", "14", "--n", "5")[1].strip() == str(unit_product(13, 14, 5))


def test_product_bounds_error(capsys):
    code, _, err = run(capsys, "product", "40", "2", "--n", "5")
    assert code == 2 and "error" in err


def test_trips(capsys):
    assert run(capsys, "trips", "--n", "5", "--count")[1] == "155\n"
    out = run(capsys, "trips", "--rule2", "3,6,5", "--g", "16")[1]
    assert out.split() == ["(3,21,22)", "(6,19,21)", "(5,22,19)"]


def test_et_ascii(capsys):
    code, out, _ = run(capsys, "et", "--n", "4", "--s", "1")
    assert code == 0
    assert out.splitlines()[1].split() == ["2", "6", "-4", "5", "-7"]


def test_et_json(capsys):
    doc = json.loads(run(capsys, "et", "--n", "5", "--s", "9", "--format", "json")[1])
    assert doc["stats"]["filled"] == 72


def test_et_output_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    assert run(capsys, "et", "--n", "4", "--s", "2", "--format", "csv", "-o", str(path))[0] == 0
    assert path.read_text().startswith("row_label,col_label,P,edge_sign\n")


def test_render(tmp_path, capsys):
    path = tmp_path / "t.pgm"
    run(capsys, "render", "--n", "5", "--s", "15", "--output", str(path), "--scale", "2")
    assert path.read_bytes().startswith(b"P5\n28 28\n255\n")


def test_boxkites(capsys):
    out = run(capsys, "boxkites", "--n", "5", "--s", "1")[1]
    assert "(3, 13, 14, 15, 12, 2) TypeII TypeII" in out
    doc = json.loads(run(capsys, "boxkites", "--n", "5", "--s", "1", "--format", "json")[1])
    assert doc["count"] == 7
    assert {k["family"] for k in doc["boxkites"]} == {"ZeroPadded", "Strongbox", "TypeII"}


def test_census(capsys):
    doc = json.loads(run(capsys, "census", "--n", "5", "--jobs", "1", "--format", "json")[1])
    assert (doc["total"], doc["type_ii"]) == (77, 21)
    assert doc["rows"][8]["band"] == "band(1)"


def test_genealogy(capsys):
    out = run(capsys, "genealogy", "--s", "1", "--nmax", "6")[1]
    assert "(5,14,11) -> (5,27,30); (14,21,27); (11,30,21)" in out
    assert "raw 38, distinct 35" in out
    doc = json.loads(run(capsys, "genealogy", "--s", "1", "--nmax", "7", "--format", "json")[1])
    assert doc["levels"][-1]["count"] == 155


def test_genealogy_out_of_scope(capsys):
    code, _, err = run(capsys, "genealogy", "--s", "9")
    assert code == 2 and "S=9" in err


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--thm", "10", "--n", "6")
    doc = json.loads(out)
    assert code == 0 and doc["checks"][0]["details"]["boxkites"] == 35
    report = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--census", "--n", "5", "--report", str(report))
    assert code == 0
    assert json.loads(report.read_text())["checks"][0]["details"]["total"] == 77


def test_verify_rejects_small_n(capsys):
    assert run(capsys, "verify", "--n", "3")[0] == 2


def test_parse_range():
    assert parse_range("4..6") == [4, 5, 6]
    assert parse_range("5") == [5]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "zerodiv", "product", "4", "3", "--n", "3"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == "-e7\n"


@pytest.mark.parametrize("jobs", ["1", "3"])
def test_et_identical_across_jobs(capsys, jobs):
    out = run(capsys, "et", "--n", "8", "--s", "77", "--format", "csv", "--jobs", jobs)[1]
    ref = run(capsys, "et", "--n", "8", "--s", "77", "--format", "csv", "--jobs", "1")[1]
    assert out == ref
