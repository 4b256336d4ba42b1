from __future__ import annotations

import json
import subprocess
import sys

import pytest

from knothodge.cli import build_table, format_table, main, parse_table
from knothodge.fixtures import FIXTURE_IDS, chord_primitives, euler_fixture, load


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_table_json_single_entry(capsys):
    code, out = run(capsys, "table", "--kind", "homotopy", "--parity", "odd", "--jmax", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"kind": "homotopy", "parity": "odd", "jmax": 1,
                               "entries": [{"i": 2, "j": 1, "value": 1}]}


def test_table_homology_even_first_row(capsys):
    code, out = run(capsys, "table", "--kind", "homology", "--parity", "even", "--jmax", "1", "--format", "json")
    assert json.loads(out)["entries"] == [{"i": 1, "j": 1, "value": -1}]


def test_table_empty(capsys):
    _, out = run(capsys, "table", "--jmax", "0", "--format", "json")
    assert json.loads(out)["entries"] == []


def test_csv_blanks_zero_cells(capsys):
    _, out = run(capsys, "table", "--jmax", "2", "--format", "csv")
    assert out == "j,1,2\n1,,1\n2,-1,1\n"


def test_rejects_bad_jmax(capsys):
    assert main(["table", "--jmax", "65"]) == 2


def test_format_rejects_unknown():
    with pytest.raises(ValueError):
        format_table(build_table("homotopy", "odd", 2), "xml")


@pytest.mark.parametrize("fmt", ["csv", "json", "md"])
@pytest.mark.parametrize("ident", [f for f in FIXTURE_IDS if f != "chord_primitives"])
def test_fixture_roundtrip(fmt, ident):
    kind, parity = ident.split("_")
    T = euler_fixture(kind, parity)
    assert parse_table(format_table(T, fmt), fmt, kind, parity) == T


def test_output_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "knothodge.cli", "table", "--jmax", "12", "--format", "md", "--parity", "even"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_fixtures_load():
    assert len(load("homotopy_odd").rows) == 23
    assert chord_primitives().rows[4] == {2: 1, 4: 1}
    with pytest.raises(KeyError):
        load("nope")


def test_graphs_count(capsys):
    code, out = run(capsys, "graphs", "count", "--i", "2", "--j", "3", "--parity", "odd")
    assert code == 0 and out.strip().endswith("total 5")
    _, out = run(capsys, "graphs", "count", "--i", "3", "--j", "3", "--parity", "even", "--loop-free")
    assert out.strip().endswith("total 0")


def test_graphs_homology(capsys):
    _, out = run(capsys, "graphs", "homology", "--i", "2", "--j", "1", "--parity", "odd")
    assert out == "v=0 degree=d-3 dim=1\n"
    _, out = run(capsys, "graphs", "homology", "--i", "2", "--j", "1", "--parity", "odd", "--k", "2")
    assert out == "zero\n"


def test_graphs_list_and_euler(capsys):
    _, out = run(capsys, "graphs", "list", "--i", "2", "--j", "3")
    assert len(out.splitlines()) == 5
    _, out = run(capsys, "graphs", "euler", "--i", "1", "--j", "3")
    assert out.startswith("euler -1")


def test_graphs_out_of_bounds(capsys):
    assert main(["graphs", "count", "--i", "9", "--j", "3"]) == 2


def test_genfun_dump(capsys):
    _, out = run(capsys, "genfun", "--parity", "even", "--jmax", "2")
    assert out == "P_0 = 1\nP_1 = -x\nP_2 = x^3\n"


def test_oracle_command(capsys):
    code, out = run(capsys, "oracle", "--jmax", "3")
    assert code == 0 and out.count("PASS") == 4


@pytest.mark.parametrize("suite", ["tables", "closed-forms", "oracle", "graphs", "homology"])
def test_verify_suites_pass_and_negative_controls_fail(capsys, suite):
    code, out = run(capsys, "verify", suite)
    assert code == 0 and "FAIL" not in out
    assert out.count("PASS") > 1
    code, out = run(capsys, "verify", suite, "--corrupt", "--quiet")
    assert code == 1 and "FAIL" in out
