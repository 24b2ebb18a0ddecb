import json
from importlib import resources

import pytest
from click.testing import CliRunner

from ssg.cli import cli
from ssg.semigroup import load


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, [str(a) for a in args])
    return invoke


@pytest.fixture
def z12(tmp_path, run):
    path = tmp_path / "z12.sgp"
    assert run("construct", "zn", 12, "-o", path).exit_code == 0
    return path


def test_construct_round_trips(tmp_path, run, z12):
    S = load(z12)
    assert S.size == 12 and S.name == "Z_12"
    out = tmp_path / "t3.sgp"
    assert run("construct", "tn", 3, "-o", out).exit_code == 0
    assert load(out).size == 27
    prod = tmp_path / "p.sgp"
    assert run("construct", "product", z12, z12, "-o", prod).exit_code == 0
    assert load(prod).size == 144


def test_construct_stdout(run):
    res = run("construct", "mat", 2, 2)
    assert res.exit_code == 0 and json.loads(res.output)["size"] == 16


def test_construct_table_from_text(tmp_path, run):
    src = tmp_path / "t.txt"
    src.write_text("2\n0 0\n1 1\n")
    res = run("construct", "table", src)
    assert res.exit_code == 0


def test_bad_input_exit_codes(tmp_path, run):
    src = tmp_path / "bad.txt"
    src.write_text("2\n0 1\n1 0 3\n")
    assert run("construct", "table", src).exit_code == 2
    src.write_text("2\n1 0\n0 0\n")   # not associative
    assert run("construct", "table", src).exit_code == 2
    assert run("construct", "zn", 0).exit_code == 2
    assert run("analyze", tmp_path / "missing.sgp").exit_code == 2


def test_analyze_text(run, z12):
    res = run("analyze", z12)
    assert res.exit_code == 0
    assert "subgroups (6)" in res.output and "{3, 9}" in res.output


def test_analyze_json_is_deterministic(run, z12):
    a = run("analyze", z12, "--json")
    b = run("analyze", z12, "--json")
    assert a.exit_code == 0 and a.output == b.output
    data = json.loads(a.output)
    assert data["schema_version"] == 1 and "timing" not in data
    assert [g["members"] for g in data["maximal_subgroups"]] == [["3", "9"], ["4", "8"], ["1", "5", "7", "11"]]
    timed = json.loads(run("analyze", z12, "--json", "--timing").output)
    assert "timing" in timed


def test_analyze_modes_and_cosets(run, z12):
    data = json.loads(run("analyze", z12, "--json", "--mode", "global-identity-only").output)
    assert data["policy"] == "global-identity-only"
    assert all(g["identity"] == "1" for g in data["subgroups"])
    data = json.loads(run("analyze", z12, "--json", "--coset", "3,9").output)
    assert {c["side"] for c in data["cosets"]} == {"left", "right"}
    assert run("analyze", z12, "--coset", "2,4").exit_code == 2


def test_matrix_labels_in_cosets(tmp_path, run):
    path = tmp_path / "m.sgp"
    run("construct", "mat", 2, 2, "-o", path)
    res = run("analyze", path, "--json", "--coset", "[[1,0],[0,1]],[[0,1],[1,0]]")
    assert res.exit_code == 0
    sizes = json.loads(res.output)["cosets"][0]["class_sizes"]
    assert sorted(sizes) == [1, 1, 1, 1, 2, 2, 2, 2, 2, 2]


def test_packaged_fixture(run):
    path = resources.files("ssg") / "data" / "z12.sgp"
    with resources.as_file(path) as p:
        assert run("analyze", p).exit_code == 0


def test_verify_commands(run):
    res = run("verify", "book")
    assert res.exit_code == 0 and "FAIL" not in res.output
    res = run("verify", "errata", "--extra")
    assert res.exit_code == 0 and "Theorem 6.1.2: refuted" in res.output
