"""
Command line tests
"""

import orjson
import pytest
from click.testing import CliRunner

from main import cli

from conftest import FIXTURES


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def crystal_file(runner, tmp_path):
    path = tmp_path / "b21.json"
    result = runner.invoke(cli, ["build", "A", "2", "2,1", "-o", str(path)])
    assert result.exit_code == 0, result.output
    return str(path)


def test_build_to_stdout(runner):
    result = runner.invoke(cli, ["build", "A", "2", "2,1"])
    assert result.exit_code == 0
    doc = orjson.loads(result.stdout)
    assert len(doc["elements"]) == 8
    assert doc["model"] == {"kind": "tableau", "n": 3, "shape": [2, 1]}


def test_build_rank_one(runner):
    result = runner.invoke(cli, ["build", "A", "1", "1"])
    assert result.exit_code == 0
    assert len(orjson.loads(result.stdout)["elements"]) == 2


def test_build_errors(runner):
    result = runner.invoke(cli, ["build", "A", "2", "1,2"])
    assert result.exit_code == 1
    assert "Error" in result.output
    result = runner.invoke(cli, ["build", "C", "2", "1,0"])
    assert result.exit_code == 1


def test_load(runner, crystal_file):
    result = runner.invoke(cli, ["load", crystal_file])
    assert result.exit_code == 0
    assert "8 elements" in result.output
    result = runner.invoke(cli, ["load", str(FIXTURES / "bad_string_length.json")])
    assert result.exit_code == 1


def test_classify_json(runner, crystal_file):
    result = runner.invoke(cli, ["classify", crystal_file, "hw; f1 @hw; f2 @hw", "--json"])
    assert result.exit_code == 0
    report = orjson.loads(result.stdout)
    assert report["ideal"] and not report["principal"]
    assert report["ideal_generators"] == [[1], [2]]


def test_classify_table(runner, crystal_file):
    result = runner.invoke(cli, ["classify", crystal_file, "demazure [2,1]"])
    assert result.exit_code == 0
    assert "demazure" in result.output.lower()


def test_subset_spec_error(runner, crystal_file):
    result = runner.invoke(cli, ["subset", crystal_file, "f1 f1 @hw"])
    assert result.exit_code == 1
    assert "f1 f1 @hw" in result.output


def test_demazure_and_ideal(runner, crystal_file):
    result = runner.invoke(cli, ["demazure", crystal_file, "2,1"])
    assert len(orjson.loads(result.stdout)["members"]) == 5
    result = runner.invoke(cli, ["ideal", crystal_file, "1;2"])
    assert len(orjson.loads(result.stdout)["members"]) == 3


def test_intersect(runner, crystal_file):
    result = runner.invoke(cli, ["intersect", crystal_file, "1,2", "2,1"])
    assert result.exit_code == 0
    assert len(orjson.loads(result.stdout)["members"]) == 3


def test_atoms_and_character(runner, crystal_file):
    result = runner.invoke(cli, ["atoms", crystal_file])
    assert result.exit_code == 0
    assert "x2*x3^2" in result.output
    result = runner.invoke(cli, ["character", crystal_file, "demazure [1]"])
    assert "x1^2*x2 + x1*x2^2" in result.output


def test_verify(runner):
    result = runner.invoke(cli, ["verify", "axioms", "atom-partition", "--json"])
    assert result.exit_code == 0
    docs = orjson.loads(result.stdout)
    assert [d["name"] for d in docs] == ["axioms", "atom-partition"]
    result = runner.invoke(cli, ["verify", "nope"])
    assert result.exit_code == 2
    assert "unknown suites" in result.output


def test_verify_statement_names(runner):
    result = runner.invoke(cli, ["verify", "theoremC", "--type", "A", "--rank", "2", "--hw", "2,1"])
    assert result.exit_code == 0, result.output
    assert "ideal-classification" in result.output
    result = runner.invoke(cli, ["verify", "atoms", "--w", "all", "--json"])
    assert result.exit_code == 0, result.output
    docs = orjson.loads(result.stdout)
    assert [d["name"] for d in docs] == ["atom-strings", "atom-partition"]
    assert docs[1]["summary"] == "atom sizes 1,1,1,2,2,1 sum to 8"
    result = runner.invoke(cli, ["verify", "atoms", "--w", "2,1", "--json"])
    assert orjson.loads(result.stdout)[1]["summary"] == "atom sizes 1,1,1,2 sum to 5"


def test_export_dot(runner, crystal_file):
    result = runner.invoke(cli, ["export-dot", crystal_file, "--subset", "demazure [1]"])
    assert result.exit_code == 0
    assert result.stdout.startswith("digraph crystal {")
    assert result.stdout.count("doublecircle") == 6
    assert result.stdout.count("style=filled") == 2
