import json

import pytest

from multitwist.catalog import catalog
from multitwist.cli import EXIT_INPUT, EXIT_OK, main, quadratic_closed_form
from multitwist.flat import build_flat


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


MU_TABLE = {
    "A2": "x - 1", "A3": "x - 2", "A4": "x^2 - 3*x + 1", "A5": "x - 3", "A7": "x^2 - 4*x + 2",
    "D4": "x - 3", "D5": "x^2 - 4*x + 2", "D6": "x^2 - 5*x + 5", "D7": "x^2 - 4*x + 1",
    "E6": "x^2 - 4*x + 1", "E7": "x^3 - 6*x^2 + 9*x - 3", "P2": "x - 4", "Q7": "x - 4",
    "R8": "x - 4", "FillingPair(3)": "x - 64",
}


@pytest.mark.parametrize("name, minpoly", sorted(MU_TABLE.items()))
def test_analyze_mu(capsys, name, minpoly):
    code, d = run_json(capsys, "analyze", "--name", name)
    assert code == EXIT_OK
    assert d["mu"]["minpoly_text"] == minpoly


def test_analyze_a4_fields(capsys):
    _, d = run_json(capsys, "analyze", "--name", "A4")
    assert d["mu"]["closed_form"] == "(3 + √5)/2"
    assert d["delta"] == "e_6" and d["genus"] == 2
    assert d["N"] == [[1, 0], [1, 1]]
    assert d["J"]["rank"] == 2


def test_analyze_is_deterministic(capsys):
    a = run(capsys, "analyze", "--name", "E7", "--json")[1]
    b = run(capsys, "analyze", "--name", "E7", "--json")[1]
    assert a == b


def test_digits_flag_and_env(capsys, monkeypatch):
    _, d = run_json(capsys, "--digits", "5", "analyze", "--name", "A4")
    assert d["mu"]["decimal"] == "2.6180"
    monkeypatch.setenv("MTL_DIGITS", "20")
    _, d = run_json(capsys, "analyze", "--name", "A4")
    assert d["mu"]["digits"] == 20


def test_config_file(capsys, tmp_path):
    path = tmp_path / "a4.mtl"
    path.write_text(catalog("A4").dumps())
    _, d = run_json(capsys, "analyze", "--config", str(path))
    assert d["mu"]["minpoly_text"] == "x^2 - 3*x + 1"


def test_classify_lehmer(capsys):
    code, d = run_json(capsys, "classify", "--name", "E10", "--word", "A B")
    assert code == EXIT_OK
    assert d["classification"] == "PSEUDO_ANOSOV"
    assert d["lambda"]["minpoly_text"] == "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1"


def test_classify_text(capsys):
    code, out = run(capsys, "classify", "--name", "A4", "--word", "A B")
    assert code == EXIT_OK and "FINITE_ORDER" in out


def test_compare(capsys):
    code, d = run_json(capsys, "compare", "--name1", "A4", "--word1", "A B^-1",
                       "--name2", "A6", "--word2", "A B^-1")
    assert code == EXIT_OK and d["verdict"] == "NOT_COMMENSURABLE"


def test_catalog_list(capsys):
    code, out = run(capsys, "catalog", "list")
    assert code == EXIT_OK
    assert "A4" in out and "(3 + √5)/2" in out


def test_catalog_show_roundtrip(capsys, tmp_path):
    path = tmp_path / "e6.mtl"
    assert main(["catalog", "show", "E6", "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    _, d = run_json(capsys, "analyze", "--config", str(path))
    assert d["delta"] == "e_10"


def test_cover_verify(capsys):
    code, d = run_json(capsys, "cover", "verify", "--name", "A4", "--cut", "3,5", "--degree", "2",
                       "--words", "A B:A B^2")
    assert code == EXIT_OK and d["ok"]


def test_cover_build_and_spec_file(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"degree": 3, "monodromy": {"3": [2, 3, 1], "5": [2, 3, 1]}}))
    out = tmp_path / "cover.mtl"
    code, _ = run(capsys, "cover", "build", "--name", "A4", "--spec", str(spec), "--out", str(out))
    assert code == EXIT_OK
    _, d = run_json(capsys, "analyze", "--config", str(out))
    assert d["squares"] == 9 and d["mu"]["minpoly_text"] == "x^2 - 9*x + 9"


@pytest.mark.parametrize("argv", [
    ["analyze", "--name", "Z99"],
    ["classify", "--name", "A4", "--word", "A^0"],
    ["cover", "verify", "--name", "A4", "--cut", "5", "--degree", "2"],
    ["cover", "build", "--name", "A4", "--cut", "1,2", "--degree", "2"],
    ["analyze"],
])
def test_input_errors(capsys, argv):
    assert main(argv) == EXIT_INPUT


def test_quadratic_closed_form():
    assert quadratic_closed_form(build_flat(catalog("D6")).mu) == "(5 + √5)/2"
    assert quadratic_closed_form(build_flat(catalog("A7")).mu) == "2 + √2"
    assert quadratic_closed_form(build_flat(catalog("E7")).mu) is None
