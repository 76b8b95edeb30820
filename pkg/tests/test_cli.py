import json

import pytest

from qspecies.cli import main

F4_IRREDUCIBLE_COUNT = 6  # monic irreducible quadratics over F_4


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_gen_text(capsys):
    code, out = run(capsys, "gen", "Elem", "--order", "2")
    assert code == 0
    assert "2/3" in out  # coefficient f_2/gamma_2 = 4/6


def test_gen_json_schema(capsys):
    code, out = run(capsys, "gen", "E(Vplus)", "--q", "2", "--order", "3",
                    "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["q"] == 2 and doc["order"] == 3
    assert [t["n"] for t in doc["series"]] == [0, 1, 2, 3]
    assert [t["coeff"] for t in doc["series"]] == ["1", "1", "2/3", "19/56"]


def test_gen_csv(capsys):
    code, out = run(capsys, "gen", "Vplus", "--order", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,coeff"
    assert lines[1] == "0,0"
    assert lines[2] == "1,1"


def test_type_series_values(capsys):
    code, out = run(capsys, "type", "Aut", "--order", "3", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()[1:]
    assert rows == ["0,1", "1,1", "2,3", "3,6"]
    code, out = run(capsys, "type", "E(Vplus)", "--order", "5", "--format", "csv")
    assert [r.split(",")[1] for r in out.strip().splitlines()[1:]] == \
        ["1", "1", "2", "3", "5", "7"]


def test_type_with_q3(capsys):
    code, out = run(capsys, "type", "Aut", "--q", "3", "--order", "2",
                    "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[1:] == ["0,1", "1,2", "2,8"]


def test_wgen(capsys):
    code, out = run(capsys, "wgen", "E(mark(Vplus))", "--order", "2",
                    "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["series"][1]["coeff"] == "t"
    assert doc["series"][2]["coeff"] in ("1/2*t^2+1/6*t", "1/6*t+1/2*t^2")


def test_zindex_text(capsys):
    code, out = run(capsys, "zindex", "Elem", "--order", "2")
    assert code == 0
    assert "x[z+1,1]" in out and "x[z+1,2]" in out and "2/3" in out


def test_ext_field(capsys):
    code, out = run(capsys, "gen", "Elem", "--q", "2", "--ext-k", "2",
                    "--order", "1", "--format", "csv")
    assert code == 0
    # over F_4 there are 4 elements on a line and gamma_1 = 3
    assert out.strip().splitlines()[1:] == ["0,1", "1,4/3"]


def test_classes_command(capsys):
    code, out = run(capsys, "classes", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["classes"]) == 3
    assert sum(c["class_size"] for c in doc["classes"]) == 6


def test_irreducibles_command(capsys):
    code, out = run(capsys, "irreducibles", "2")
    assert code == 0
    assert "z^2+z+1" in out
    code, out = run(capsys, "irreducibles", "1", "--exclude-z")
    assert "z+1" in out and out.count("\n") == 1


def test_oracle_count(capsys):
    code, out = run(capsys, "oracle", "count", "End", "2", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[1:] == ["0,1", "1,2", "2,16"]


def test_oracle_orbits(capsys):
    code, out = run(capsys, "oracle", "orbits", "Elem", "2", "--format", "csv")
    assert code == 0
    assert out.strip().splitlines()[1:] == ["0,1", "1,2", "2,2"]


def test_oracle_fix(capsys):
    code, out = run(capsys, "oracle", "fix", "Elem", "2", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    fixes = sorted(r["fix"] for r in rows)
    assert fixes == [1, 2, 4]  # irreducible, unipotent, identity classes


def test_verify_passes(capsys):
    code, out = run(capsys, "verify", "--max-dim", "2")
    assert code == 0
    assert "FAIL" not in out and "PASS" in out


def test_parse_error_exit_code_2(capsys):
    assert main(["gen", "Elem +"]) == 2
    assert main(["gen", "NoSuchSpecies"]) == 2


def test_bad_field_exit_code_2(capsys):
    assert main(["gen", "Elem", "--q", "6"]) == 2


def test_budget_exit_code(capsys):
    code = main(["oracle", "count", "End", "3", "--budget", "10"])
    assert code != 0
