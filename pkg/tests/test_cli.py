import json

import pytest

from algebra import FieldKind
from cli import InputSyntaxError, UnknownNameError, input_hash, parse_input, write_report
from main import main

THREE_GENERATOR = "ring p=32003 vars=x,y,z; ideal I = x^2, x*y, z^2;"
PLANE = """
# the maximal ideal of k[x,y] and a saturated-power example
ring p=32003 vars=x,y;
ideal M = x, y;
ideal J = x^2, x*y;
module N = [[x, y], [y^2, 0]];
"""


def _write(tmp_path, text, name="session.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _run_json(capsys, argv):
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)


def test_parse_three_generator_ideal():
    session = parse_input(THREE_GENERATOR)
    assert session.field_spec == "p=32003"
    assert session.variables == ("x", "y", "z")
    assert session.ideals == {"I": ["x^2", "x*y", "z^2"]}


def test_parse_rational_fermat_ideal():
    session = parse_input("ring QQ vars=x,y,z; ideal F = x*(y^3-z^3), y*(x^3-z^3), z*(x^3-y^3);")
    assert session.field_spec == "QQ"
    assert len(session.ideals["F"]) == 3
    assert session.ideals["F"][0] == "x*y^3 - x*z^3"
    assert session.ring().field.kind == FieldKind.RATIONALS


def test_parse_modules_and_comments():
    session = parse_input(PLANE)
    assert session.modules == {"N": [["x", "y"], ["y^2", "0"]]}
    module = session.module("N")
    assert module.free.rank == 2
    assert len(module.relations.generators) == 2
    assert session.module("M").free.rank == 2


def test_round_trip_is_identity():
    session = parse_input(PLANE)
    assert parse_input(session.to_text()) == session
    assert session.to_text().startswith("ring p=32003 vars=x,y;\n")


def test_dangling_operator_reports_position():
    with pytest.raises(InputSyntaxError) as excinfo:
        parse_input("ring p=32003 vars=x,y;\nideal I = x^2 +;")
    assert excinfo.value.line == 2
    assert excinfo.value.column >= 11


@pytest.mark.parametrize("text", [
    "ring p=12 vars=x,y;",
    "ideal I = x;",
    "ring p=7 vars=x,y; ideal I = x, q;",
    "ring p=7 vars=x,y; ideal I = x; ideal I = y;",
    "ring p=7 vars=x,y; ideal I = (x;",
    "ring p=7 vars=x,y; module N = [[x, y], [x]];",
    "ring p=7 vars=x,x;",
    "",
])
def test_malformed_input(text):
    with pytest.raises(InputSyntaxError):
        parse_input(text)


def test_unknown_name():
    session = parse_input(THREE_GENERATOR)
    with pytest.raises(UnknownNameError):
        session.ideal("J")
    with pytest.raises(UnknownNameError):
        session.module("N")


@pytest.mark.parametrize("generator", [
    "x + 0*len(open('marker','w').name)",
    "x + __import__('os').getpid()",
    "exit()",
    "x.is_zero",
])
def test_polynomials_never_evaluate_code(tmp_path, monkeypatch, generator):
    monkeypatch.chdir(tmp_path)
    with pytest.raises(InputSyntaxError) as excinfo:
        parse_input(f"ring p=7 vars=x,y;\nideal I = {generator};")
    assert excinfo.value.line == 2
    assert list(tmp_path.iterdir()) == []


def test_input_hash_ignores_generator_order():
    reordered = parse_input("ring p=32003 vars=x,y,z; ideal I = z^2, x^2, x*y;")
    assert input_hash(reordered) == input_hash(parse_input(THREE_GENERATOR))
    modules = parse_input("ring p=7 vars=x,y; module N = [[y^2, 0], [x, y]]; ideal M = y, x;")
    swapped = parse_input("ring p=7 vars=x,y; ideal M = x, y; module N = [[x, y], [y^2, 0]];")
    assert input_hash(modules) == input_hash(swapped)
    other = parse_input("ring p=32003 vars=x,y,z; ideal I = x^2, x*y, z^3;")
    assert input_hash(other) != input_hash(reordered)


def test_field_override():
    session = parse_input(THREE_GENERATOR)
    assert session.ring("QQ").field.kind == FieldKind.RATIONALS
    assert session.ring("7").field.modulus == 7


def test_lind_command_json(tmp_path, capsys):
    path = _write(tmp_path, THREE_GENERATOR)
    document = _run_json(capsys, [path, "--json", "lind", "--ideal", "I"])
    assert document["command"] == "lind"
    assert document["result"] == {"target": "I", "lind": 1, "componentwiseLinear": False}
    assert document["input-hash"] == input_hash(parse_input(THREE_GENERATOR))


def test_json_output_is_deterministic(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    argv = [path, "--json", "resolve", "--ideal", "J"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_resolve_text_with_betti_table(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    assert main([path, "resolve", "--module", "M", "--betti"]) == 0
    out = capsys.readouterr().out
    assert "Betti table" in out
    assert "total: 2 1" in out


def test_output_file_matches_stdout(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    report = tmp_path / "reports" / "lind.json"
    assert main([path, "--json", "--output", str(report), "lind", "--module", "N"]) == 0
    assert report.read_text(encoding="utf-8") == capsys.readouterr().out


def test_rees_command(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    result = _run_json(capsys, [path, "--json", "rees", "--ideal", "M"])["result"]
    assert result["reesVariables"] == ["w0", "w1"]
    assert result["reesDegrees"] == [1, 1]
    assert len(result["kernel"]) == 1


def test_threshold_command(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    result = _run_json(capsys, [path, "--json", "threshold", "--ideal", "M", "--certify"])["result"]
    assert result["N"] == 0
    assert result["perLevel"][0]["T"] == 1
    assert result["perLevel"][0]["initialForms"] == {"mAdic": 1, "rees": "inf"}


def test_lind_seq_command(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    result = _run_json(capsys, [path, "--json", "lind-seq", "--ideal", "M", "--variant", "quotient",
                                "--max-n", "3"])["result"]
    assert result["values"] == {"1": 0, "2": 1, "3": 1}
    assert result["stableValue"] == 1
    assert result["stabilizationIndex"] == 2


def test_saturate_command(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    result = _run_json(capsys, [path, "--json", "saturate", "--ideal", "J", "--power", "1"])["result"]
    assert result["generators"] == ["x"]
    assert result["minimalDegree"] == 1
    assert result["equalsPower"] is False


def test_sega_command(tmp_path, capsys):
    path = _write(tmp_path, PLANE)
    result = _run_json(capsys, [path, "--json", "sega", "--ideal", "M", "--i", "1", "--q", "1"])["result"]
    assert result["isZero"] is True
    assert result["rank"] == 0


def test_errors_exit_with_status_two(tmp_path, capsys):
    path = _write(tmp_path, THREE_GENERATOR)
    assert main([path, "lind", "--ideal", "J"]) == 2
    assert main([str(tmp_path / "missing.txt"), "lind", "--ideal", "I"]) == 2
    assert main([_write(tmp_path, "ring p=7 vars=x; ideal I = x +;", "bad.txt"), "lind", "--ideal", "I"]) == 2
    assert capsys.readouterr().out == ""


@pytest.mark.slow
def test_three_generator_threshold_command(tmp_path, capsys):
    path = _write(tmp_path, THREE_GENERATOR)
    result = _run_json(capsys, [path, "--json", "threshold", "--ideal", "I"])["result"]
    assert result["N"] == 1
    assert result["n0"] == 0
    assert [level["T"] for level in result["perLevel"]] == [2, 1]
    assert result["perLevel"][1]["n"] == "-inf"


def test_write_report_creates_directories(tmp_path):
    target = tmp_path / "nested" / "dir" / "report.json"
    write_report(str(target), "{}\n")
    assert target.read_text(encoding="utf-8") == "{}\n"
    assert not (tmp_path / "nested" / "dir" / "report.json.tmp").exists()
