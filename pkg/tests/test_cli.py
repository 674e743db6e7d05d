import json
import pathlib
import xml.etree.ElementTree as ET

import pytest

from accordion.cli import main

GOLD = pathlib.Path(__file__).parent / "golden"
CASES = ["square", "fan6", "zig7"]


def run(capsys, monkeypatch, args, stdin=""):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", CASES)
def test_golden_json(name, capsys, monkeypatch):
    src = (GOLD / f"{name}.input.json").read_text()
    for cmd in ("facets", "nests"):
        code, out, _ = run(capsys, monkeypatch, [cmd], src)
        assert code == 0
        assert out == (GOLD / f"{name}.{cmd}.json").read_text()
        assert run(capsys, monkeypatch, [cmd], src)[1] == out


@pytest.mark.parametrize("name", CASES)
def test_golden_svg(name, capsys, monkeypatch):
    src = (GOLD / f"{name}.input.json").read_text()
    code, out, _ = run(capsys, monkeypatch, ["render"], src)
    assert code == 0 and out == (GOLD / f"{name}.svg").read_text()
    nest = (GOLD / f"{name}.phi.json").read_text()
    code, out, _ = run(capsys, monkeypatch, ["render", "--input", "-"], nest)
    assert code == 0 and out == (GOLD / f"{name}.nest.svg").read_text()
    ET.fromstring(out)


@pytest.mark.parametrize("name", CASES)
def test_phi_then_psi_byte_identical(name, capsys, monkeypatch):
    ref = json.loads((GOLD / f"{name}.facets.json").read_text())
    for F in ref["facets"]:
        src = json.dumps({"dissection": ref["reference"], "facet": F}, sort_keys=True) + "\n"
        code, nest, _ = run(capsys, monkeypatch, ["phi"], src)
        assert code == 0
        code, back, _ = run(capsys, monkeypatch, ["psi"], nest)
        assert code == 0 and back == src


def test_files_and_trace(tmp_path, capsys, monkeypatch):
    inp = tmp_path / "in.json"
    inp.write_text(json.dumps({"dissection": {"n": 4, "diagonals": [[1, 5]]},
                               "facet": [[2, 6]]}))
    out = tmp_path / "out.json"
    code, stdout, err = run(capsys, monkeypatch,
                            ["phi", "--input", str(inp), "--output", str(out), "--trace"])
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["nest"] == [[[1, 5]]]
    assert json.loads(err)["trace"][0]["x"] == 6
    svg = tmp_path / "d.svg"
    code, _, _ = run(capsys, monkeypatch, ["render", "--input", str(inp), "--svg", str(svg)])
    assert code == 0 and len(ET.parse(svg).getroot().findall(".//{*}circle")) == 8


def test_verify_exit_and_summary(capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["verify", "5"])
    assert code == 0
    assert "15 dissections, 0 failures" in err
    assert json.loads(out)["dissections"] == 15
    assert run(capsys, monkeypatch, ["verify", "--max-n", "4"])[0] == 0


@pytest.mark.parametrize("stdin, needle", [
    ('{"n":4,"diagonals":[[2,6]]}', "(2, 6)"),
    ('{"n":4,"diagonals":[[1,5],[3,7]]}', "cross"),
    ('{"n":4,"diagonals":[[1,5]', "invalid JSON"),
    ('{"n":4,"diagonals":[[1,5,7]]}', "[1, 5, 7]"),
    ('[1]', "object"),
])
def test_validation_errors(stdin, needle, capsys, monkeypatch):
    code, out, err = run(capsys, monkeypatch, ["facets"], stdin)
    assert code == 1 and out == ""
    assert needle in err


def test_bad_facet_and_nest(capsys, monkeypatch):
    D = {"n": 5, "diagonals": [[1, 5], [5, 9]]}
    code, _, err = run(capsys, monkeypatch, ["phi"], json.dumps({"dissection": D,
                                                                 "facet": [[2, 8]]}))
    assert code == 1 and "not a facet" in err
    code, _, err = run(capsys, monkeypatch, ["psi"], json.dumps(
        {"dissection": D, "nest": [[[1, 5]], [[1, 5], [5, 9]]]}))
    assert code == 1 and "incompatible" in err
    code, _, err = run(capsys, monkeypatch, ["psi"], json.dumps({"dissection": D}))
    assert code == 1 and "nest" in err


def test_verify_needs_bound(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["verify"])[0] == 1
