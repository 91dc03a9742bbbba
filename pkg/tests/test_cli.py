from __future__ import annotations

import json
import xml.etree.ElementTree as ET

import pytest

from tritile.cli import run
from tritile.fileformat import dumps, read_tiling, write_tiling
from tritile.generators import biquadratic

from helpers import shift_one

SVG = "{http://www.w3.org/2000/svg}"


def test_generate_and_verify(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert run(["generate", "biquadratic", "--m", "5", "--n", "7", "-o", str(out)]) == 0
    assert run(["verify", str(out)]) == 0
    assert "N = 74" in capsys.readouterr().out


def test_generate_roundtrip_byte_identical(tmp_path):
    out = tmp_path / "t.json"
    assert run(["generate", "hexagonal", "--k", "2", "-o", str(out)]) == 0
    text = out.read_text()
    assert dumps(read_tiling(out)) == text


def test_verify_json(tmp_path, capsys):
    out = tmp_path / "t.json"
    write_tiling(biquadratic(1, 2), out)
    assert run(["verify", str(out), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] and doc["dmatrix"] == [[0, 0, 1], [0, 0, 2], [1, 2, 0]]


def test_verify_corrupted_names_pair(tmp_path, capsys):
    bad = tmp_path / "corrupted.json"
    write_tiling(shift_one(biquadratic(2, 3)), bad)
    assert run(["verify", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "tiles" in err and "overlap" in err


@pytest.mark.parametrize(
    "argv,code,text",
    [
        (["classify", "--tile", "right-tan", "1/2", "--target", "similar", "--n", "5"], 0, "admissible (biquadratic)"),
        (["classify", "--tile", "oblique", "--target", "similar", "--n", "7"], 1, "inadmissible"),
        (["classify", "--tile", "isosceles-30-30-120", "--target", "equilateral", "--n", "27"], 0, "hexagonal"),
    ],
)
def test_classify(argv, code, text, capsys):
    assert run(argv) == code
    assert text in capsys.readouterr().out


def test_classify_json(capsys):
    assert run(["classify", "--tile", "right-tan", "3/4", "--target", "isosceles-half", "--n", "50", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["witness"]["family"] == "pythagorean"


def test_compose(tmp_path):
    base, sub, out = tmp_path / "b.json", tmp_path / "s.json", tmp_path / "c.json"
    assert run(["generate", "biquadratic", "--m", "1", "--n", "2", "-o", str(base)]) == 0
    assert run(["generate", "biquadratic", "--m", "2", "--n", "3", "-o", str(sub)]) == 0
    # mismatched shapes are a usage error
    assert run(["compose", str(base), str(sub), "-o", str(out)]) == 2
    assert run(["compose", str(base), str(base), "-o", str(out)]) == 0
    assert read_tiling(out).N == 25
    assert run(["verify", str(out)]) == 0


def test_catalog(tmp_path, capsys):
    assert run(["catalog", "list"]) == 0
    assert "thirteen" in capsys.readouterr().out
    out = tmp_path / "n.json"
    assert run(["catalog", "emit", "nine_nonstandard", "-o", str(out)]) == 0
    assert read_tiling(out).N == 9
    assert run(["catalog", "emit", "missing", "-o", str(out)]) == 2


def test_render(tmp_path):
    src, svg = tmp_path / "t.json", tmp_path / "t.svg"
    assert run(["generate", "quadratic", "--n", "3", "--triangle", "0,0;7,1;2,5", "-o", str(src), "--svg", str(svg)]) == 0
    root = ET.parse(svg).getroot()
    assert root.tag == f"{SVG}svg" and root.get("version") == "1.1" and root.get("width") == "800"
    polys = root.iter(f"{SVG}polygon")
    assert len(list(polys)) == 9 + 1
    out = tmp_path / "m.svg"
    assert run(["render", str(src), "-o", str(out), "--markers"]) == 0
    root = ET.parse(out).getroot()
    assert len(list(root.iter(f"{SVG}polygon"))) == 10
    assert len(list(root.iter(f"{SVG}circle"))) == 10


def test_exit_codes(tmp_path):
    assert run([]) == 2
    assert run(["generate", "biquadratic", "--m", "1"]) == 2
    assert run(["generate", "pythagorean", "--p", "1", "--q", "2", "--r", "3"]) == 2
    assert run(["verify", str(tmp_path / "missing.json")]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(["verify", str(bad)]) == 3
    assert run(["classify", "--tile", "pentagon", "--target", "similar", "--n", "5"]) == 2
