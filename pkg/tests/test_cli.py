import json
from pathlib import Path

import pytest

from symbpow.cli import Session, run
from symbpow.errors import ParseError

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_powers_equal_fermat(capsys):
    code, out, _ = call(capsys, "powers-equal", "--ideal", DATA / "fermat3.id", "--m", 2)
    assert code == 0
    assert out.startswith("UNEQUAL (m = 2), witness degree 8")


def test_classify_grid(capsys):
    code, out, _ = call(capsys, "classify", "--config", DATA / "grid_2x2.p1p1", "--max-m", 3, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["p1p1"]["kind"] == "CI"
    assert [v["equal"] for v in data["verdicts"]] == [True, True, True]


def test_ideal_operations(capsys):
    code, out, _ = call(capsys, "ideal", "colon", "--ideal", "%s:I" % (DATA / "small.id"),
                        "--other", "%s:J" % (DATA / "small.id"))
    assert code == 0 and out.split() == ["x0", "x1"]
    code, out, _ = call(capsys, "ideal", "saturate", "--ideal", "%s:I" % (DATA / "small.id"))
    assert out.split() == ["x0"]


def test_hilbert_and_betti(capsys):
    code, out, _ = call(capsys, "hilbert", "--config", DATA / "skew_lines.lines", "--bound", 4, "--json")
    assert json.loads(out)["values"] == [1, 4, 6, 8, 10]
    code, out, _ = call(capsys, "betti", "--ideal", DATA / "fermat3.id", "--json")
    assert json.loads(out)["pdim"] == 2


def test_output_is_deterministic(capsys):
    a = call(capsys, "resolve", "--ideal", DATA / "fermat3.id", "--power", 2, "--maps")
    b = call(capsys, "resolve", "--ideal", DATA / "fermat3.id", "--power", 2, "--maps")
    assert a == b


def test_p1p1_triple_points(capsys):
    code, out, _ = call(capsys, "p1p1", "--alpha", "2,1", "--triple", "--json")
    assert code == 0 and json.loads(out)["triple_points_match"] is True


def test_exit_codes(capsys, tmp_path):
    assert call(capsys, "gb", "--ideal", tmp_path / "missing.id")[0] == 2
    bad = tmp_path / "bad.id"
    bad.write_text("ring R = QQ[x, y]\nideal I = x +\n")
    code, _, err = call(capsys, "gb", "--ideal", bad)
    assert code == 2 and "bad.id:2" in err
    assert call(capsys, "classify", "--ideal", "%s:I" % (DATA / "small.id"))[0] == 1
    assert call(capsys, "no-such-command")[0] == 2
    assert call(capsys, "repro", "no-such-target")[0] == 2


def test_power_complex_refuses_without_hypotheses(capsys):
    code, _, err = call(capsys, "power-complex", "--config", DATA / "skew_lines.lines", "--m", 2)
    assert code == 1 and "acm" in err


def test_repro_list_and_run(capsys):
    code, out, _ = call(capsys, "repro", "--list")
    assert "example-3.4" in out.split() and "skew-lines" in out.split()
    code, out, _ = call(capsys, "repro", "scroll-2")
    assert code == 0 and out.rstrip().endswith("PASS")


def test_session_parser():
    S = Session().loads("ring S = GF(7)[a, b] degrees (1,0),(0,1)\nideal I = a*b, a^2\ntag I lci=asserted\n")
    I = S.ideal()
    assert I.ring.field.p == 7 and I.tags["lci"] == "asserted"
    with pytest.raises(ParseError):
        Session().loads("ideal I = x\n")
    with pytest.raises(ParseError):
        Session().loads("ring R = QQ[x]\nideal I = x\nideal I = x^2\n")
    with pytest.raises(ParseError):
        Session().loads("ring R = QQ[x,y,z]\npoint: [1:0:0]\nline: x, y\n")
