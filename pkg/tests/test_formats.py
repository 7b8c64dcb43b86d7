import pytest
from hypothesis import given, strategies as st

from qcocycle.cocycle import DimensionError, mochizuki_cocycle, q6_appendix_cocycle
from qcocycle.formats import (
    FormatError,
    dumps_cocycle,
    dumps_quandle,
    loads_cocycle,
    loads_quandle,
    parse_quandle_text,
    read_quandle,
    write_quandle,
)
from qcocycle.quandle import make_dihedral, make_q6


def test_r3_text():
    assert dumps_quandle(make_dihedral(3)) == "3\n0 2 1\n2 1 0\n1 0 2\n"


@pytest.mark.parametrize("X", [make_dihedral(3), make_dihedral(7), make_q6()])
def test_quandle_roundtrip(X, tmp_path):
    text = dumps_quandle(X)
    Y = loads_quandle(text)
    assert Y.table == X.table and Y.labels == X.labels
    assert dumps_quandle(Y) == text
    path = tmp_path / "x.qnd"
    write_quandle(X, path)
    assert path.read_text() == text
    assert read_quandle(path).table == X.table


def test_labels_in_file():
    text = dumps_quandle(make_q6())
    assert text.splitlines()[1].endswith(" # (1234)")


@pytest.mark.parametrize(
    "text",
    ["", "x\n", "2\n0 1\n", "2\n0 1\n1 a\n", "2\n0 1 # a\n1 0\n", "0\n", "2\n0 1#a\n0 1\n"],
)
def test_quandle_format_errors(text):
    with pytest.raises(FormatError):
        parse_quandle_text(text)


def test_parse_without_axioms():
    table, labels = parse_quandle_text("2\n0 0\n0 1\n")
    assert table == ((0, 0), (0, 1)) and labels is None


@pytest.mark.parametrize("c", [q6_appendix_cocycle(), mochizuki_cocycle(3), mochizuki_cocycle(5)])
def test_cocycle_roundtrip(c):
    text = dumps_cocycle(c)
    d = loads_cocycle(text, c.quandle)
    assert d.table == c.table and dumps_cocycle(d) == text


def test_cocycle_header():
    text = dumps_cocycle(q6_appendix_cocycle())
    lines = text.splitlines()
    assert lines[0] == "cocycle2 6 4"
    assert "0 4 2" in lines  # phi(1,5) = 2 in 1-based numbering
    assert len(lines) == 1 + sum(1 for r in q6_appendix_cocycle().table for v in r if v)


def test_cocycle_wrong_quandle():
    with pytest.raises(DimensionError):
        loads_cocycle("cocycle2 6 4\n", make_dihedral(3))


@pytest.mark.parametrize(
    "text", ["cocycle4 3 3\n", "cocycle2 3\n", "cocycle2 3 3\n0 1\n", "cocycle2 3 3\n0 5 1\n",
             "cocycle2 3 3\n0 1 1\n0 1 2\n", "cocycle2 3 3\n0 x 1\n"]
)
def test_cocycle_format_errors(text):
    with pytest.raises(FormatError):
        loads_cocycle(text, make_dihedral(3))


@given(st.integers(2, 13))
def test_dihedral_roundtrip_any(p):
    X = make_dihedral(p)
    assert dumps_quandle(loads_quandle(dumps_quandle(X))) == dumps_quandle(X)
