import json

import pytest
from hypothesis import given, settings

from squared_squares.geometry import Dissection, GeometryError
from squared_squares.serialize import (
    BouwkampCode,
    ParseError,
    dumps,
    fixtures,
    from_bouwkamp,
    from_json,
    load,
    loads,
    to_bouwkamp,
    to_document,
    to_json,
)

from .conftest import tilings

# Worked out by hand from the 11x11 reference, reading top-down.
ELEVEN_CODE = "(4,3,4)(1,2)(3,2)(1,3)(1,2)(1,2)(4)(1,4)(3)"


def test_fixtures_load():
    fx = fixtures()
    assert set(fx) == {"eleven", "sixteen"}
    assert fx["eleven"].n == 11 and fx["sixteen"].n == 16


def test_text_round_trip(eleven):
    text = dumps(eleven, comment="reference\nsecond line")
    assert text.startswith("# reference\n# second line\nn=11\n")
    assert loads(text) == eleven


def test_text_parse_errors():
    with pytest.raises(ParseError, match="header"):
        loads("0 0 1\n")
    with pytest.raises(ParseError, match="missing"):
        loads("# only a comment\n")
    with pytest.raises(ParseError, match="x y s"):
        loads("n=2\n0 0\n")
    with pytest.raises(GeometryError):
        loads("n=2\n0 0 1\n")
    assert len(loads("n=2\n0 0 1\n", check=False)) == 1


def test_json_round_trip(sixteen):
    text = to_json(sixteen, source="reference", canonical=False)
    doc = json.loads(text)
    assert doc["metadata"] == {"source": "reference", "canonical": False}
    assert doc["elements"][0] == {"x": 0, "y": 0, "s": 4}
    assert from_json(text) == sixteen
    assert "metadata" not in to_document(sixteen)


def test_json_errors():
    with pytest.raises(ParseError):
        from_json("{not json")
    with pytest.raises(ParseError):
        from_json('{"n": 2}')
    with pytest.raises(GeometryError):
        from_json('{"n": 2, "elements": [{"x": 0, "y": 0, "s": 1}]}')


def test_load_detects_format(tmp_path, eleven):
    txt = tmp_path / "a.txt"
    txt.write_text(dumps(eleven))
    js = tmp_path / "a.json"
    js.write_text(to_json(eleven))
    assert load(txt) == load(js) == eleven


def test_bouwkamp_of_eleven(eleven):
    code = to_bouwkamp(eleven)
    assert str(code) == ELEVEN_CODE
    assert from_bouwkamp(ELEVEN_CODE, 11) == eleven


def test_bouwkamp_parse():
    code = BouwkampCode.parse(" (4, 3,4) (1,2) ")
    assert code.rows == ((4, 3, 4), (1, 2))
    assert code.sizes() == [4, 3, 4, 1, 2]
    for bad in ("4,3,4", "(4,,3)", "()", "(0)"):
        with pytest.raises(ParseError):
            BouwkampCode.parse(bad)


def test_bouwkamp_decoding_errors():
    with pytest.raises(GeometryError):
        from_bouwkamp("(2,2)", 3)
    with pytest.raises(GeometryError):
        from_bouwkamp("(1,1)", 2)
    with pytest.raises(GeometryError):
        from_bouwkamp("(1,1)(1,1)(1)", 2)
    # right sizes, wrong grouping
    with pytest.raises(ParseError):
        from_bouwkamp("(1)(1)(1,1)", 2)


@settings(max_examples=300, deadline=None)
@given(tilings(max_n=20))
def test_round_trips_on_random_tilings(d):
    assert loads(dumps(d)) == d
    assert from_json(to_json(d)) == d
    code = to_bouwkamp(d)
    assert BouwkampCode.parse(str(code)) == code
    assert from_bouwkamp(str(code), d.n) == d


def test_bouwkamp_groups_are_contiguous():
    d = Dissection(3, [(0, 0, 1), (1, 0, 1), (2, 0, 1), (0, 1, 2), (2, 1, 1), (2, 2, 1)])
    assert str(to_bouwkamp(d)) == "(2,1)(1)(1,1,1)"
