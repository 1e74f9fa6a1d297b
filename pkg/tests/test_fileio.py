import json

import pytest

from buchsbaum.complex import GapVertex, InvalidFace, from_facets
from buchsbaum.fileio import (
    ParseError,
    atomic_write,
    format_json,
    format_text,
    parse_complex,
    read_complex,
    write_complex,
)


def test_round_trips(tmp_path):
    c = from_facets([[1, 2, 3], [2, 3, 4], [4, 5, 6]])
    assert parse_complex(format_json(c)) == c
    assert parse_complex(format_text(c)) == c
    for name in ("c.json", "c.txt"):
        write_complex(c, tmp_path / name, "json" if name.endswith("json") else "text")
        assert read_complex(tmp_path / name) == c


def test_text_comments_and_blank_lines():
    c = parse_complex("# a triangle pair\n1 2 3   # first\n\n2 3 4\n")
    assert c.facets == ((1, 2, 3), (2, 3, 4))


@pytest.mark.parametrize("text, err, msg", [
    ("1 2 x\n", ParseError, "line 1"),
    ("1 2 2\n", InvalidFace, "repeated vertex"),
    ('{"n": 3, "facets": [[1, 2, 2]]}', InvalidFace, r"\[1, 2, 2\]"),
    ('{"n": 5, "facets": [[1, 2, 3]]}', GapVertex, "n"),
    ('{"facets": 3}', ParseError, "facets"),
    ('{"facets": [[1,2,3]', ParseError, "invalid JSON"),
])
def test_parse_errors(text, err, msg):
    with pytest.raises(err, match=msg):
        parse_complex(text)


def test_json_layout():
    c = from_facets([[2, 1, 3]])
    assert json.loads(format_json(c)) == {"n": 3, "facets": [[1, 2, 3]]}


def test_atomic_write_leaves_no_temp_files(tmp_path):
    target = tmp_path / "out.txt"
    atomic_write(target, "a\n")
    atomic_write(target, "b\n")
    assert target.read_text() == "b\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]
