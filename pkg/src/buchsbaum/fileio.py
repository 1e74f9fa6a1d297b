"""Reading and writing complexes as JSON or plain text, with atomic writes."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from buchsbaum.complex import ComplexError, GapVertex, InvalidFace, SimplicialComplex, from_facets


class ParseError(ComplexError):
    pass


def parse_text(text: str) -> SimplicialComplex:
    """One facet per line as space-separated vertex ids; ``#`` starts a comment."""
    facets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            facets.append([int(tok) for tok in line.replace(",", " ").split()])
        except ValueError:
            raise ParseError(f"line {lineno}: facet {line!r} is not a list of integers") from None
    return from_facets(facets)


def parse_json(text: str) -> SimplicialComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(data, dict) or not isinstance(data.get("facets"), list):
        raise ParseError('expected an object with a "facets" list')
    for f in data["facets"]:
        if not isinstance(f, list):
            raise InvalidFace(f"facet {f!r} is not a list")
    c = from_facets(data["facets"])
    n = data.get("n", c.n)
    if n != c.n:
        raise GapVertex(f'"n" is {n} but the facets use vertices 1..{c.n}')
    return c


def parse_complex(text: str) -> SimplicialComplex:
    """Either format; JSON is recognised by a leading brace."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read_complex(path: str | os.PathLike) -> SimplicialComplex:
    return parse_complex(Path(path).read_text())


def format_json(c: SimplicialComplex) -> str:
    return json.dumps(c.to_json()) + "\n"


def format_text(c: SimplicialComplex) -> str:
    lines = [f"# n={c.n}"] + [" ".join(map(str, f)) for f in c.facets]
    return "\n".join(lines) + "\n"


def atomic_write(path: str | os.PathLike, text: str) -> None:
    """Write through a temporary file in the same directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_complex(c: SimplicialComplex, path: str | os.PathLike, fmt: str = "json") -> None:
    atomic_write(path, format_json(c) if fmt == "json" else format_text(c))
