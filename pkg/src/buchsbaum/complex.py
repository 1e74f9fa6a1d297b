"""Facet-based finite simplicial complexes on the vertex set 1..n."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import AbstractSet, Iterable, Mapping, Sequence

from buchsbaum.hvec import f_to_h

Face = tuple[int, ...]


class ComplexError(ValueError):
    """Base class for malformed complexes and invalid face operations."""


class EmptyInput(ComplexError):
    pass


class GapVertex(ComplexError):
    pass


class InvalidFace(ComplexError):
    pass


class NotAFace(ComplexError):
    pass


class FacePresent(ComplexError):
    pass


def make_face(vertices: Iterable[int]) -> Face:
    """Validate a vertex collection and return it as a sorted tuple."""
    vs = list(vertices)
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvalidFace(f"facet {vs}: non-integer vertex {v!r}")
        if v < 1:
            raise InvalidFace(f"facet {vs}: vertex ids must be positive, got {v}")
    if len(set(vs)) != len(vs):
        raise InvalidFace(f"facet {vs}: repeated vertex")
    return tuple(sorted(vs))


def _maximal(faces: Iterable[Face]) -> tuple[Face, ...]:
    """Drop every face contained in another one; result sorted lexicographically."""
    uniq = sorted(set(faces), key=len, reverse=True)
    kept: list[Face] = []
    kept_sets: list[frozenset[int]] = []
    for f in uniq:
        fs = frozenset(f)
        if any(fs <= k for k in kept_sets):
            continue
        kept.append(f)
        kept_sets.append(fs)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex stored by its facets.

    ``n`` is the largest vertex id that may occur; vertex ids need not be
    contiguous for derived complexes such as links, which keep the original
    labels. The complex ``{()}`` (only the empty face) has ``facets == ((),)``.
    """

    facets: tuple[Face, ...]
    n: int

    @classmethod
    def from_maximal(cls, faces: Iterable[Face], n: int | None = None) -> SimplicialComplex:
        facets = _maximal(faces)
        if n is None:
            n = max((max(f) for f in facets if f), default=0)
        return cls(facets, n)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for f in self.facets for v in f}))

    @cached_property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def faces_by_size(self) -> dict[int, frozenset[Face]]:
        """Map from cardinality to the set of faces of that cardinality."""
        out: dict[int, set[Face]] = {0: {()}}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.setdefault(k, set()).update(combinations(f, k))
        return {k: frozenset(v) for k, v in out.items()}

    @cached_property
    def face_set(self) -> frozenset[Face]:
        return frozenset().union(*self.faces_by_size.values())

    def faces(self, size: int) -> list[Face]:
        return sorted(self.faces_by_size.get(size, ()))

    def __contains__(self, face: object) -> bool:
        return tuple(sorted(face)) in self.face_set  # type: ignore[arg-type]

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def to_json(self) -> dict:
        return {"n": self.n, "facets": [list(f) for f in self.facets]}


def from_facets(candidate_faces: Sequence[Iterable[int]]) -> SimplicialComplex:
    """Build a complex on [n] from a list of generating faces.

    Dominated faces are removed and ``n`` is the largest vertex id. Every id in
    1..n has to occur, otherwise the labelling has a hole and ``GapVertex`` is
    raised.
    """
    if not candidate_faces:
        raise EmptyInput("no faces given")
    faces = [make_face(f) for f in candidate_faces]
    if any(not f for f in faces):
        raise InvalidFace("empty facet")
    c = SimplicialComplex.from_maximal(faces)
    missing = sorted(set(range(1, c.n + 1)) - set(c.vertices))
    if missing:
        raise GapVertex(f"vertex {missing[0]} does not occur in any facet (n={c.n})")
    return c


def f_vector(c: SimplicialComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_{dim})."""
    return tuple(len(c.faces_by_size.get(k, ())) for k in range(c.dim + 2))


def h_vector(c: SimplicialComplex) -> tuple[int, ...]:
    return f_to_h(f_vector(c))


def link(c: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    f = tuple(sorted(face))
    if f not in c.face_set:
        raise NotAFace(f"{list(f)} is not a face")
    fs = set(f)
    # facets through f, minus f, are again pairwise incomparable
    rest = [tuple(v for v in g if v not in fs) for g in c.facets if fs.issubset(g)]
    return SimplicialComplex(tuple(sorted(rest)), c.n)


def all_links(c: SimplicialComplex) -> dict[Face, SimplicialComplex]:
    """The link of every face, built in one pass over the facets."""
    parts: dict[Face, list[Face]] = {}
    for g in c.facets:
        for k in range(len(g) + 1):
            for f in combinations(g, k):
                parts.setdefault(f, []).append(tuple(v for v in g if v not in f))
    return {f: SimplicialComplex(tuple(sorted(rest)), c.n) for f, rest in parts.items()}


def vertex_links(c: SimplicialComplex) -> dict[int, SimplicialComplex]:
    parts: dict[int, list[Face]] = {}
    for g in c.facets:
        for v in g:
            parts.setdefault(v, []).append(tuple(u for u in g if u != v))
    return {v: SimplicialComplex(tuple(sorted(rest)), c.n) for v, rest in sorted(parts.items())}


def star_facets(c: SimplicialComplex, v: int) -> list[Face]:
    return [f for f in c.facets if v in f]


def connected_components(c: SimplicialComplex) -> list[tuple[int, ...]]:
    """Vertex classes of the 1-skeleton, sorted by smallest vertex."""
    adj: dict[int, set[int]] = {}
    for f in c.facets:
        for v in f:
            adj.setdefault(v, set()).update(f)
    seen: set[int] = set()
    out = []
    for v in adj:
        if v in seen:
            continue
        comp = {v}
        todo = [v]
        while todo:
            new = adj[todo.pop()] - comp
            comp |= new
            todo.extend(new)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return sorted(out)


def is_connected(c: SimplicialComplex) -> bool:
    return len(connected_components(c)) <= 1


def relabel(c: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    """Apply a vertex map; vertices not in ``mapping`` are kept."""
    faces = [tuple(sorted(mapping.get(v, v) for v in f)) for f in c.facets]
    return SimplicialComplex.from_maximal(faces)


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Place ``b`` on fresh vertices a.n+1, a.n+2, ..."""
    shifted = [tuple(v + a.n for v in f) for f in b.facets]
    return SimplicialComplex(tuple(sorted(a.facets + tuple(shifted))), a.n + b.n)


def add_faces(c: SimplicialComplex, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Union of ``c`` with the complex generated by ``faces``."""
    new = [make_face(f) for f in faces]
    n = max([c.n] + [max(f) for f in new if f])
    return SimplicialComplex.from_maximal(list(c.facets) + new, n)


class GlueClass(enum.Enum):
    """How a new triangle meets a 2-dimensional complex.

    The first three kinds keep a Buchsbaum complex Buchsbaum and shift its
    h-vector by a single unit: ``THREE_EDGES`` in h_3, ``TWO_EDGES`` in h_2,
    ``ONE_EDGE`` in h_1.
    """

    THREE_EDGES = "ThreeEdges"
    TWO_EDGES = "TwoEdges"
    ONE_EDGE = "OneEdge"
    UNSUPPORTED = "Unsupported"

    @property
    def h_delta(self) -> tuple[int, int, int, int] | None:
        return _GLUE_DELTA.get(self)


_GLUE_DELTA = {
    GlueClass.THREE_EDGES: (0, 0, 0, 1),
    GlueClass.TWO_EDGES: (0, 0, 1, 0),
    GlueClass.ONE_EDGE: (0, 1, 0, 0),
}


def glue_kind(
    vertices: AbstractSet[int], edges: AbstractSet[Face], tri: Face
) -> GlueClass:
    """Glue class of the triangle ``tri`` against a complex given by its
    vertex and edge sets. ``tri`` must not already be a face."""
    present = [e for e in combinations(tri, 2) if e in edges]
    if len(present) == 3:
        return GlueClass.THREE_EDGES
    if len(present) == 2:
        return GlueClass.TWO_EDGES
    if len(present) == 1:
        (third,) = set(tri) - set(present[0])
        if third not in vertices:
            return GlueClass.ONE_EDGE
    return GlueClass.UNSUPPORTED


def classify_glue(c: SimplicialComplex, t: Iterable[int]) -> GlueClass:
    """Classify how the closed triangle ``t`` meets ``c``.

    Only the three intersection patterns with a known h-vector shift are
    named; anything else, including a triangle touching ``c`` in a single
    vertex or nowhere, is ``UNSUPPORTED``.
    """
    tri = make_face(t)
    if len(tri) != 3:
        raise InvalidFace(f"{list(tri)} is not a triangle")
    if tri in c.face_set:
        raise FacePresent(f"{list(tri)} is already a face")
    return glue_kind(set(c.vertices), c.faces_by_size.get(2, frozenset()), tri)
