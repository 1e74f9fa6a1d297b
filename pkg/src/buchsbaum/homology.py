"""Reduced simplicial homology over Q and GF(2) from augmented boundary ranks."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from buchsbaum.complex import Face, SimplicialComplex


class Field(enum.Enum):
    RATIONALS = "Q"
    GF2 = "GF2"


FIELDS = (Field.RATIONALS, Field.GF2)


def parse_field(name: str) -> Field:
    key = name.strip().upper()
    for f in Field:
        if key in (f.value.upper(), f.name):
            return f
    raise ValueError(f"unknown field {name!r} (expected Q or GF2)")


def boundary_matrix(c: SimplicialComplex, k: int, field: Field = Field.RATIONALS) -> list[list[int]]:
    """Matrix of the k-th augmented boundary map C_k -> C_{k-1}.

    Rows are the (k-1)-faces and columns the k-faces, both in lexicographic
    order. For k = 0 the single row is the empty face, so the map is the
    augmentation. Over Q the entry for removing the vertex at position i is
    (-1)^i; over GF2 every incidence is 1.
    """
    if k < 0 or k > c.dim:
        raise IndexError(f"boundary index {k} outside 0..{c.dim}")
    rows = c.faces(k)
    cols = c.faces(k + 1)
    index = {f: r for r, f in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, f in enumerate(cols):
        for i in range(len(f)):
            sign = -1 if (i % 2 and field is Field.RATIONALS) else 1
            mat[index[f[:i] + f[i + 1:]]][j] = sign
    return mat


def bareiss_rank(mat: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination; every division is exact."""
    m = [row[:] for row in mat if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == len(m):
            break
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        prow = m[rank]
        p = prow[col]
        for r in range(rank + 1, len(m)):
            row = m[r]
            a = row[col]
            if a:
                m[r] = [(p * x - a * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                m[r] = [p * x // prev for x in row]
        prev = p
        rank += 1
    return rank


def gf2_rank(rows: list[int]) -> int:
    """Rank over GF(2) of rows given as int bitsets."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return len(basis)


def matrix_rank(mat: list[list[int]], field: Field) -> int:
    if field is Field.RATIONALS:
        return bareiss_rank(mat)
    return gf2_rank([sum(1 << j for j, x in enumerate(row) if x % 2) for row in mat])


def _gf2_boundary_rank(c: SimplicialComplex, k: int) -> int:
    """Rank of the k-th boundary map over GF(2), one bitset per k-face."""
    index = {f: i for i, f in enumerate(c.faces_by_size.get(k, ()))}
    rows = [
        sum(1 << index[f[:i] + f[i + 1:]] for i in range(len(f)))
        for f in c.faces_by_size.get(k + 1, ())
    ]
    return gf2_rank(rows)


def _boundary_rank(c: SimplicialComplex, k: int, field: Field) -> int:
    if field is Field.GF2:
        return _gf2_boundary_rank(c, k)
    return bareiss_rank(boundary_matrix(c, k, field))


@lru_cache(maxsize=1 << 16)
def _reduced_betti(facets: tuple[Face, ...], field: Field) -> tuple[int, ...]:
    c = SimplicialComplex(facets, max((max(f) for f in facets if f), default=0))
    dims = [len(c.faces_by_size.get(k + 1, ())) for k in range(-1, c.dim + 1)]
    # the augmentation has rank 1 as soon as there is a vertex
    ranks = [0, int(c.dim >= 0)] + [_boundary_rank(c, k, field) for k in range(1, c.dim + 1)] + [0]
    # ranks[k + 1] = rank of the boundary out of degree k, for k = -1..dim+1
    return tuple(dims[k + 1] - ranks[k + 1] - ranks[k + 2] for k in range(-1, c.dim + 1))


def reduced_betti(c: SimplicialComplex, field: Field = Field.RATIONALS) -> dict[int, int]:
    """All reduced Betti numbers, indexed from -1 up to dim c.

    Only the complex {()} has a nonzero entry in degree -1.
    """
    vals = _reduced_betti(c.facets, field)
    return {k - 1: b for k, b in enumerate(vals)}


@dataclass(frozen=True)
class BettiVector:
    field: Field
    entries: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.entries[i] if 0 <= i < len(self.entries) else 0

    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.entries))


def betti_numbers(c: SimplicialComplex, field: Field = Field.RATIONALS) -> BettiVector:
    """Reduced Betti numbers beta_0 .. beta_{dim}."""
    rb = reduced_betti(c, field)
    return BettiVector(field, tuple(rb[i] for i in range(c.dim + 1)))


def reduced_euler_characteristic(f: tuple[int, ...]) -> int:
    """sum_{k >= -1} (-1)^k f_k for f = (f_{-1}, f_0, ...)."""
    return sum((-1) ** (i - 1) * x for i, x in enumerate(f))
