"""Slow, independent reference implementations used to freeze expected values.

Nothing here imports the library's arithmetic: each oracle recomputes its
quantity from definitions (polynomial expansion, monomial counting, sympy
ranks, explicit face closures).
"""

from __future__ import annotations

import math
from itertools import combinations, combinations_with_replacement

import sympy


def h_from_f_polynomial(f: list[int]) -> list[int]:
    """Expand sum_i f_{i-1} (x-1)^(d-i) and read off the coefficients of x^(d-i)."""
    x = sympy.symbols("x")
    d = len(f) - 1
    poly = sympy.expand(sum(f[i] * (x - 1) ** (d - i) for i in range(d + 1)))
    return [int(poly.coeff(x, d - i)) for i in range(d + 1)]


def macaulay_power_monomials(a: int, d: int) -> int:
    """Size of the degree-(d+1) part of the largest order ideal whose degree-d
    part is the revlex-initial segment of a monomials (Macaulay's extremal case)."""
    if a == 0:
        return 0
    nvars = a + d + 1
    mons = sorted(combinations_with_replacement(range(nvars), d), key=lambda m: sorted(m, reverse=True))
    seg = set(mons[:a])
    top = max(v for m in seg for v in m) + 2
    return sum(
        all(m[:i] + m[i + 1:] in seg for i in range(d + 1))
        for m in combinations_with_replacement(range(top), d + 1)
    )


def macaulay_greedy_ok(a: int, d: int, terms: list[tuple[int, int]]) -> bool:
    """Check the defining shape of a Macaulay representation given as (top, i) pairs
    meaning C(top, i): tops strictly decreasing, indices d, d-1, ..., top >= i."""
    if sum(math.comb(t, i) for t, i in terms) != a:
        return False
    idx = [i for _, i in terms]
    if idx != list(range(d, d - len(terms), -1)) or min(idx, default=1) < 1:
        return False
    tops = [t for t, _ in terms]
    return all(x > y for x, y in zip(tops, tops[1:])) and all(t >= i for t, i in terms)


def k_scan(h1: int, h2: int) -> int:
    """max{a >= 0 : h1 - 3a >= 0 and h2 + 3a <= C(h1 - 3a + 1, 2)}, or -1."""
    best = -1
    for a in range(h1 // 3 + 1):
        if h2 + 3 * a <= math.comb(h1 - 3 * a + 1, 2):
            best = a
    return best


def closure(facets) -> set[tuple[int, ...]]:
    out = {()}
    for f in facets:
        for k in range(1, len(f) + 1):
            out.update(combinations(sorted(f), k))
    return out


def f_vector_brute(facets) -> list[int]:
    faces = closure(facets)
    top = max(len(f) for f in faces)
    return [sum(1 for f in faces if len(f) == k) for k in range(top + 1)]


def reduced_betti_sympy(facets, modulus: int | None = None) -> list[int]:
    """Reduced Betti numbers beta_0..beta_dim from sympy matrix ranks (over Q,
    or over GF(p) when ``modulus`` is given)."""
    faces = closure(facets)
    by = {}
    for f in faces:
        by.setdefault(len(f), []).append(f)
    dim = max(by) - 1

    def rank(k):  # boundary from k-faces (size k+1) to (k-1)-faces
        if k < 0 or k > dim:
            return 0
        rows = sorted(by[k])
        cols = sorted(by[k + 1])
        index = {r: i for i, r in enumerate(rows)}
        m = sympy.zeros(len(rows), len(cols))
        for j, f in enumerate(cols):
            for i in range(len(f)):
                m[index[f[:i] + f[i + 1:]], j] = (-1) ** i
        if modulus is None:
            return m.rank()
        return _rank_mod(m.tolist(), modulus)

    return [len(by[k + 1]) - rank(k) - rank(k + 1) for k in range(dim + 1)]


def _rank_mod(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                fac = m[r][c]
                m[r] = [(x - fac * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def covering_triangle_sets(n: int) -> int:
    """Count triangle sets on [n] covering all of [n], by direct enumeration."""
    tris = list(combinations(range(1, n + 1), 3))
    full = set(range(1, n + 1))
    return sum(
        1
        for mask in range(1, 1 << len(tris))
        if {v for i, t in enumerate(tris) if mask >> i & 1 for v in t} == full
    )


def stage3_capacity_brute(h1: int, h2: int) -> int:
    """Triangles on [h1+3] that are not faces but have all three edges present,
    after coning {1,2} and fanning over the first h2 colex pairs from vertex 1."""
    verts = range(3, h1 + 4)
    pairs = sorted(combinations(verts, 2), key=lambda e: (e[1], e[0]))[:h2]
    facets = [(1, 2, v) for v in verts] + [(1, a, b) for a, b in pairs]
    faces = closure(facets)
    return sum(
        1
        for t in combinations(range(1, h1 + 4), 3)
        if t not in faces and all(e in faces for e in combinations(t, 2))
    )
