"""Exhaustive enumeration of pure 2-dimensional complexes on few vertices.

A complex on [n] is a nonempty set of triangles covering every vertex; it is
encoded as a bitmask over the C(n, 3) triangles in lexicographic order.
``census`` evaluates whole blocks of masks at once with numpy lookup tables,
while ``enumerate_pure2`` yields ordinary ``SimplicialComplex`` objects.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator

import numpy as np

from buchsbaum.complex import Face, SimplicialComplex, is_connected
from buchsbaum.homology import FIELDS, BettiVector, Field, betti_numbers
from buchsbaum.hvec import buchsbaum_decomposition, connected_criterion
from buchsbaum.properties import is_buchsbaum, novik_swartz_check

MAX_N = 6
MAX_N_OVERRIDE = 7
WORKERS_ENV = "BUCHSBAUM_WORKERS"

# Nonzero minors of a 2-dim boundary matrix with r <= 21 rows are bounded by
# 3^(r/2) < 2^17 (Hadamard); any larger prime gives the rational rank.
RANK_PRIME = 2_147_483_647


class TooLarge(ValueError):
    pass


def worker_count() -> int:
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def triangles(n: int) -> list[Face]:
    return list(combinations(range(1, n + 1), 3))


def _check_n(n: int, allow_large: bool) -> None:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    limit = MAX_N_OVERRIDE if allow_large else MAX_N
    if n > limit:
        raise TooLarge(f"n={n} exceeds the enumeration limit {limit}")


def enumerate_pure2(
    n: int,
    filter: Callable[[SimplicialComplex], bool] | None = None,
    allow_large: bool = False,
) -> Iterator[SimplicialComplex]:
    """Every pure 2-dimensional complex with vertex set exactly [n]."""
    _check_n(n, allow_large)
    tris = triangles(n)
    full = (1 << n) - 1
    vbits = [sum(1 << (v - 1) for v in t) for t in tris]
    for mask in range(1, 1 << len(tris)):
        chosen = [i for i in range(len(tris)) if mask >> i & 1]
        cover = 0
        for i in chosen:
            cover |= vbits[i]
        if cover != full:
            continue
        c = SimplicialComplex(tuple(tris[i] for i in chosen), n)
        if filter is None or filter(c):
            yield c


@dataclass(frozen=True)
class CensusRecord:
    n: int
    h: tuple[int, int, int, int]
    connected: bool
    buchsbaum: bool
    link_acyclic: bool
    betti_q: BettiVector
    betti_gf2: BettiVector
    count: int

    def key(self) -> tuple:
        return (self.n, self.h, self.connected, self.buchsbaum, self.link_acyclic,
                self.betti_q.entries, self.betti_gf2.entries)


CSV_HEADER = "n,h1,h2,h3,connected,buchsbaum,link_acyclic,b1_q,b2_q,b1_gf2,b2_gf2,count"


def record_csv_row(r: CensusRecord) -> str:
    vals = [r.n, *r.h[1:], int(r.connected), int(r.buchsbaum), int(r.link_acyclic),
            r.betti_q[1], r.betti_q[2], r.betti_gf2[1], r.betti_gf2[2], r.count]
    return ",".join(str(v) for v in vals)


def record_json(r: CensusRecord) -> dict:
    return {
        "n": r.n,
        "h": list(r.h),
        "connected": r.connected,
        "buchsbaum": r.buchsbaum,
        "link_acyclic": r.link_acyclic,
        "betti_q": list(r.betti_q.entries),
        "betti_gf2": list(r.betti_gf2.entries),
        "count": r.count,
    }


@dataclass
class CensusResult:
    n: int
    records: list[CensusRecord]
    complexes: int = 0
    identity_checked: int = 0
    identity_violations: list[int] = field(default_factory=list)


# ---------------------------------------------------------------- tables


def _graph_stats(edges: list[tuple[int, int]]) -> tuple[bool, int, int, int]:
    """(nonempty and connected, #vertices, #edges, #components) of a graph."""
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in edges:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps = len({find(a) for a in parent})
    return bool(edges) and comps == 1, len(parent), len(edges), comps


@dataclass
class _Tables:
    n: int
    tris: list[Face]
    star: list[list[int]]          # triangle indices through each vertex
    link_ok: list[np.ndarray]      # vertex link connected, indexed by star submask
    link_tree: list[np.ndarray]
    link_b1: list[np.ndarray]      # first Betti number of the link graph
    tri_edges: np.ndarray          # edge bitmask per triangle
    edges: list[tuple[int, int]]
    bnd_rows: list[tuple[int, int, int]]  # edge indices of each triangle


def _tables(n: int) -> _Tables:
    tris = triangles(n)
    edges = list(combinations(range(1, n + 1), 2))
    eidx = {e: i for i, e in enumerate(edges)}
    star: list[list[int]] = []
    ok, tree, b1 = [], [], []
    for v in range(1, n + 1):
        through = [i for i, t in enumerate(tris) if v in t]
        star.append(through)
        link_edges = [tuple(u for u in tris[i] if u != v) for i in through]
        size = 1 << len(through)
        a_ok = np.zeros(size, dtype=bool)
        a_tree = np.zeros(size, dtype=bool)
        a_b1 = np.zeros(size, dtype=np.int64)
        for s in range(size):
            g = [link_edges[j] for j in range(len(through)) if s >> j & 1]
            conn, nv, ne, comps = _graph_stats(g)
            a_ok[s] = conn
            a_tree[s] = conn and ne == nv - 1
            a_b1[s] = ne - nv + comps
        ok.append(a_ok)
        tree.append(a_tree)
        b1.append(a_b1)
    bnd = [tuple(eidx[e] for e in combinations(t, 2)) for t in tris]
    tri_edges = np.array([sum(1 << i for i in r) for r in bnd], dtype=np.int64)
    return _Tables(n, tris, star, ok, tree, b1, tri_edges, edges, bnd)


# ---------------------------------------------------------------- ranks


def batched_rank(mats: np.ndarray, prime: int) -> np.ndarray:
    """Rank mod ``prime`` of every matrix in a (B, R, C) stack."""
    a = np.mod(mats, prime).astype(np.int64)
    nb, nr, nc = a.shape
    used = np.zeros((nb, nr), dtype=bool)
    batch = np.arange(nb)
    for col in range(nc):
        cand = (a[:, :, col] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        prow = a[batch, piv]
        prow = (prow * _modinv(prow[:, col], prime)[:, None]) % prime
        factor = np.where(cand, a[:, :, col], 0)
        factor[batch, piv] = 0
        a -= factor[:, :, None] * prow[:, None, :]
        a %= prime
        used[batch[has], piv[has]] = True
    return used.sum(axis=1)


def batched_rank_gf2(rows: np.ndarray, ncols: int) -> np.ndarray:
    """GF(2) rank of every matrix in a (B, R) stack of int64 row bitsets."""
    a = rows.copy()
    nb = a.shape[0]
    used = np.zeros(a.shape, dtype=bool)
    batch = np.arange(nb)
    for col in range(ncols):
        cand = (((a >> col) & 1) == 1) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        piv = cand.argmax(axis=1)
        prow = a[batch, piv]
        hit = cand.copy()
        hit[batch, piv] = False
        a ^= np.where(hit, prow[:, None], 0)
        used[batch[has], piv[has]] = True
    return used.sum(axis=1)


def _modinv(x: np.ndarray, prime: int) -> np.ndarray:
    result = np.ones_like(x)
    base = x % prime
    e = prime - 2
    while e:
        if e & 1:
            result = (result * base) % prime
        base = (base * base) % prime
        e >>= 1
    return result


# ---------------------------------------------------------------- census


def _bits(mask: np.ndarray, idx: list[int]) -> np.ndarray:
    out = np.zeros_like(mask)
    for j, t in enumerate(idx):
        out |= ((mask >> t) & 1) << j
    return out


def _components(edge_mask: np.ndarray, tb: _Tables) -> np.ndarray:
    n = tb.n
    adj = [np.zeros_like(edge_mask) for _ in range(n)]
    for i, (a, b) in enumerate(tb.edges):
        bit = (edge_mask >> i) & 1
        adj[a - 1] |= bit << (b - 1)
        adj[b - 1] |= bit << (a - 1)
    unreached = np.full_like(edge_mask, (1 << n) - 1)
    comps = np.zeros_like(edge_mask)
    for _ in range(n):
        low = unreached & -unreached
        reach = low
        for _ in range(n):
            grown = reach.copy()
            for v in range(n):
                grown |= np.where((reach >> v) & 1 == 1, adj[v], 0)
            reach = grown
        comps += low != 0
        unreached &= ~reach
    return comps


def _boundary_stack(mask: np.ndarray, tb: _Tables) -> np.ndarray:
    """Dense (B, #triangles, #edges) boundary matrices, one row per present triangle."""
    nt, ne = len(tb.tris), len(tb.edges)
    out = np.zeros((len(mask), nt, ne), dtype=np.int64)
    for t, (e0, e1, e2) in enumerate(tb.bnd_rows):
        on = (mask >> t) & 1
        out[:, t, e0] = on
        out[:, t, e1] = -on
        out[:, t, e2] = on
    return out


def _census_block(mask: np.ndarray, tb: _Tables, with_betti: bool) -> dict[str, np.ndarray]:
    n = tb.n
    idx = [_bits(mask, s) for s in tb.star]
    covered = np.logical_and.reduce([i != 0 for i in idx])
    mask = mask[covered]
    idx = [i[covered] for i in idx]
    buchsbaum = np.logical_and.reduce([tb.link_ok[v][idx[v]] for v in range(n)])
    acyclic = buchsbaum & np.logical_and.reduce([tb.link_tree[v][idx[v]] for v in range(n)])
    link_b1 = sum(tb.link_b1[v][idx[v]] for v in range(n))
    em = np.zeros_like(mask)
    for t in range(len(tb.tris)):
        em |= ((mask >> t) & 1) * tb.tri_edges[t]
    f1 = np.bitwise_count(em).astype(np.int64)
    f2 = np.bitwise_count(mask).astype(np.int64)
    comps = _components(em, tb)
    out = {
        "mask": mask, "f1": f1, "f2": f2, "comps": comps,
        "buchsbaum": buchsbaum, "link_acyclic": acyclic, "link_b1": link_b1,
    }
    if with_betti:
        rows = ((mask[:, None] >> np.arange(len(tb.tris))) & 1) * tb.tri_edges[None, :]
        rank_gf2 = batched_rank_gf2(rows, len(tb.edges))
        # the rank mod 2 never exceeds the rational rank, so full rank mod 2
        # settles the rational rank too
        rank_q = rank_gf2.copy()
        short = rank_gf2 < f2
        if short.any():
            rank_q[short] = batched_rank(_boundary_stack(mask[short], tb), RANK_PRIME)
        out["rank_q"] = rank_q
        out["rank_gf2"] = rank_gf2
    return out


def _blocks(n: int, block: int) -> Iterator[np.ndarray]:
    total = 1 << len(triangles(n))
    for start in range(1, total, block):
        yield np.arange(start, min(start + block, total), dtype=np.int64)


def _tally(data: dict[str, np.ndarray], n: int, counts: Counter) -> None:
    f1, f2, comps = data["f1"], data["f2"], data["comps"]
    h2 = f1 - 2 * n + 3
    h3 = f2 - f1 + n - 1
    cols = np.stack([
        h2, h3, comps, data["buchsbaum"].astype(np.int64), data["link_acyclic"].astype(np.int64),
        data["rank_q"], data["rank_gf2"],
    ], axis=1)
    uniq, cnt = np.unique(cols, axis=0, return_counts=True)
    for row, c in zip(uniq.tolist(), cnt.tolist()):
        counts[tuple(row)] += c


def _records(n: int, counts: Counter) -> list[CensusRecord]:
    out = []
    for (h2, h3, comps, bb, la, rq, r2), c in counts.items():
        f1 = h2 + 2 * n - 3
        f2 = h3 + f1 - n + 1
        rank1 = n - comps

        def betti(fld: Field, r: int) -> BettiVector:
            return BettiVector(fld, (comps - 1, f1 - rank1 - r, f2 - r))

        out.append(CensusRecord(
            n, (1, n - 3, h2, h3), comps == 1, bool(bb), bool(la),
            betti(Field.RATIONALS, rq), betti(Field.GF2, r2), c,
        ))
    out.sort(key=lambda r: (r.h, not r.connected, not r.buchsbaum,
                            r.betti_q.entries, r.betti_gf2.entries))
    return out


def _census_range(n: int, start: int, stop: int, block: int) -> tuple[Counter, int, int, list[int]]:
    tb = _tables(n)
    counts: Counter = Counter()
    total = checked = 0
    bad: list[int] = []
    for lo in range(start, stop, block):
        data = _census_block(np.arange(lo, min(lo + block, stop), dtype=np.int64), tb, True)
        total += len(data["mask"])
        _tally(data, n, counts)
        bb = data["buchsbaum"]
        # 3 h_3 + h_2 against the summed link Betti numbers
        lhs = 3 * (data["f2"] - data["f1"] + n - 1) + (data["f1"] - 2 * n + 3)
        checked += int(bb.sum())
        bad.extend(data["mask"][bb & (lhs != data["link_b1"])].tolist())
    return counts, total, checked, bad


def census(n: int, allow_large: bool = False, block: int = 1 << 13,
           workers: int | None = None) -> CensusResult:
    """Aggregate every pure 2-dimensional complex on [n] by h-vector,
    connectivity, Buchsbaumness and Betti numbers over Q and GF(2).

    Also checks, per Buchsbaum complex, that 3 h_3 + h_2 equals the sum of
    the first Betti numbers of the vertex links.
    """
    _check_n(n, allow_large)
    total_masks = 1 << len(triangles(n))
    workers = worker_count() if workers is None else workers
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        step = -(-total_masks // workers)
        bounds = [(max(1, s), min(s + step, total_masks)) for s in range(0, total_masks, step)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_census_range, [n] * len(bounds), *zip(*bounds),
                                  [block] * len(bounds)))
    else:
        parts = [_census_range(n, 1, total_masks, block)]
    counts: Counter = Counter()
    res = CensusResult(n, [])
    for c, total, checked, bad in parts:
        counts.update(c)
        res.complexes += total
        res.identity_checked += checked
        res.identity_violations.extend(bad)
    res.records = _records(n, counts)
    return res


def masks_to_complex(n: int, mask: int) -> SimplicialComplex:
    tris = triangles(n)
    return SimplicialComplex(tuple(t for i, t in enumerate(tris) if mask >> i & 1), n)



@dataclass
class NecessityReport:
    """Violations found in a census, keyed by the statement being checked.

    Each entry of ``violations`` is a list of offending records (or of masks,
    for the link identity); ``checked`` counts complexes, not records.
    """

    checked: dict[str, int] = field(default_factory=dict)
    violations: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def _note(self, key: str, count: int, bad: object | None) -> None:
        self.checked[key] = self.checked.get(key, 0) + count
        self.violations.setdefault(key, [])
        if bad is not None:
            self.violations[key].append(bad)


def necessity_check(results: Iterable[CensusResult], fields: tuple[Field, ...] = FIELDS) -> NecessityReport:
    """Test every Buchsbaum census record against the known necessary conditions."""
    rep = NecessityReport()
    for res in results:
        rep._note("link_identity", res.identity_checked, None)
        rep.violations["link_identity"].extend(res.identity_violations)
        for r in res.records:
            if not r.buchsbaum:
                continue
            rep._note("decomposition", r.count, None if buchsbaum_decomposition(r.h) else r)
            acyclic_h = 3 * r.h[3] + r.h[2] == 0
            rep._note("link_acyclic_h", r.count, None if acyclic_h == r.link_acyclic else r)
            if not r.connected:
                continue
            rep._note("connected_criterion", r.count, None if connected_criterion(r.h) else r)
            for fld in fields:
                b = r.betti_q if fld is Field.RATIONALS else r.betti_gf2
                ns = novik_swartz_check(r.h, b[1], b[2])
                rep._note(f"novik_swartz_{fld.value}", r.count, None if ns.ok else r)
                rep._note(f"euler_relation_{fld.value}", r.count, None if ns.euler_relation else r)
    return rep

# ---------------------------------------------------------------- 13 triangles on 6 vertices


@dataclass
class ThirteenTriangleResult:
    examined: int
    candidates: int
    witnesses: dict[Field, int]
    profiles: dict[Field, Counter]

    @property
    def witness_count(self) -> int:
        return sum(self.witnesses.values())


def thirteen_triangle_search(fields: tuple[Field, ...] = FIELDS) -> ThirteenTriangleResult:
    """Look for connected Buchsbaum complexes with h = (1,3,6,3) and Betti
    numbers (beta_1, beta_2) = (1, 4) among all 13-triangle sets on [6]."""
    tris = triangles(6)
    examined = 0
    survivors: list[SimplicialComplex] = []
    for chosen in combinations(tris, 13):
        examined += 1
        if len({e for t in chosen for e in combinations(t, 2)}) != 15:
            continue
        if len({v for t in chosen for v in t}) != 6:
            continue
        c = SimplicialComplex(chosen, 6)
        if is_connected(c) and is_buchsbaum(c):
            survivors.append(c)
    witnesses = {f: 0 for f in fields}
    profiles: dict[Field, Counter] = {f: Counter() for f in fields}
    for c in survivors:
        for f in fields:
            b = betti_numbers(c, f)
            profiles[f][(b[1], b[2])] += 1
            if (b[1], b[2]) == (1, 4):
                witnesses[f] += 1
    return ThirteenTriangleResult(examined, len(survivors), witnesses, profiles)


def inclusion_exclusion_count(n: int) -> int:
    """Number of triangle sets on [n] covering every vertex."""
    return sum((-1) ** k * math.comb(n, k) * 2 ** math.comb(n - k, 3) for k in range(n + 1))
