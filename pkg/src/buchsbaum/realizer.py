"""Explicit 2-dimensional Buchsbaum complexes with a prescribed h-vector.

Three routes:

* h_3 >= 0: a Cohen-Macaulay complex grown from a cone by single-triangle
  glue moves (``realize_cm``).
* h_3 < 0: a cyclic family of triangles on n = x + 3 vertices, depending on
  n mod 3, trimmed and then padded (``realize_negative``).
* disconnected targets: a connected witness plus k disjoint triangles.

Every triangle added after the base complex goes through the glue classifier
and the construction aborts if the observed class is not the expected one.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Iterable

from buchsbaum.complex import (
    Face,
    GlueClass,
    SimplicialComplex,
    disjoint_union,
    glue_kind,
    h_vector,
    is_connected,
    relabel,
)
from buchsbaum.homology import FIELDS, Field
from buchsbaum.hvec import (
    HVector,
    WrongDimension,
    buchsbaum_decomposition,
    connected_criterion,
    macaulay_power,
    subtract_triangles,
)
from buchsbaum.properties import is_buchsbaum

INF = "inf"


class NotRealizable(ValueError):
    pass


class ConstructionInvariantViolated(RuntimeError):
    pass


def split_n(n: int) -> tuple[int, int]:
    """n = 3p + q with q in {-1, 0, 1}."""
    r = n % 3
    if r == 0:
        return n // 3, 0
    if r == 1:
        return (n - 1) // 3, 1
    return (n + 1) // 3, -1


def extremal_m(n: int) -> int:
    """max{k : 3k <= C(n-2, 2)}."""
    return math.comb(n - 2, 2) // 3


@dataclass(frozen=True)
class ConstructionParams:
    w: int
    x: int
    y: int
    gamma: int
    delta: int
    n: int
    p: int
    q: int
    M: int
    b: int
    c: int
    alpha: int

    def check(self) -> None:
        top = math.comb(self.x + 1, 2)
        ok = (
            self.w > 0
            and 3 * self.w <= self.y <= top
            and self.y == 3 * (self.M - self.b) + self.alpha
            and self.w == (self.M - self.b) - self.c
            and self.alpha in (0, 1, 2)
            and self.n == self.x + 3 == 3 * self.p + self.q
            and self.n >= 5
            and self.p >= 2
            and self.b >= 0
            and self.c >= 0
            and self.b + self.c <= self.p - 2
            and self.gamma >= 0
            and self.delta >= 0
            and (self.delta == 0 or self.y == top)
        )
        if not ok:
            raise ConstructionInvariantViolated(f"inconsistent parameters {self}")


def decompose_params(h: Iterable[int]) -> ConstructionParams:
    """Parameters for a target (1, h_1, h_2, -w) with w > 0."""
    h = tuple(h)
    rep = connected_criterion(h)
    if not rep:
        raise NotRealizable(f"condition {rep.failing[0]} violated for {list(h)}")
    if h[3] >= 0:
        raise ValueError("decompose_params needs h_3 < 0")
    _, h1, h2, h3 = h
    w = -h3
    x = 0
    while math.comb(x + 1, 2) < 3 * w:
        x += 1
    top = math.comb(x + 1, 2)
    y = min(h2, top)
    n = x + 3
    p, q = split_n(n)
    m = extremal_m(n)
    b = m - y // 3
    params = ConstructionParams(
        w=w, x=x, y=y, gamma=h1 - x, delta=h2 - y, n=n, p=p, q=q, M=m,
        b=b, c=(m - b) - w, alpha=y % 3,
    )
    params.check()
    return params


def _bar(i: int, n: int) -> int:
    return (i - 1) % n + 1


def _tri(n: int, *vs: int) -> Face:
    t = tuple(sorted(_bar(v, n) for v in vs))
    if len(set(t)) != 3:
        raise ConstructionInvariantViolated(f"degenerate triangle {t} for n={n}")
    return t


Label = tuple[int, "int | str"]


@dataclass
class BaseFamily:
    """The cyclic complex Sigma and the two-triangle pieces Delta(i, j) on [n].

    ``members`` maps each distinct piece, keyed by the first label producing
    it, to its two facets; ``canonical`` maps every label to that key.
    """

    n: int
    p: int
    q: int
    sigma: tuple[Face, ...]
    members: dict[Label, frozenset[Face]]
    canonical: dict[Label, Label]

    def piece(self, i: int, j: int | str) -> frozenset[Face]:
        return self.members[self.canonical[(i, j)]]

    def union(self, keep: Iterable[Label] | None = None) -> SimplicialComplex:
        keys = self.members if keep is None else keep
        facets = set(self.sigma)
        for key in keys:
            facets |= self.members[key]
        return SimplicialComplex.from_maximal(facets, self.n)


def _raw_pieces(n: int, p: int, q: int) -> tuple[list[Face], list[tuple[Label, tuple[Face, Face]]]]:
    t = lambda *vs: _tri(n, *vs)  # noqa: E731
    pieces: list[tuple[Label, tuple[Face, Face]]] = []
    if q == -1:
        sigma = [t(i, i + 1, i + 2) for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(1, p - 1):
                pieces.append(((i, j), (t(i, 1 + i, 2 + i + 3 * j), t(1 + i + 3 * j, 2 + i + 3 * j, 1 + i))))
    elif q == 0:
        sigma = [t(i, i + p, i + 2 * p) for i in range(1, p + 1)]
        for i in range(1, n + 1):
            for j in range(1, p):
                pieces.append(((i, j), (t(i, i + p, i + j + p), t(i + j + p, i + j + 2 * p, i))))
    else:
        sigma = [t(i - (p - 1), i, i + p + 1) for i in range(1, n + 1)]
        for i in range(1, n + 1):
            for j in range(1, p - 1):
                pieces.append(((i, j), (t(i - j, i, i + 2 * p - j), t(1 + i + p, i + 2 * p - j, i))))
        for i in range(1, p + 1):
            pieces.append(((i, INF), (t(i, i + p, i + 2 * p), t(i + p, i + 2 * p, i + 3 * p))))
    return sigma, pieces


def build_base_family(n: int) -> BaseFamily:
    if n < 5:
        raise ValueError(f"base family needs n >= 5, got {n}")
    p, q = split_n(n)
    sigma, pieces = _raw_pieces(n, p, q)
    members: dict[Label, frozenset[Face]] = {}
    by_value: dict[frozenset[Face], Label] = {}
    canonical: dict[Label, Label] = {}
    for label, facets in pieces:
        value = frozenset(facets)
        if len(value) != 2:
            raise ConstructionInvariantViolated(f"piece {label} has a repeated facet")
        key = by_value.setdefault(value, label)
        if key == label:
            members[label] = value
        canonical[label] = key
    return BaseFamily(n, p, q, tuple(sorted(set(sigma))), members, canonical)


def hanano_complex(n: int) -> SimplicialComplex:
    """Sigma together with every piece: h = (1, n-3, 3M, -M)."""
    return build_base_family(n).union()


def _label_str(label: Label) -> str:
    return f"Delta({label[0]},{label[1]})"


def g_face(n: int, p: int, q: int, j: int) -> Face:
    """The j-th triangle filling a three-edge hole left by trimming."""
    if q == -1:
        return _tri(n, 1, 2 + 3 * j, 3 + 3 * j)
    if q == 0:
        return _tri(n, 1 + p, 1 + j + p, 1 + j + 2 * p)
    return _tri(n, 1 - j, 1, 2 + p)


def alpha_faces(params: ConstructionParams) -> list[Face]:
    """Triangles raising h_2 by one each, applied in order."""
    n, p, q, b = params.n, params.p, params.q, params.b
    if q == 1 and b == 0:
        return [_tri(n, 1, p, n)]
    if b == 0:
        raise ConstructionInvariantViolated(f"alpha > 0 needs b > 0 for n={n}")
    g = g_face(n, p, q, b)
    if q == -1:
        return [g, _tri(n, 1, 2, 3 + 3 * b)]
    if q == 0:
        return [g, _tri(n, 1, 1 + p, 1 + b + p)]
    return [g, _tri(n, 1 - b, 1, 1 + 2 * p - b)]


class _Builder:
    """Grows a pure 2-dimensional complex one audited triangle at a time."""

    def __init__(self, facets: Iterable[Face], n: int, trace: list[dict]):
        self.n = n
        self.tris: set[Face] = set()
        self.edges: set[Face] = set()
        self.verts: set[int] = set()
        for t in facets:
            self._add(t)
        self.h: HVector | None = None
        self.trace = trace

    def _add(self, t: Face) -> None:
        self.tris.add(t)
        self.edges.update(combinations(t, 2))
        self.verts.update(t)
        self.n = max(self.n, t[-1])

    def glue(self, t: Face, expected: GlueClass, why: str) -> None:
        t = tuple(sorted(t))
        if t in self.tris:
            raise ConstructionInvariantViolated(f"{why}: {list(t)} is already a facet")
        kind = glue_kind(self.verts, self.edges, t)
        if kind is not expected:
            raise ConstructionInvariantViolated(
                f"{why}: {list(t)} glues as {kind.value}, expected {expected.value}"
            )
        self._add(t)
        if self.h is not None:
            self.h = tuple(a + b for a, b in zip(self.h, kind.h_delta))
        self.trace.append({"step": why, "glue": kind.value, "face": list(t), "h": list(self.h or ())})

    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(tuple(sorted(self.tris)), self.n)


def realize_negative(params: ConstructionParams, trace: list[dict] | None = None) -> SimplicialComplex:
    """Connected Buchsbaum complex with h = (1, x+gamma, y+delta, -w)."""
    params.check()
    trace = [] if trace is None else trace
    n, p, q, b = params.n, params.p, params.q, params.b
    fam = build_base_family(n)
    removed = {fam.canonical[(1, j)] for j in range(1, b + 1)}
    keep = [key for key in fam.members if key not in removed]
    base = fam.union(keep)
    trace.append({
        "step": "base",
        "n": n,
        "family": {-1: "n=3p-1", 0: "n=3p", 1: "n=3p+1"}[q],
        "removed": [_label_str(k) for k in sorted(removed, key=str)],
        "members": [_label_str(k) for k in keep],
        "facets": len(base.facets),
        "h": list(h_vector(base)),
    })
    bld = _Builder(base.facets, n, trace)
    bld.h = h_vector(base)

    for k in range(1, params.c + 1):
        bld.glue(g_face(n, p, q, b + k), GlueClass.THREE_EDGES, f"fill G_{b + k}")
    if params.alpha:
        for t in alpha_faces(params)[: params.alpha]:
            bld.glue(t, GlueClass.TWO_EDGES, "raise h2")

    if params.gamma and (1, 2) not in bld.edges:
        # any edge through vertex 1 can play the role of {1, 2}
        u = min(e[1] for e in bld.edges if e[0] == 1)
        swapped = relabel(bld.complex(), {u: 2, 2: u})
        trace.append({"step": "relabel", "swap": [2, u]})
        h_before = bld.h
        bld = _Builder(swapped.facets, n, trace)
        bld.h = h_before

    x = params.x
    for k in range(1, params.gamma + 1):
        bld.glue((1, 2, x + 3 + k), GlueClass.ONE_EDGE, "pad h1")
    if params.delta:
        pool = range(3, x + params.gamma + 4)
        holes = [(i, j) for i, j in combinations(pool, 2) if j > x + 3]
        if len(holes) < params.delta:
            raise ConstructionInvariantViolated("not enough missing edges for h2 padding")
        for i, j in holes[: params.delta]:
            bld.glue((1, i, j), GlueClass.TWO_EDGES, "pad h2")
    return bld.complex()


def colex_pairs(vertices: Iterable[int]) -> list[Face]:
    return sorted(combinations(sorted(vertices), 2), key=lambda e: e[::-1])


def cm_stage3_candidates(h1: int, h2: int) -> list[Face]:
    """Triangles available to raise h_3 after the first two stages, in order."""
    pairs = colex_pairs(range(3, h1 + 4))[:h2]
    chosen = set(pairs)
    inner = [
        t for t in combinations(range(3, h1 + 4), 3)
        if all(e in chosen for e in combinations(t, 2))
    ]
    inner.sort(key=lambda t: t[::-1])
    return [(2, a, c) for a, c in pairs] + inner


def realize_cm(h: Iterable[int], trace: list[dict] | None = None) -> SimplicialComplex:
    """Cohen-Macaulay complex on [h_1 + 3] with h-vector h (requires h_3 >= 0).

    Stage 1 cones vertices 3.. over the edge {1, 2}; stage 2 adds h_2
    triangles {1, a, b} for the first h_2 pairs of {3, ...} in colex order;
    stage 3 closes h_3 triangular holes, first {2, a, b} over the stage-2
    pairs and then triangles inside {3, ...}.
    """
    h = tuple(h)
    rep = connected_criterion(h)
    if not rep:
        raise NotRealizable(f"condition {rep.failing[0]} violated for {list(h)}")
    if h[3] < 0:
        raise ValueError("realize_cm needs h_3 >= 0")
    _, h1, h2, h3 = h
    trace = [] if trace is None else trace
    trace.append({"step": "seed", "face": [1, 2, 3], "h": [1, 0, 0, 0]})
    bld = _Builder([(1, 2, 3)], 3, trace)
    bld.h = (1, 0, 0, 0)
    for v in range(4, h1 + 4):
        bld.glue((1, 2, v), GlueClass.ONE_EDGE, "cone")
    for a, c in colex_pairs(range(3, h1 + 4))[:h2]:
        bld.glue((1, a, c), GlueClass.TWO_EDGES, "fan")
    cands = cm_stage3_candidates(h1, h2)
    if len(cands) < h3:
        raise NotRealizable(f"only {len(cands)} closable holes for h_3={h3}")
    for t in cands[:h3]:
        bld.glue(t, GlueClass.THREE_EDGES, "close")
    return bld.complex()


TRIANGLE = SimplicialComplex(((1, 2, 3),), 3)


@dataclass
class RealizationCertificate:
    target_h: HVector
    achieved_h: HVector
    complex: SimplicialComplex
    checks: dict[str, bool]
    k: int = 0
    construction_trace: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "target_h": list(self.target_h),
            "achieved_h": list(self.achieved_h),
            "k": self.k,
            "checks": dict(self.checks),
            "ok": self.ok,
            "complex": self.complex.to_json(),
            "construction_trace": self.construction_trace,
        }


def certify(
    cx: SimplicialComplex,
    target: HVector,
    connected_required: bool,
    fields: tuple[Field, ...] = FIELDS,
) -> dict[str, bool]:
    """Recompute every claimed property of ``cx`` from scratch."""
    checks = {"pure": cx.is_pure() and cx.dim == 2}
    if connected_required:
        checks["connected"] = is_connected(cx)
    checks["buchsbaum"] = is_buchsbaum(cx)
    for fld in fields:
        checks[f"buchsbaum_{fld.value}"] = is_buchsbaum(cx, fld, verify=True)
    checks["h_match"] = h_vector(cx) == tuple(target)
    return checks


def realize_connected(h: HVector, trace: list[dict]) -> SimplicialComplex:
    if h[3] >= 0:
        return realize_cm(h, trace)
    params = decompose_params(h)
    trace.append({"step": "params", **asdict(params)})
    return realize_negative(params, trace)


def realize(
    h: Iterable[int],
    connected_required: bool = True,
    k: int | None = None,
    fields: tuple[Field, ...] = FIELDS,
) -> RealizationCertificate:
    """Build and certify a 2-dimensional Buchsbaum complex with h-vector ``h``.

    Without ``connected_required`` the smallest number ``k`` of extra
    disjoint triangles is used unless ``k`` is forced.
    """
    h = tuple(int(v) for v in h)
    if len(h) != 4:
        raise WrongDimension(f"expected a length-4 h-vector, got {len(h)} entries")
    if h[0] != 1:
        raise NotRealizable(f"h_0 must be 1, got {h[0]}")
    trace: list[dict] = []
    if connected_required:
        if k not in (None, 0):
            raise NotRealizable("a connected witness cannot have extra components")
        k, hp = 0, h
        rep = connected_criterion(h)
        if not rep:
            raise NotRealizable(f"condition {rep.failing[0]} violated for {list(h)}")
    elif k is None:
        dec = buchsbaum_decomposition(h)
        if dec is None:
            raise NotRealizable(f"no k >= 0 makes h - (0,3k,-3k,k) admissible for {list(h)}")
        k, hp = dec
    else:
        if k < 0:
            raise NotRealizable("k must be nonnegative")
        hp = subtract_triangles(h, k)
        rep = connected_criterion(hp)
        if not rep:
            raise NotRealizable(f"condition {rep.failing[0]} violated for h' = {list(hp)} (k={k})")
    cx = realize_connected(hp, trace)
    for _ in range(k):
        cx = disjoint_union(cx, TRIANGLE)
    if k:
        trace.append({"step": "disjoint triangles", "k": k})
    checks = certify(cx, h, connected_required, fields)
    return RealizationCertificate(h, h_vector(cx), cx, checks, k, trace)


def connected_targets(h1_max: int) -> list[HVector]:
    """Every h with 0 <= h_1 <= h1_max passing ``connected_criterion``, in lex order."""
    out = []
    for h1 in range(h1_max + 1):
        for h2 in range(math.comb(h1 + 1, 2) + 1):
            for h3 in range(-(h2 // 3), macaulay_power(h2, 2) + 1):
                out.append((1, h1, h2, h3))
    return out


def buchsbaum_targets(h1_max: int) -> list[HVector]:
    """Every h with 0 <= h_1 <= h1_max admitting a decomposition h' + k triangles."""
    found = {
        (1, h[1] + 3 * k, h[2] - 3 * k, h[3] + k)
        for h in connected_targets(h1_max)
        for k in range((h1_max - h[1]) // 3 + 1)
    }
    return sorted(found)


@dataclass
class SweepResult:
    total: int
    failures: list[tuple[HVector, str]]

    @property
    def ok(self) -> bool:
        return not self.failures


def sweep(h1_max: int, connected_required: bool = True, fields: tuple[Field, ...] = FIELDS) -> SweepResult:
    """Realize and certify every admissible h-vector with h_1 <= h1_max."""
    targets = connected_targets(h1_max) if connected_required else buchsbaum_targets(h1_max)
    failures = []
    for h in targets:
        try:
            cert = realize(h, connected_required, fields=fields)
        except (NotRealizable, ConstructionInvariantViolated) as e:
            failures.append((h, str(e)))
            continue
        if not cert.ok:
            bad = ",".join(k for k, v in cert.checks.items() if not v)
            failures.append((h, f"failed checks: {bad}"))
    return SweepResult(len(targets), failures)
