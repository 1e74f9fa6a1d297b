"""Structural predicates on complexes: Cohen-Macaulay, Buchsbaum, link-acyclic,
and the Betti-number inequalities of Novik-Swartz and Terai-Yoshida."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from buchsbaum.complex import (
    SimplicialComplex,
    all_links,
    f_vector,
    h_vector,
    is_connected,
    vertex_links,
)
from buchsbaum.homology import FIELDS, BettiVector, Field, betti_numbers, reduced_betti
from buchsbaum.hvec import (
    HVector,
    WrongDimension,
    buchsbaum_decomposition,
    connected_criterion,
    is_m_vector,
    macaulay_power,
)


class NotBuchsbaum(ValueError):
    pass


def is_cohen_macaulay(c: SimplicialComplex, field: Field = Field.RATIONALS) -> bool:
    """beta_i(lk F) = 0 for every face F (the empty face included) and every
    i != dim c - |F|."""
    top = c.dim
    for f, lk in all_links(c).items():
        for i, b in reduced_betti(lk, field).items():
            if b and i != top - len(f):
                return False
    return True


def _graph_is_connected(g: SimplicialComplex) -> bool:
    return g.dim == 1 and g.is_pure() and is_connected(g)


def is_buchsbaum(c: SimplicialComplex, field: Field = Field.RATIONALS, verify: bool = False) -> bool:
    """Pure with Cohen-Macaulay vertex links.

    For 2-dimensional complexes the vertex links are graphs, and a graph is
    Cohen-Macaulay exactly when it is connected; that shortcut is used unless
    ``verify`` asks for the homological definition.
    """
    if not c.is_pure():
        return False
    if c.dim == 2 and not verify:
        return all(_graph_is_connected(lk) for lk in vertex_links(c).values())
    return all(is_cohen_macaulay(lk, field) for lk in vertex_links(c).values())


def _is_tree(g: SimplicialComplex) -> bool:
    return _graph_is_connected(g) and len(g.facets) == len(g.vertices) - 1


def is_link_acyclic(c: SimplicialComplex, field: Field = Field.RATIONALS) -> bool:
    """Buchsbaum with every vertex link acyclic (a tree, in dimension 2)."""
    if not is_buchsbaum(c, field):
        raise NotBuchsbaum("link-acyclicity is only defined for Buchsbaum complexes")
    if c.dim == 2:
        return all(_is_tree(lk) for lk in vertex_links(c).values())
    return all(not any(reduced_betti(lk, field).values()) for lk in vertex_links(c).values())


@dataclass(frozen=True)
class LinkIdentity:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def link_betti_identity(c: SimplicialComplex, field: Field = Field.RATIONALS) -> LinkIdentity:
    """Compare d h_d + h_{d-1} with the sum over vertices of beta_{d-2}(lk v)."""
    if not is_buchsbaum(c, field):
        raise NotBuchsbaum("the identity is stated for Buchsbaum complexes")
    h = h_vector(c)
    d = len(h) - 1
    lhs = d * h[d] + h[d - 1]
    rhs = sum(reduced_betti(lk, field).get(d - 2, 0) for lk in vertex_links(c).values())
    return LinkIdentity(lhs, rhs)


@dataclass(frozen=True)
class NovikSwartzReport:
    m_vector: bool
    h2_bound: bool
    h3_bound: bool
    euler_relation: bool

    @property
    def ok(self) -> bool:
        return self.m_vector and self.h2_bound and self.h3_bound

    def __bool__(self) -> bool:
        return self.ok


def novik_swartz_check(h: HVector, beta1: int, beta2: int) -> NovikSwartzReport:
    """Inequalities for a connected 2-dim Buchsbaum complex with given Betti numbers.

    ``euler_relation`` (h_3 + beta_1 == beta_2) is reported separately and
    does not enter ``ok``.
    """
    if len(h) != 4:
        raise WrongDimension(f"expected a length-4 h-vector, got {len(h)} entries")
    m = is_m_vector(h[:3])
    reduced = h[2] - 3 * beta1
    b2 = reduced >= 0
    b3 = b2 and h[3] + beta1 <= macaulay_power(reduced, 2)
    return NovikSwartzReport(m, b2, b3, h[3] + beta1 == beta2)


def terai_yoshida_threshold(h: HVector, d: int) -> bool:
    """h_0 + ... + h_d >= C(h_1 + d, d) - 3 h_1 + 2.

    Only checks the hypothesis; a Buchsbaum complex meeting it is known to be
    Cohen-Macaulay.
    """
    if d < 3 or len(h) != d + 1:
        raise WrongDimension(f"need d >= 3 and {d + 1} entries, got d={d}, {len(h)} entries")
    return sum(h) >= math.comb(h[1] + d, d) - 3 * h[1] + 2


@dataclass
class PropertyReport:
    f: tuple[int, ...]
    h: HVector
    dim: int
    pure: bool
    connected: bool
    betti: dict[Field, BettiVector] = field(default_factory=dict)
    cm: dict[Field, bool] = field(default_factory=dict)
    buchsbaum: dict[Field, bool] = field(default_factory=dict)
    link_acyclic: bool | None = None
    criterion: dict[str, bool] | None = None
    decomposition_k: int | None = None
    ns_ok: dict[Field, bool] = field(default_factory=dict)
    ty_threshold_met: bool | None = None

    def to_json(self) -> dict:
        def per_field(d: dict) -> dict:
            return {f.value: v for f, v in d.items()}

        return {
            "f": list(self.f),
            "h": list(self.h),
            "dim": self.dim,
            "pure": self.pure,
            "connected": self.connected,
            "betti": {f.value: list(b.entries) for f, b in self.betti.items()},
            "cohen_macaulay": per_field(self.cm),
            "buchsbaum": per_field(self.buchsbaum),
            "link_acyclic": self.link_acyclic,
            "connected_criterion": self.criterion,
            "decomposition_k": self.decomposition_k,
            "novik_swartz": per_field(self.ns_ok),
            "terai_yoshida_threshold": self.ty_threshold_met,
        }


def property_report(c: SimplicialComplex, fields: tuple[Field, ...] = FIELDS) -> PropertyReport:
    h = h_vector(c)
    rep = PropertyReport(
        f=f_vector(c), h=h, dim=c.dim, pure=c.is_pure(), connected=is_connected(c)
    )
    for fld in fields:
        rep.betti[fld] = betti_numbers(c, fld)
        rep.cm[fld] = is_cohen_macaulay(c, fld)
        rep.buchsbaum[fld] = is_buchsbaum(c, fld, verify=True)
    if any(rep.buchsbaum.values()):
        rep.link_acyclic = is_link_acyclic(c, next(f for f in fields if rep.buchsbaum[f]))
    if c.dim == 2:
        rep.criterion = connected_criterion(h).conditions
        dec = buchsbaum_decomposition(h)
        rep.decomposition_k = dec[0] if dec else None
        if rep.connected:
            for fld in fields:
                b = rep.betti[fld]
                rep.ns_ok[fld] = novik_swartz_check(h, b[1], b[2]).ok
    if c.dim >= 2:
        rep.ty_threshold_met = terai_yoshida_threshold(h, len(h) - 1)
    return rep
