"""Integer vector arithmetic: f/h conversion, Macaulay representations, and
realizability predicates for h-vectors.

Every inequality with a fractional coefficient is cleared to integers; nothing
here touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

HVector = tuple[int, ...]
FVector = tuple[int, ...]


class LengthMismatch(ValueError):
    pass


class WrongDimension(ValueError):
    pass


class NonPositiveInput(ValueError):
    pass


class NegativeRadicand(ValueError):
    pass


def _check_length(v: Sequence[int], d: int | None) -> int:
    if d is None:
        d = len(v) - 1
    if len(v) != d + 1:
        raise LengthMismatch(f"expected {d + 1} entries, got {len(v)}")
    return d


def f_to_h(f: Sequence[int], d: int | None = None) -> HVector:
    """h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_{i-1}."""
    d = _check_length(f, d)
    return tuple(
        sum((-1) ** (k - i) * math.comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def h_to_f(h: Sequence[int], d: int | None = None) -> FVector:
    """f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i."""
    d = _check_length(h, d)
    return tuple(
        sum(math.comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1)
    )


@dataclass(frozen=True)
class MacaulayRep:
    """a = sum of C(top + i, i) over ``terms`` = [(top, i), ...], i = d, d-1, ..., k."""

    value: int
    d: int
    terms: tuple[tuple[int, int], ...]

    def power(self) -> int:
        return sum(math.comb(top + i + 1, i + 1) for top, i in self.terms)

    def __str__(self) -> str:
        return "+".join(f"C({top + i},{i})" for top, i in self.terms)


def _largest_top(rest: int, i: int) -> int:
    """Largest m with C(m, i) <= rest; C(i, i) = 1 <= rest so m >= i."""
    lo, hi = i, i + 1
    while math.comb(hi, i) <= rest:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, i) <= rest:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_rep(a: int, d: int) -> MacaulayRep:
    """Greedy d-th Macaulay representation of a positive integer."""
    if a < 1 or d < 1:
        raise NonPositiveInput(f"need a >= 1 and d >= 1, got a={a}, d={d}")
    rest = a
    terms = []
    i = d
    while rest > 0:
        m = _largest_top(rest, i)
        terms.append((m - i, i))
        rest -= math.comb(m, i)
        i -= 1
    return MacaulayRep(a, d, tuple(terms))


def macaulay_power(a: int, d: int) -> int:
    """a^<d>, with 0^<d> = 0."""
    if a < 0 or d < 1:
        raise ValueError(f"need a >= 0 and d >= 1, got a={a}, d={d}")
    if a == 0:
        return 0
    return macaulay_rep(a, d).power()


def is_m_vector(h: Sequence[int]) -> bool:
    if len(h) < 2:
        return True
    if h[1] < 0:
        return False
    for i in range(1, len(h) - 1):
        if h[i + 1] < 0 or h[i + 1] > macaulay_power(h[i], i):
            return False
    return True


def stanley_cm_predicate(h: Sequence[int]) -> bool:
    """True iff h is the h-vector of some Cohen-Macaulay complex."""
    return is_m_vector(h)


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the three-condition test for connected 2-dim Buchsbaum h-vectors."""

    h: HVector
    conditions: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.conditions.values())

    @property
    def failing(self) -> list[str]:
        return [k for k, v in self.conditions.items() if not v]

    def __bool__(self) -> bool:
        return self.ok


def _as_h4(h: Sequence[int]) -> HVector:
    if len(h) != 4:
        raise WrongDimension(f"expected a length-4 h-vector, got {len(h)} entries")
    return tuple(int(x) for x in h)


def connected_criterion(h: Sequence[int]) -> CriterionReport:
    """Conditions (i)-(iii) characterizing h-vectors of connected 2-dimensional
    Buchsbaum complexes:

    (i)   h_1 >= 0
    (ii)  0 <= h_2 <= C(h_1 + 1, 2)
    (iii) -h_2 / 3 <= h_3 <= h_2^<2>
    """
    h = _as_h4(h)
    _, h1, h2, h3 = h
    c1 = h1 >= 0
    c2 = c1 and 0 <= h2 <= math.comb(h1 + 1, 2)
    c3 = c2 and 3 * h3 >= -h2 and h3 <= macaulay_power(h2, 2)
    return CriterionReport(h, {"(i)": c1, "(ii)": c2, "(iii)": c3})


def subtract_triangles(h: Sequence[int], k: int) -> HVector:
    """h - (0, 3k, -3k, k): undo adding k disjoint triangles."""
    return (h[0], h[1] - 3 * k, h[2] + 3 * k, h[3] - k)


def buchsbaum_decomposition(h: Sequence[int]) -> tuple[int, HVector] | None:
    """Smallest k >= 0 such that h - (0,3k,-3k,k) satisfies ``connected_criterion``.

    Returns ``(k, h')`` or ``None`` when h is not the h-vector of any
    2-dimensional Buchsbaum complex.
    """
    h = _as_h4(h)
    for k in range(max(h[1], -1) // 3 + 1):
        hp = subtract_triangles(h, k)
        if connected_criterion(hp):
            return k, hp
    return None


def k_closed_form(h1: int, h2: int) -> int:
    """floor((2 h1 + 3 - sqrt(8 h1 + 8 h2 + 9)) / 6) in exact arithmetic."""
    if h1 < 0:
        raise ValueError("h1 must be nonnegative")
    rad = 8 * h1 + 8 * h2 + 9
    if rad < 0:
        raise NegativeRadicand(f"8*h1 + 8*h2 + 9 = {rad} < 0")
    r = math.isqrt(rad)
    top = 2 * h1 + 3
    # irrational sqrt lies strictly between r and r + 1
    k = (top - r) // 6 if r * r == rad else (top - r - 1) // 6
    # when h1 + h2 < 0 the bound from the quadratic ignores h1 - 3a >= 0
    k = min(k, h1 // 3)
    if k < 0:
        raise ValueError(f"no a >= 0 with h2 + 3a <= C(h1 - 3a + 1, 2) for h1={h1}, h2={h2}")
    return k


def terai_conditions(h: Sequence[int], d: int) -> bool:
    """(1, h_1..h_{d-1}) is an M-vector and -h_{d-1}/d <= h_d <= h_{d-1}^<d-1>."""
    if d < 2 or len(h) != d + 1:
        raise WrongDimension(f"need d >= 2 and {d + 1} entries, got d={d}, {len(h)} entries")
    if not is_m_vector(h[:d]):
        return False
    return d * h[d] >= -h[d - 1] and h[d] <= macaulay_power(h[d - 1], d - 1)
