"""Semiorder and interval-order representations and what can be read off them.

All values are exact rationals (``int`` or ``fractions.Fraction``); floats
are refused because the case boundaries below are equalities.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .graph_core import Digraph, _bits
from .recognizers import Edgeless, NicheClassDescriptor, TwoCliques, TwoCliquesPlusIsolated, gamma


def _rational(value: object, what: str) -> Rational:
    if type(value) is int or type(value) is Fraction:
        return value
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise TypeError(f"{what} must be an exact rational (int or Fraction), got {value!r}")
    return value


@dataclass(frozen=True)
class SemiorderRep:
    """Values ``f[v]`` and threshold ``delta``: arc (x, y) iff f[x] > f[y] + delta."""

    f: tuple[Rational, ...]
    delta: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", tuple(self.f))
        for v, value in enumerate(self.f):
            _rational(value, f"f[{v}]")
        if _rational(self.delta, "delta") <= 0:
            raise ValueError(f"delta must be positive, got {self.delta}")

    @property
    def n(self) -> int:
        return len(self.f)


@dataclass(frozen=True)
class IntervalRep:
    """Closed intervals ``J[v] = (lo, hi)``: arc (x, y) iff lo(x) > hi(y)."""

    J: tuple[tuple[Rational, Rational], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "J", tuple((lo, hi) for lo, hi in self.J))
        for v, (lo, hi) in enumerate(self.J):
            if _rational(lo, f"J[{v}].lo") > _rational(hi, f"J[{v}].hi"):
                raise ValueError(f"J[{v}] = [{lo}, {hi}] is empty")

    @property
    def n(self) -> int:
        return len(self.J)


def realize_semiorder(rep: SemiorderRep) -> Digraph:
    f, delta = rep.f, rep.delta
    out = []
    for fx in rep.f:
        row = 0
        for y, fy in enumerate(f):
            if fx > fy + delta:
                row |= 1 << y
        out.append(row)
    return Digraph.from_out_masks(rep.n, out)


def realize_interval(rep: IntervalRep) -> Digraph:
    out = []
    for lo, _ in rep.J:
        row = 0
        for y, (_, hi) in enumerate(rep.J):
            if lo > hi:
                row |= 1 << y
        out.append(row)
    return Digraph.from_out_masks(rep.n, out)


def semiorder_to_interval(rep: SemiorderRep) -> IntervalRep:
    """Unit-length intervals [f(v), f(v) + delta] realizing the same digraph."""
    return IntervalRep(tuple((fv, fv + rep.delta) for fv in rep.f))


def is_strict_order(d: Digraph) -> bool:
    """Transitive and loopless (hence antisymmetric)."""
    for x in range(d.n):
        ox = d.out[x]
        for y in _bits(ox):
            if d.out[y] & ~ox:
                return False
    return True


def find_two_plus_two(d: Digraph) -> tuple[int, int, int, int] | None:
    """Arcs a→b, c→d of a strict order with a↛d and c↛b, i.e. an induced 2+2.

    In a strict order those two missing arcs force the four vertices to be
    distinct and every other pair among them to be incomparable.
    """
    for a in range(d.n):
        for c in range(a + 1, d.n):
            only_a = d.out[a] & ~d.out[c]
            only_c = d.out[c] & ~d.out[a]
            if only_a and only_c:
                b = (only_a & -only_a).bit_length() - 1
                dd = (only_c & -only_c).bit_length() - 1
                return a, b, c, dd
    return None


def find_three_plus_one(d: Digraph) -> tuple[int, int, int, int] | None:
    """A chain a→b→c and a vertex incomparable to all three."""
    comparable = [d.out[v] | d.inn[v] | 1 << v for v in range(d.n)]
    for b in range(d.n):
        for a in _bits(d.inn[b]):
            for c in _bits(d.out[b]):
                free = ~(comparable[a] | comparable[b] | comparable[c]) & ((1 << d.n) - 1)
                if free:
                    return a, b, c, (free & -free).bit_length() - 1
    return None


def is_interval_order(d: Digraph) -> bool:
    return is_strict_order(d) and find_two_plus_two(d) is None


def is_semiorder(d: Digraph) -> bool:
    return is_interval_order(d) and find_three_plus_one(d) is None


class AnalysisCase(enum.Enum):
    NO_ARCS = "NoArcs"
    TWO_CLIQUES = "TwoCliqueCase"
    GAMMA = "GammaCase"


@dataclass(frozen=True)
class RepresentationAnalysis:
    r1: Rational
    r2: Rational
    case: AnalysisCase
    parts: tuple[frozenset[int], ...]
    predicted: NicheClassDescriptor


def _pick(values: Sequence[Rational], keep) -> frozenset[int]:
    return frozenset(v for v, x in enumerate(values) if keep(x))


def analyze_semiorder_rep(rep: SemiorderRep) -> RepresentationAnalysis:
    """Split on the spread r2 - r1 of f: at most delta, at most 2*delta, or more."""
    if rep.n == 0:
        raise ValueError("analysis needs at least one vertex")
    f, delta = rep.f, rep.delta
    r1, r2 = min(f), max(f)
    if r1 + delta >= r2:
        return RepresentationAnalysis(
            r1, r2, AnalysisCase.NO_ARCS, (frozenset(range(rep.n)),), Edgeless(rep.n)
        )
    if r2 <= r1 + 2 * delta:
        low = _pick(f, lambda x: r1 <= x < r2 - delta)
        mid = _pick(f, lambda x: r2 - delta <= x <= r1 + delta)
        high = _pick(f, lambda x: r1 + delta < x <= r2)
        if mid:
            predicted: NicheClassDescriptor = TwoCliquesPlusIsolated(len(low), len(high), len(mid))
        else:
            predicted = TwoCliques(len(low), len(high))
        return RepresentationAnalysis(r1, r2, AnalysisCase.TWO_CLIQUES, (low, mid, high), predicted)
    low = _pick(f, lambda x: r1 <= x <= r1 + delta)
    mid = _pick(f, lambda x: r1 + delta < x < r2 - delta)
    high = _pick(f, lambda x: r2 - delta <= x <= r2)
    return RepresentationAnalysis(
        r1, r2, AnalysisCase.GAMMA, (low, mid, high), gamma(len(low), len(high), len(mid), 0)
    )


def analyze_interval_rep(rep: IntervalRep) -> RepresentationAnalysis:
    """r1 is the leftmost right endpoint, r2 the rightmost left endpoint."""
    if rep.n == 0:
        raise ValueError("analysis needs at least one vertex")
    J = rep.J
    r1 = min(hi for _, hi in J)
    r2 = max(lo for lo, _ in J)
    if r1 >= r2:
        return RepresentationAnalysis(
            r1, r2, AnalysisCase.NO_ARCS, (frozenset(range(rep.n)),), Edgeless(rep.n)
        )
    low = _pick(J, lambda iv: iv[0] <= r1 <= iv[1] < r2)
    mid = _pick(J, lambda iv: r1 < iv[0] and iv[1] < r2)
    high = _pick(J, lambda iv: r1 < iv[0] <= r2 <= iv[1])
    spanning = _pick(J, lambda iv: iv[0] <= r1 and r2 <= iv[1])
    return RepresentationAnalysis(
        r1,
        r2,
        AnalysisCase.GAMMA,
        (low, mid, high, spanning),
        gamma(len(low), len(high), len(mid), len(spanning)),
    )

