"""Explicit semiorder and interval-order witnesses for each niche-graph shape.

Vertex numbering matches :func:`recognizers.build_from_descriptor`, so the
niche graph of the realized witness equals the built graph label for label.
"""

from __future__ import annotations

from .order_models import IntervalRep, SemiorderRep
from .recognizers import (
    Edgeless,
    Gamma,
    NicheClassDescriptor,
    TwoCliques,
    TwoCliquesPlusIsolated,
)


def niche_witness_semiorder(d: NicheClassDescriptor) -> SemiorderRep:
    if isinstance(d, Edgeless):
        return SemiorderRep((1,) * d.q, 1)
    if isinstance(d, TwoCliques):
        return SemiorderRep((1,) * d.m + (4,) * d.n, 2)
    if isinstance(d, TwoCliquesPlusIsolated):
        return SemiorderRep((1,) * d.m + (4,) * d.n + (2,) * d.q, 2)
    if isinstance(d, Gamma):
        if d.r:
            raise ValueError(f"{d} has isolated vertices beside its join part; no semiorder has it as niche graph")
        return SemiorderRep((1,) * d.m + (3,) * d.q + (5,) * d.n, 1)
    raise TypeError(f"not a niche class descriptor: {d!r}")


def niche_witness_interval(d: NicheClassDescriptor) -> IntervalRep:
    low, mid, high, spanning = (1, 2), (3, 4), (5, 6), (1, 6)
    if isinstance(d, Edgeless):
        return IntervalRep((low,) * d.q)
    if isinstance(d, TwoCliques):
        return IntervalRep((low,) * d.m + (high,) * d.n)
    if isinstance(d, TwoCliquesPlusIsolated):
        return IntervalRep((low,) * d.m + (high,) * d.n + (spanning,) * d.q)
    if isinstance(d, Gamma):
        return IntervalRep((low,) * d.m + (mid,) * d.q + (high,) * d.n + (spanning,) * d.r)
    raise TypeError(f"not a niche class descriptor: {d!r}")
