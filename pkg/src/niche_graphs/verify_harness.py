"""Exhaustive small-n verification of the four characterization theorems.

Orders on labeled vertices ``0..n-1`` are generated by giving every vertex
pair one of three states (forward arc, backward arc, incomparable) and
keeping the transitive results. Pairs are visited vertex by vertex, and a
branch is dropped as soon as one of its fully decided triples is
intransitive, so the output is the same set a flat 3^(n(n-1)/2) filter would
keep. Fixing the states of the first ``k`` pairs splits the space into 3^k
independent shards.

The classical forbidden-pattern recognizers that filter this stream are
checked against purely definitional grid enumerators for n <= 4.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from .derived_graphs import cce, competition, niche
from .graph_core import CanonicalForm, Digraph, UndirectedGraph, all_graphs, canonical_form
from .order_models import (
    IntervalRep,
    SemiorderRep,
    is_interval_order,
    is_semiorder,
    realize_interval,
    realize_semiorder,
)
from .recognizers import (
    classify_cce,
    classify_competition,
    classify_niche,
    clique_plus_isolated_decompositions,
    niche_descriptors,
)

MAX_ORDER_VERTICES = 6
MAX_GRID_VERTICES = 4
MAX_VERIFY_VERTICES = 5

FORWARD, BACKWARD, NONE = 0, 1, 2


class HarnessCapError(ValueError):
    pass


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 1 or n > cap:
        raise HarnessCapError(f"{what} supports 1 <= n <= {cap}, got {n}")


def pair_order(n: int) -> list[tuple[int, int]]:
    """Vertex pairs (i, j), i < j, grouped by the larger vertex."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def shard_prefixes(n: int, depth: int) -> list[tuple[int, ...]]:
    depth = min(depth, len(pair_order(n)))
    return list(itertools.product((FORWARD, BACKWARD, NONE), repeat=depth))


def enumerate_strict_orders(n: int, prefix: tuple[int, ...] = ()) -> Iterator[Digraph]:
    """All strict partial orders on 0..n-1 whose first pair states equal ``prefix``."""
    _check_cap(n, MAX_ORDER_VERTICES, "order enumeration")
    pairs = pair_order(n)
    if len(prefix) > len(pairs):
        raise ValueError(f"prefix of length {len(prefix)} exceeds the {len(pairs)} pairs")
    out = [0] * n
    inn = [0] * n

    def transitive_on(k: int, i: int, j: int) -> bool:
        s = 1 << k | 1 << i | 1 << j
        for u in (k, i, j):
            ou = out[u] & s
            while ou:
                low = ou & -ou
                v = low.bit_length() - 1
                if out[v] & s & ~out[u]:
                    return False
                ou ^= low
        return True

    def place(t: int) -> Iterator[Digraph]:
        if t == len(pairs):
            yield Digraph(n, tuple(out), tuple(inn))
            return
        i, j = pairs[t]
        states = (prefix[t],) if t < len(prefix) else (FORWARD, BACKWARD, NONE)
        for state in states:
            if state == FORWARD:
                out[i] |= 1 << j
                inn[j] |= 1 << i
            elif state == BACKWARD:
                out[j] |= 1 << i
                inn[i] |= 1 << j
            if all(transitive_on(k, i, j) for k in range(i)):
                yield from place(t + 1)
            if state == FORWARD:
                out[i] &= ~(1 << j)
                inn[j] &= ~(1 << i)
            elif state == BACKWARD:
                out[j] &= ~(1 << i)
                inn[i] &= ~(1 << j)

    yield from place(0)


def enumerate_semiorders(n: int, prefix: tuple[int, ...] = ()) -> Iterator[Digraph]:
    return filter(is_semiorder, enumerate_strict_orders(n, prefix))


def enumerate_interval_orders(n: int, prefix: tuple[int, ...] = ()) -> Iterator[Digraph]:
    return filter(is_interval_order, enumerate_strict_orders(n, prefix))


def grid_semiorder_reps(n: int) -> Iterator[SemiorderRep]:
    """delta = 1 and every f on the half-integer grid of [0, 2n].

    A chain on n vertices needs a spread above (n - 1) * delta, which [0, n]
    cannot hold at half-integer resolution once n >= 4.
    """
    _check_cap(n, MAX_GRID_VERTICES, "grid enumeration")
    values = [Fraction(k, 2) for k in range(4 * n + 1)]
    for f in itertools.product(values, repeat=n):
        yield SemiorderRep(f, 1)


def grid_intervals(n: int) -> list[tuple[int, int]]:
    return [(lo, hi) for lo in range(1, 2 * n + 1) for hi in range(lo, 2 * n + 1)]


def grid_interval_reps(n: int) -> Iterator[IntervalRep]:
    """Every assignment of closed intervals with integer endpoints in 1..2n."""
    _check_cap(n, MAX_GRID_VERTICES, "grid enumeration")
    for J in itertools.product(grid_intervals(n), repeat=n):
        yield IntervalRep(J)


def _sorted_digraphs(found: set[Digraph]) -> list[Digraph]:
    return sorted(found, key=lambda d: d.out)


def enumerate_semiorders_by_grid(n: int) -> list[Digraph]:
    return _sorted_digraphs({realize_semiorder(rep) for rep in grid_semiorder_reps(n)})


def enumerate_interval_orders_by_grid(n: int) -> list[Digraph]:
    return _sorted_digraphs({realize_interval(rep) for rep in grid_interval_reps(n)})


@lru_cache(maxsize=None)
def _canon(n: int, adj: tuple[int, ...]) -> CanonicalForm:
    return canonical_form(UndirectedGraph(n, adj))


def canon(g: UndirectedGraph) -> CanonicalForm:
    """Cached :func:`canonical_form`."""
    return _canon(g.n, g.adj)


@dataclass(frozen=True)
class Theorem:
    number: int
    operator: Callable[[Digraph], UndirectedGraph]
    families: tuple[str, ...]
    accepts: Callable[[UndirectedGraph], bool]
    describe: Callable[[UndirectedGraph], str]


def _describe_competition(g: UndirectedGraph) -> str:
    return " = ".join(str(d) for d in clique_plus_isolated_decompositions(g)) or "unclassified"


def _describe_niche(g: UndirectedGraph) -> str:
    return " = ".join(str(d) for d in niche_descriptors(g)) or "unclassified"


THEOREMS = {
    1: Theorem(1, competition, ("semiorder", "interval"),
               lambda g: classify_competition(g)[0], _describe_competition),
    2: Theorem(2, cce, ("semiorder", "interval"),
               lambda g: classify_cce(g)[0], _describe_competition),
    3: Theorem(3, niche, ("semiorder",),
               lambda g: classify_niche(g).niche_semiorder, _describe_niche),
    4: Theorem(4, niche, ("interval",),
               lambda g: classify_niche(g).niche_interval, _describe_niche),
}

_FAMILY_FILTER = {"semiorder": is_semiorder, "interval": is_interval_order}


@dataclass(frozen=True)
class VerificationRow:
    n: int
    family: str
    enumerated: int
    produced: tuple[CanonicalForm, ...]
    predicted: tuple[CanonicalForm, ...]
    missing: tuple[CanonicalForm, ...]
    unexpected: tuple[CanonicalForm, ...]
    produced_shapes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.missing and not self.unexpected


@dataclass(frozen=True)
class VerificationReport:
    theorem: int
    n_max: int
    rows: tuple[VerificationRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def row(self, n: int, family: str) -> VerificationRow:
        return next(r for r in self.rows if r.n == n and r.family == family)


def _shard_work(theorem: int, n: int, family: str, prefix: tuple[int, ...]) -> tuple[int, Counter]:
    op = THEOREMS[theorem].operator
    keep = _FAMILY_FILTER[family]
    count = 0
    forms: Counter = Counter()
    for d in enumerate_strict_orders(n, prefix):
        if keep(d):
            count += 1
            forms[canon(op(d))] += 1
    return count, forms


def predicted_classes(theorem: int, n: int) -> set[CanonicalForm]:
    """Canonical forms of the n-vertex graphs the theorem's class description accepts."""
    accepts = THEOREMS[theorem].accepts
    verdicts: dict[CanonicalForm, bool] = {}
    for g in all_graphs(n):
        key = canon(g)
        ok = accepts(g)
        if verdicts.setdefault(key, ok) != ok:
            raise AssertionError(f"recognizer verdict differs between isomorphic graphs {g}")
    return {key for key, ok in verdicts.items() if ok}


def _shard_depth(workers: int, n: int) -> int:
    depth = 0
    while 3**depth < 4 * workers and depth < len(pair_order(n)):
        depth += 1
    return depth


def verify_theorem(theorem: int, n_max: int, workers: int = 1) -> VerificationReport:
    """Compare derived-graph classes over all orders with the theorem's description.

    ``workers > 1`` spreads the shards over a process pool; the report does not
    depend on the worker count.
    """
    if theorem not in THEOREMS:
        raise ValueError(f"theorem must be one of {sorted(THEOREMS)}, got {theorem}")
    _check_cap(n_max, MAX_VERIFY_VERTICES, "theorem verification")
    entry = THEOREMS[theorem]
    units = []
    for n in range(1, n_max + 1):
        depth = _shard_depth(workers, n) if workers > 1 else 0
        for family in entry.families:
            for prefix in shard_prefixes(n, depth):
                units.append((n, family, prefix))

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_shard_work, *zip(*[(theorem, *u) for u in units])))
    else:
        results = [_shard_work(theorem, *u) for u in units]

    merged: dict[tuple[int, str], tuple[int, Counter]] = {}
    for (n, family, _), (count, forms) in zip(units, results):
        total, acc = merged.setdefault((n, family), (0, Counter()))
        acc.update(forms)
        merged[(n, family)] = (total + count, acc)

    rows = []
    for n in range(1, n_max + 1):
        predicted = predicted_classes(theorem, n)
        for family in entry.families:
            count, forms = merged[(n, family)]
            produced = set(forms)
            rows.append(
                VerificationRow(
                    n=n,
                    family=family,
                    enumerated=count,
                    produced=tuple(sorted(produced)),
                    predicted=tuple(sorted(predicted)),
                    missing=tuple(sorted(predicted - produced)),
                    unexpected=tuple(sorted(produced - predicted)),
                    produced_shapes=tuple(sorted(entry.describe(f.graph()) for f in produced)),
                )
            )
    return VerificationReport(theorem, n_max, tuple(rows))
