"""Finite simple graphs and loopless digraphs on dense integer vertices.

Adjacency is kept as one bitmask per vertex, so neighbourhood intersection
is a single ``&``. Every value is immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_CANONICAL_VERTICES = 10


class SizeCapError(ValueError):
    """Raised when an input exceeds a hard size cap."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple graph on vertices ``0..n-1``; ``adj[v]`` is the neighbour mask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> UndirectedGraph:
        adj = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {(i, j)} has an endpoint outside 0..{n - 1}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(n, tuple(adj))

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(i, j)`` with ``i < j``."""
        return [(i, j) for i in range(self.n) for j in _bits(self.adj[i] >> (i + 1) << (i + 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(_bits(self.adj[v]))

    def permute(self, perm: Sequence[int]) -> UndirectedGraph:
        """Relabel vertex ``v`` as ``perm[v]``."""
        return UndirectedGraph.from_edges(self.n, ((perm[i], perm[j]) for i, j in self.edges))

    def induced(self, vertices: Iterable[int]) -> UndirectedGraph:
        """Induced subgraph, renumbered in increasing order of the kept vertices."""
        keep = sorted(set(vertices))
        index = {v: k for k, v in enumerate(keep)}
        return UndirectedGraph.from_edges(
            len(keep),
            ((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph; ``out[x]`` and ``inn[x]`` are the out/in-neighbour masks of x."""

    n: int
    out: tuple[int, ...]
    inn: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if len(self.out) != self.n or len(self.inn) != self.n:
            raise ValueError("neighbour rows do not match the vertex count")
        full = (1 << self.n) - 1
        transposed = [0] * self.n
        for x, row in enumerate(self.out):
            if row & ~full:
                raise ValueError(f"vertex {x} has an arc leaving 0..{self.n - 1}")
            if row >> x & 1:
                raise ValueError(f"loop at vertex {x}")
            for y in _bits(row):
                transposed[y] |= 1 << x
        if tuple(transposed) != self.inn:
            raise ValueError("in-neighbour rows disagree with out-neighbour rows")

    @classmethod
    def from_out_masks(cls, n: int, out: Sequence[int]) -> Digraph:
        inn = [0] * n
        for x, row in enumerate(out):
            for y in _bits(row):
                inn[y] |= 1 << x
        return cls(n, tuple(out), tuple(inn))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Sequence[int]]) -> Digraph:
        out = [0] * n
        for x, y in arcs:
            if x == y:
                raise ValueError(f"loop at vertex {x}")
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"arc {(x, y)} has an endpoint outside 0..{n - 1}")
            out[x] |= 1 << y
        return cls.from_out_masks(n, out)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in _bits(self.out[x])]

    def has_arc(self, x: int, y: int) -> bool:
        return bool(self.out[x] >> y & 1)

    def out_neighbors(self, x: int) -> frozenset[int]:
        return frozenset(_bits(self.out[x]))

    def in_neighbors(self, x: int) -> frozenset[int]:
        return frozenset(_bits(self.inn[x]))

    def permute(self, perm: Sequence[int]) -> Digraph:
        return Digraph.from_arcs(self.n, ((perm[x], perm[y]) for x, y in self.arcs))


def complete(k: int) -> UndirectedGraph:
    if k < 0:
        raise ValueError(f"vertex count must be non-negative, got {k}")
    full = (1 << k) - 1
    return UndirectedGraph(k, tuple(full & ~(1 << v) for v in range(k)))


def edgeless(k: int) -> UndirectedGraph:
    if k < 0:
        raise ValueError(f"vertex count must be non-negative, got {k}")
    return UndirectedGraph(k, (0,) * k)


def complete_bipartite(m: int, n: int) -> UndirectedGraph:
    """K_{m,n} with parts ``0..m-1`` and ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise ValueError(f"both parts of K_{{m,n}} must be nonempty, got m={m}, n={n}")
    left = (1 << m) - 1
    right = ((1 << n) - 1) << m
    return UndirectedGraph(m + n, (right,) * m + (left,) * n)


def disjoint_union(g: UndirectedGraph, h: UndirectedGraph) -> UndirectedGraph:
    """Union with the vertices of ``h`` shifted up by ``g.n``."""
    return UndirectedGraph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def complement(g: UndirectedGraph) -> UndirectedGraph:
    full = (1 << g.n) - 1
    return UndirectedGraph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def components(g: UndirectedGraph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = 0
    result = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        seen |= comp
        result.append(frozenset(_bits(comp)))
    return result


def isolated_vertices(g: UndirectedGraph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if not g.adj[v])


def universal_vertices(g: UndirectedGraph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.adj[v].bit_count() == g.n - 1)


def is_complete(g: UndirectedGraph) -> bool:
    return len(universal_vertices(g)) == g.n


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant key: ``mask`` packs the minimal adjacency encoding.

    Row ``k`` of the encoding holds the adjacency of position ``k`` to
    positions ``0..k-1`` and occupies bits ``k(k-1)/2 .. k(k+1)/2 - 1``.
    """

    n: int
    mask: int

    def graph(self) -> UndirectedGraph:
        edges = []
        for k in range(1, self.n):
            row = self.mask >> (k * (k - 1) // 2) & ((1 << k) - 1)
            edges.extend((i, k) for i in _bits(row))
        return UndirectedGraph.from_edges(self.n, edges)


def _refined_colors(g: UndirectedGraph) -> list[int]:
    """Colour refinement seeded by degree; colour names depend only on the iso type."""
    colors = [g.degree(v) for v in range(g.n)]
    classes = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v])))) for v in range(g.n)
        ]
        rank = {sig: k for k, sig in enumerate(sorted(set(signatures)))}
        colors = [rank[sig] for sig in signatures]
        if len(rank) == classes:
            return colors
        classes = len(rank)


def _adj_without(g: UndirectedGraph, u: int, v: int) -> int:
    return g.adj[u] & ~(1 << v)


def canonical_form(g: UndirectedGraph) -> CanonicalForm:
    """Minimal adjacency encoding over all labelings that list colour classes in order.

    Colour classes come from degree-seeded refinement, so the labelings searched
    form an isomorphism-invariant family and the minimum is a canonical form.
    Branches whose partial encoding already exceeds the best one are cut, and
    only one member of each twin class is tried per position (swapping twins
    is an automorphism fixing every other vertex).
    """
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise SizeCapError(
            f"canonical form is capped at {MAX_CANONICAL_VERTICES} vertices, got {n}"
        )
    colors = _refined_colors(g)
    twin = list(range(n))
    for u in range(n):
        for v in range(u):
            if twin[v] == v and _adj_without(g, u, v) == _adj_without(g, v, u):
                twin[u] = v
                break
    slot_color = sorted(colors)
    adj = g.adj
    order = [0] * n
    rows = [0] * n
    best: list[int] = []

    def search(k: int, used: int, tied: bool) -> bool:
        nonlocal best
        if k == n:
            if not best or not tied:
                best = rows[:]
                return True
            return False
        improved = False
        want = slot_color[k]
        tried = set()
        for v in range(n):
            if used >> v & 1 or colors[v] != want or twin[v] in tried:
                continue
            tried.add(twin[v])
            row = 0
            nbrs = adj[v]
            for i in range(k):
                if nbrs >> order[i] & 1:
                    row |= 1 << i
            still_tied = tied
            if tied and best:
                if row > best[k]:
                    continue
                still_tied = row == best[k]
            order[k] = v
            rows[k] = row
            if search(k + 1, used | 1 << v, still_tied):
                improved = True
                # the new best extends the current prefix
                tied = True
        return improved

    search(0, 0, True)
    mask = 0
    for k, row in enumerate(best):
        mask |= row << (k * (k - 1) // 2)
    return CanonicalForm(n, mask)


def are_isomorphic(g: UndirectedGraph, h: UndirectedGraph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


def all_graphs(n: int) -> Iterator[UndirectedGraph]:
    """Every labeled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield UndirectedGraph.from_edges(n, (p for k, p in enumerate(pairs) if code >> k & 1))
