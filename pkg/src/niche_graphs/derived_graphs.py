"""Competition, competition-common-enemy and niche graphs of a digraph."""

from __future__ import annotations

from .graph_core import Digraph, UndirectedGraph


def _shared_rows(rows: tuple[int, ...]) -> list[int]:
    # pair (x, y) is marked when rows[x] & rows[y] is nonempty
    n = len(rows)
    adj = [0] * n
    for x in range(n):
        rx = rows[x]
        if not rx:
            continue
        for y in range(x + 1, n):
            if rx & rows[y]:
                adj[x] |= 1 << y
                adj[y] |= 1 << x
    return adj


def competition(d: Digraph) -> UndirectedGraph:
    """Edge xy iff x and y have a common out-neighbour."""
    return UndirectedGraph(d.n, tuple(_shared_rows(d.out)))


def cce(d: Digraph) -> UndirectedGraph:
    """Edge xy iff x and y have both a common out-neighbour and a common in-neighbour."""
    prey = _shared_rows(d.out)
    enemy = _shared_rows(d.inn)
    return UndirectedGraph(d.n, tuple(a & b for a, b in zip(prey, enemy)))


def niche(d: Digraph) -> UndirectedGraph:
    """Edge xy iff x and y have a common out-neighbour or a common in-neighbour."""
    prey = _shared_rows(d.out)
    enemy = _shared_rows(d.inn)
    return UndirectedGraph(d.n, tuple(a | b for a, b in zip(prey, enemy)))


def reverse(d: Digraph) -> Digraph:
    return Digraph(d.n, d.inn, d.out)
