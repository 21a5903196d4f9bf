"""Shared brute-force oracles.

These work from the definitions with plain Python sets and never touch the
bitmask code paths they are used to check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import pytest

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def definitional_derived(n, arcs, kind):
    """Edge set of the competition / cce / niche graph straight from N+ and N-."""
    out = {x: {y for (a, y) in arcs if a == x} for x in range(n)}
    inn = {x: {a for (a, y) in arcs if y == x} for x in range(n)}
    edges = set()
    for x, y in itertools.combinations(range(n), 2):
        prey = bool(out[x] & out[y])
        enemy = bool(inn[x] & inn[y])
        hit = {"competition": prey, "cce": prey and enemy, "niche": prey or enemy}[kind]
        if hit:
            edges.add((x, y))
    return edges


def is_transitive(n, arcs):
    arcs = set(arcs)
    return all((a, d) in arcs for (a, b) in arcs for (c, d) in arcs if b == c)


def brute_strict_orders(n):
    """Strict orders on 0..n-1 by trying all three states of every pair."""
    pairs = list(itertools.combinations(range(n), 2))
    found = []
    for states in itertools.product(range(3), repeat=len(pairs)):
        arcs = set()
        for (i, j), s in zip(pairs, states):
            if s == 0:
                arcs.add((i, j))
            elif s == 1:
                arcs.add((j, i))
        if is_transitive(n, arcs):
            found.append(frozenset(arcs))
    return found


def search_interval_rep(n, arcs, endpoints):
    """Backtracking search for closed intervals realizing exactly ``arcs``."""
    arcs = set(arcs)
    intervals = [(lo, hi) for lo in endpoints for hi in endpoints if lo <= hi]
    chosen = []

    def fits(v, iv):
        for u, ju in enumerate(chosen):
            if ((iv[0] > ju[1]) != ((v, u) in arcs)) or ((ju[0] > iv[1]) != ((u, v) in arcs)):
                return False
        return True

    def go(v):
        if v == n:
            return list(chosen)
        for iv in intervals:
            if fits(v, iv):
                chosen.append(iv)
                got = go(v + 1)
                if got:
                    return got
                chosen.pop()
        return None

    return go(0)


def search_semiorder_rep(n, arcs, values, delta):
    """Backtracking search for f over ``values`` realizing exactly ``arcs``."""
    arcs = set(arcs)
    chosen = []

    def go(v):
        if v == n:
            return list(chosen)
        for x in values:
            if all((x > fu + delta) == ((v, u) in arcs) and (fu > x + delta) == ((u, v) in arcs)
                   for u, fu in enumerate(chosen)):
                chosen.append(x)
                got = go(v + 1)
                if got:
                    return got
                chosen.pop()
        return None

    return go(0)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


HALF_GRID_0_8 = [Fraction(k, 2) for k in range(17)]


@pytest.fixture
def half_grid():
    return HALF_GRID_0_8
