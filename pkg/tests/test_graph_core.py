import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import to_nx
from niche_graphs.graph_core import (
    CanonicalForm,
    Digraph,
    SizeCapError,
    UndirectedGraph,
    all_graphs,
    are_isomorphic,
    canonical_form,
    complement,
    complete,
    complete_bipartite,
    components,
    disjoint_union,
    edgeless,
    is_complete,
    isolated_vertices,
    universal_vertices,
)

P3 = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def test_complete_small_cases():
    assert complete(0) == UndirectedGraph(0, ())
    assert complete(1).edges == []
    assert complete(3).edges == [(0, 1), (0, 2), (1, 2)]


def test_edgeless_and_bipartite():
    assert edgeless(4).n == 4 and edgeless(4).edge_count == 0
    assert complete_bipartite(1, 1).edges == [(0, 1)]
    k23 = complete_bipartite(2, 3)
    assert k23.edge_count == 6
    assert all((i < 2) != (j < 2) for i, j in k23.edges)


@pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (0, 0)])
def test_complete_bipartite_rejects_empty_side(m, n):
    with pytest.raises(ValueError):
        complete_bipartite(m, n)


def test_disjoint_union():
    g = disjoint_union(complete(2), edgeless(1))
    assert g.n == 3 and g.edges == [(0, 1)]
    assert disjoint_union(edgeless(0), P3) == P3
    kk = disjoint_union(complete(2), complete(2))
    assert kk.edges == [(0, 1), (2, 3)]
    assert len(components(kk)) == 2


def test_complement_examples():
    assert complement(edgeless(4)) == complete(4)
    assert complement(complement(P3)) == P3


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 7) for n in range(1, 7)])
def test_complement_of_complete_bipartite_is_two_cliques(m, n):
    assert complement(complete_bipartite(m, n)) == disjoint_union(complete(m), complete(n))


def test_components_and_special_vertices():
    assert [len(c) for c in components(disjoint_union(complete(2), complete(2)))] == [2, 2]
    assert universal_vertices(P3) == {1}
    assert isolated_vertices(disjoint_union(P3, edgeless(1))) == {3}
    assert is_complete(complete(4)) and not is_complete(P3)
    assert is_complete(edgeless(1)) and is_complete(edgeless(0))


def test_isomorphism_examples():
    # complement of one edge xy on {x, y, z} has edges xz, yz
    assert are_isomorphic(P3, complement(disjoint_union(complete_bipartite(1, 1), edgeless(1))))
    assert not are_isomorphic(complete(3), P3)


def test_canonical_form_size_cap():
    canonical_form(complete(10))
    with pytest.raises(SizeCapError):
        canonical_form(edgeless(11))


def test_canonical_form_round_trip_graph():
    form = canonical_form(P3)
    assert are_isomorphic(form.graph(), P3)
    assert canonical_form(form.graph()) == form


def test_canonical_form_hard_regular_graphs():
    petersen = UndirectedGraph.from_edges(10, nx.petersen_graph().edges())
    rng = random.Random(7)
    perm = rng.sample(range(10), 10)
    assert canonical_form(petersen.permute(perm)) == canonical_form(petersen)
    # C10 and two C5s are both 2-regular on 10 vertices
    c10 = UndirectedGraph.from_edges(10, [(i, (i + 1) % 10) for i in range(10)])
    two_c5 = UndirectedGraph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert not are_isomorphic(c10, two_c5)


def test_class_counts_match_networkx_atlas():
    atlas = nx.graph_atlas_g()
    for n in range(1, 6):
        expected = sum(1 for h in atlas if h.number_of_nodes() == n)
        assert len({canonical_form(g) for g in all_graphs(n)}) == expected


@settings(max_examples=300, deadline=None)
@given(graphs(), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabeling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_form(g.permute(perm)) == canonical_form(g)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_networkx(g, h):
    expected = g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h))
    assert are_isomorphic(g, h) == expected


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_complement_laws(g):
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=4), graphs(max_n=4), graphs(max_n=4))
def test_disjoint_union_additive_and_associative(a, b, c):
    ab = disjoint_union(a, b)
    assert ab.n == a.n + b.n and ab.edge_count == a.edge_count + b.edge_count
    assert disjoint_union(ab, c) == disjoint_union(a, disjoint_union(b, c))


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        UndirectedGraph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        UndirectedGraph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        UndirectedGraph(2, (0b10, 0))  # asymmetric rows


def test_digraph_views_agree():
    d = Digraph.from_arcs(3, [(1, 0), (2, 0), (2, 1)])
    assert d.out_neighbors(2) == {0, 1}
    assert d.in_neighbors(0) == {1, 2}
    assert sorted(d.arcs) == [(1, 0), (2, 0), (2, 1)]
    with pytest.raises(ValueError):
        Digraph.from_arcs(2, [(1, 1)])
    with pytest.raises(ValueError):
        Digraph(2, (0b10, 0), (0, 0))


def test_canonical_form_is_ordered_value():
    assert CanonicalForm(3, 1) < CanonicalForm(3, 2)
