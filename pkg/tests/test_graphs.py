from __future__ import annotations

import itertools
import math
import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromtree.graphs import (
    CaterpillarSpec,
    CrabSpec,
    Graph,
    SpiderSpec,
    SquidSpec,
    canonical_graph_code,
    canonical_tree_code,
    caterpillar_spec_of,
    classify,
    complete_graph,
    components_type,
    connected_components,
    connector,
    crab_spec_of,
    cycle_edges,
    cycle_graph,
    cycle_vertices,
    diameter,
    enumerate_connected_graphs,
    enumerate_family,
    enumerate_trees,
    girth_direct,
    graph_from_code,
    is_tree,
    is_unicyclic,
    mask_edges,
    path_graph,
    spider_graph,
    spider_spec_of,
    squid_spec_of,
    star_graph,
    subtrees,
    tree_from_prufer,
)
from chromtree.partitions import Partition

SPEC_OF = {"spiders": spider_spec_of, "caterpillars": caterpillar_spec_of, "squids": squid_spec_of, "crabs": crab_spec_of}


def _connected(n, edges) -> bool:
    if n == 0:
        return True
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, queue = {0}, deque([0])
    while queue:
        for w in adj[queue.popleft()]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def test_graph_validation():
    g = Graph(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(12, itertools.combinations(range(12), 2))


def test_components_type_examples():
    p3 = path_graph(3)
    assert components_type(p3, 0) == Partition((1, 1, 1))
    assert components_type(p3, 0b01) == Partition((2, 1))
    assert components_type(p3, 0b11) == Partition((3,))


def test_components_type_of_a_four_edge_subset_on_ten_vertices():
    # two paths on three vertices, one extra edge, two isolated vertices
    t = Graph(10, [(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (2, 3), (5, 6), (7, 8), (8, 9)])
    mask = 0b11111
    assert components_type(t, mask) == Partition((3, 3, 2, 1, 1))


def test_component_count_matches_full_type_for_small_graphs():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            for drop in range(min(g.m, 3) + 1):
                h = g.remove_edges(g.edges[:drop])
                assert len(components_type(h, h.full_mask())) == len(connected_components(h))


def test_tree_subsets_have_forest_lengths():
    for n in range(1, 10):
        for t in enumerate_trees(n):
            for mask in range(1 << t.m):
                assert len(components_type(t, mask)) == n - mask.bit_count()


def test_girth_direct_examples():
    assert girth_direct(complete_graph(3)) == 3
    assert girth_direct(path_graph(5)) == math.inf
    assert girth_direct(Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])) == 4
    assert girth_direct(complete_graph(5)) == 3


def test_cycle_of_unicyclic_graphs():
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4), (0, 5)])
    assert is_unicyclic(g)
    assert sorted(cycle_vertices(g)) == [1, 2, 3]
    assert sorted(cycle_edges(g)) == [(1, 2), (1, 3), (2, 3)]


def test_classify_examples():
    spider = classify(spider_graph((2, 1, 1)))
    assert spider.spider and spider.caterpillar and not spider.star
    claw = classify(star_graph(3))
    assert claw.star and claw.spider and not claw.caterpillar
    crab = classify(CrabSpec((1, 1, 1)).build())
    assert crab.crab and not crab.squid and crab.unicyclic
    assert classify(path_graph(5)).path
    assert not classify(Graph(4, [(0, 1), (2, 3)])).connected


def test_subtree_examples():
    assert [(m, l) for m, l in subtrees(path_graph(2))] == [(1, 1)]
    found = sorted((m.bit_count(), l.bit_count()) for m, l in subtrees(path_graph(3)))
    assert found == [(1, 1), (1, 1), (2, 2)]
    assert sum(1 for _ in subtrees(star_graph(3))) == 7
    with pytest.raises(ValueError):
        list(subtrees(complete_graph(3)))


def test_subtrees_are_exactly_the_connected_edge_sets():
    for n in range(2, 9):
        for t in enumerate_trees(n):
            got = {m for m, _ in subtrees(t)}
            want = {m for m in range(1, 1 << t.m) if _connected_subset(t, m)}
            assert got == want


def _connected_subset(t, mask):
    edges = mask_edges(t, mask)
    verts = sorted({v for e in edges for v in e})
    relabel = {v: i for i, v in enumerate(verts)}
    return _connected(len(verts), [(relabel[u], relabel[v]) for u, v in edges])


def test_connector_examples():
    p4 = path_graph(4)
    assert connector(p4, 0b101) == 0b010
    assert connector(p4, 0b011) == 0
    star = star_graph(4)
    for mask in range(1, 1 << star.m):
        assert connector(star, mask) == 0
    with pytest.raises(ValueError):
        connector(p4, 0)


def test_connector_is_minimal_and_connecting():
    for n in range(2, 8):
        for t in enumerate_trees(n):
            for a in range(1, 1 << t.m):
                k = connector(t, a)
                assert a & k == 0
                assert _connected_subset(t, a | k)
                bits = [1 << i for i in range(t.m) if k >> i & 1]
                for drop in bits:
                    assert not _connected_subset(t, a | (k ^ drop))


def test_canonical_codes_examples():
    assert canonical_tree_code(Graph(3, [(0, 1), (1, 2)])) == canonical_tree_code(Graph(3, [(0, 2), (2, 1)]))
    assert canonical_tree_code(path_graph(4)) != canonical_tree_code(star_graph(3))
    assert canonical_graph_code(path_graph(4)) != canonical_graph_code(star_graph(3))
    with pytest.raises(ValueError):
        canonical_graph_code(path_graph(9))


def test_graph_code_round_trip():
    for g in enumerate_connected_graphs(5):
        code = canonical_graph_code(g)
        assert canonical_graph_code(graph_from_code(code)) == code


@settings(max_examples=60)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2), st.permutations(range(n)))))
def test_canonical_codes_are_relabel_invariant(data):
    seq, perm = data
    t = tree_from_prufer(seq)
    assert canonical_tree_code(t) == canonical_tree_code(t.relabel(perm))
    assert canonical_graph_code(t) == canonical_graph_code(t.relabel(perm))


@pytest.mark.parametrize("n", range(2, 9))
def test_tree_enumeration_matches_prufer_dedup(n):
    codes = {canonical_tree_code(tree_from_prufer(seq)) for seq in itertools.product(range(n), repeat=n - 2)}
    mine = [canonical_tree_code(t) for t in enumerate_trees(n)]
    assert len(mine) == len(set(mine))
    assert set(mine) == codes


def test_free_tree_counts():
    want = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
    assert [sum(1 for _ in enumerate_trees(n)) for n in range(1, 13)] == want
    assert all(is_tree(t) for t in enumerate_trees(9))
    with pytest.raises(ValueError):
        next(enumerate_trees(17))


def test_tree_enumeration_is_deterministic():
    assert [t.edges for t in enumerate_trees(8)] == [t.edges for t in enumerate_trees(8)]


def test_connected_graph_counts():
    assert [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 6)] == [1, 1, 2, 6, 21]
    with pytest.raises(ValueError):
        next(enumerate_connected_graphs(7))


def test_connected_graphs_n4_by_brute_force():
    pairs = list(itertools.combinations(range(4), 2))
    codes = set()
    for mask in range(1 << 6):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if _connected(4, edges):
            codes.add(canonical_graph_code(Graph(4, edges)))
    assert len(codes) == 6


def test_spiders_on_five_vertices():
    assert {str(s) for s in enumerate_family("spiders", 5)} == {"spider[2,1,1]", "spider[1,1,1,1]"}


def test_family_enumerators_match_tree_classification():
    for n in range(4, 11):
        trees = list(enumerate_trees(n))
        spiders = {canonical_tree_code(s.build()) for s in enumerate_family("spiders", n)}
        assert spiders == {canonical_tree_code(t) for t in trees if classify(t).spider}
        cats = {canonical_tree_code(c.build()) for c in enumerate_family("caterpillars", n)}
        assert cats == {canonical_tree_code(t) for t in trees if classify(t).caterpillar}


def test_unicyclic_family_enumerators_match_classification():
    from chromtree.search import unicyclic_from_trees

    for n in range(3, 8):
        graphs = unicyclic_from_trees(n)
        squids = {canonical_graph_code(s.build()) for s in enumerate_family("squids", n)}
        crabs = {canonical_graph_code(c.build()) for c in enumerate_family("crabs", n)}
        assert squids == {canonical_graph_code(g) for g in graphs if classify(g).squid}
        assert crabs == {canonical_graph_code(g) for g in graphs if classify(g).crab}


@pytest.mark.parametrize("kind", ["spiders", "caterpillars", "squids", "crabs"])
def test_family_specs_round_trip_through_graphs(kind):
    rng = random.Random(7)
    for n in range(3, 11):
        for spec in enumerate_family(kind, n):
            g = spec.build()
            assert g.n == spec.order == n
            perm = list(range(n))
            rng.shuffle(perm)
            assert SPEC_OF[kind](g.relabel(perm)) == spec


def test_spec_normalization_and_text():
    assert CaterpillarSpec((3, 0, 1)) == CaterpillarSpec((1, 0, 3))
    assert CrabSpec((3, 1, 2)) == CrabSpec((1, 2, 3)) == CrabSpec((2, 1, 3))
    assert str(SquidSpec(3, (1, 2))) == "squid(g=3;[2,1])"
    assert str(SpiderSpec((1, 2, 1))) == "spider[2,1,1]"
    with pytest.raises(ValueError):
        SpiderSpec((2, 1))
    with pytest.raises(ValueError):
        CaterpillarSpec((0, 2))
    with pytest.raises(ValueError):
        SquidSpec(2, (1,))


def test_diameter():
    assert diameter(path_graph(6)) == 5
    assert diameter(star_graph(5)) == 2
    assert diameter(cycle_graph(3).remove_edges([(0, 2)])) == 2
