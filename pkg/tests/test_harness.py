import networkx as nx
import pytest

from bei.constructors import star_product
from bei.graph import Graph
from bei.harness import (FamilySpec, connected_graphs,
                         generate_block_trees, is_isomorphic,
                         search_conjecture, verify_block_theorem,
                         verify_gluing_theorem, verify_regular_classification,
                         verify_star_theorem, vertex_connectivity_at_least)


def test_connected_graph_counts():
    assert [len(connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    with pytest.raises(ValueError):
        connected_graphs(7)


def test_connected_graphs_pairwise_nonisomorphic():
    gs = connected_graphs(5)
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            assert not is_isomorphic(gs[i], gs[j])


def test_is_isomorphic_vs_networkx():
    import random
    rng = random.Random(77)
    for _ in range(60):
        n = rng.randint(2, 8)
        a = nx.gnp_random_graph(n, rng.uniform(0.2, 0.8), seed=rng.randint(0, 999))
        b = nx.gnp_random_graph(n, rng.uniform(0.2, 0.8), seed=rng.randint(0, 999))
        ga = Graph(range(n), a.edges())
        gb = Graph(range(n), b.edges())
        assert is_isomorphic(ga, gb) == nx.is_isomorphic(a, b)


def test_vertex_connectivity():
    assert vertex_connectivity_at_least(Graph.complete(4), 3)
    assert vertex_connectivity_at_least(Graph.cycle(5), 2)
    assert not vertex_connectivity_at_least(Graph.cycle(5), 3)
    assert not vertex_connectivity_at_least(Graph.path(4), 2)
    assert vertex_connectivity_at_least(star_product(3, 3, 3), 3)


def test_block_trees_deterministic_and_shaped():
    a = generate_block_trees(20, 12, seed=5)
    b = generate_block_trees(20, 12, seed=5)
    assert [g.key for g in a] == [g.key for g in b]
    assert generate_block_trees(3, 12, seed=5)[0].key == a[0].key
    for g in a:
        assert g.is_connected and g.n <= 12
        dec = g.blocks()
        e = sum(1 for blk in dec.blocks for v in dec.cut_vertices if v in blk)
        assert e == len(dec.blocks) + len(dec.cut_vertices) - 1  # block-cut tree


def test_family_spec_sources(tmp_path):
    assert len(FamilySpec("corpus").graphs()) == 7
    assert len(FamilySpec("exhaustive_connected", n=4).graphs()) == 10
    assert len(FamilySpec("random_block_trees", count=5, max_n=10,
                          seed=1).graphs()) == 5
    with pytest.raises(ValueError):
        FamilySpec("nope").graphs()


def test_block_theorem_degenerate_2connected():
    rep = verify_block_theorem(FamilySpec("random_block_trees", count=0,
                                          max_n=5, seed=0))
    assert rep.examined == 0 and rep.passed
    # a single 2-connected graph: B-bar is the graph itself
    from bei.constructors import whiskered_star_product
    spec = FamilySpec("exhaustive_connected", n=4)
    rep = verify_block_theorem(spec)
    assert rep.passed and rep.examined == 10


def test_star_theorem_small():
    rep = verify_star_theorem(3, extra=((3, 2, 2),))
    assert rep.passed and rep.examined == 3
    with pytest.raises(ValueError):
        verify_star_theorem(1)


def test_regular_classification_r2():
    # cycles C4, C5, C6 are the 2-regular 2-connected graphs up to n=6;
    # only C4 = K2*K2 may carry an accessible decoration
    rep = verify_regular_classification(6, 2)
    assert rep.examined == 3 and rep.passed


def test_gluing_skip_on_hypothesis_failure(corpus):
    rep = verify_gluing_theorem([(corpus["fig1a_G"], 1, corpus["fig1b_H"], 4)])
    assert rep.examined == 1 and not rep.violations
    assert len(rep.skips) == 1
    assert rep.skips[0]["reason"] == "hypothesis_failure"
    assert rep.skips[0]["hypotheses"]["G_minus_v_unmixed"] is False


def test_gluing_triangle_whiskers():
    tri = Graph.from_edges([(1, 2), (2, 3), (1, 3), (3, 4)])
    other = Graph.from_edges([(11, 12), (12, 13), (11, 13), (13, 14)])
    rep = verify_gluing_theorem([(tri, 3, other, 13)])
    assert rep.passed and not rep.skips


def test_search_conjecture_reports_candidates_not_failures():
    rep = search_conjecture(FamilySpec("exhaustive_connected", n=5))
    assert rep.examined == 1 + 1 + 2 + 6 + 21
    assert rep.violations == [] and rep.candidates == []
