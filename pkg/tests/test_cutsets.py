import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bei.cutsets import (CutsetBudgetError, cutsets_after_clique_close,
                         cutsets_of_glued, enumerate_cutsets, is_cutset,
                         is_unmixed, primary_decomposition)
from bei.graph import Graph


def literal_is_cutset(g: Graph, t) -> bool:
    """The definition verbatim: every member is a cut vertex of the graph
    minus the other members."""
    t = set(t)
    for x in t:
        h = g.delete(t - {x})
        if x not in h.cut_vertices():
            return False
    return True


def random_graph(rng, n):
    p = rng.uniform(0.2, 0.8)
    edges = [(a, b) for a, b in itertools.combinations(range(1, n + 1), 2)
             if rng.random() < p]
    return Graph(range(1, n + 1), edges)


def brute_force_family(g: Graph):
    out = {}
    for k in range(g.n + 1):
        for t in itertools.combinations(g.labels, k):
            if literal_is_cutset(g, t):
                out[frozenset(t)] = g.count_components_without(t)
    return out


def test_is_cutset_matches_literal_definition():
    rng = random.Random(20240901)
    graphs = [random_graph(rng, rng.randint(1, 8)) for _ in range(100)]
    for g in graphs:
        for k in range(g.n + 1):
            for t in itertools.combinations(g.labels, k):
                assert is_cutset(g, t) == literal_is_cutset(g, t), (g.edges, t)


def test_enumeration_equals_brute_force():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 7))
        fam = enumerate_cutsets(g)
        expect = brute_force_family(g)
        assert {cs.members: cs.component_count for cs in fam} == expect


def test_empty_set_is_always_a_cutset():
    g = Graph.from_edges([(1, 2)])
    fam = enumerate_cutsets(g)
    assert frozenset() in fam
    assert fam.get([]).component_count == 1


def test_free_vertices_never_in_cutsets():
    rng = random.Random(8)
    for _ in range(30):
        g = random_graph(rng, 7)
        free = g.free_vertices()
        for cs in enumerate_cutsets(g):
            assert not (cs.members & free)


def test_family_iteration_order_is_size_then_lex():
    g = Graph.cycle(6)
    fam = list(enumerate_cutsets(g))
    keys = [(len(c.members), tuple(sorted(c.members))) for c in fam]
    assert keys == sorted(keys)


def test_budget_error():
    g = Graph.cycle(30)  # every vertex non-free
    with pytest.raises(CutsetBudgetError) as e:
        enumerate_cutsets(g, budget=24)
    assert e.value.candidates == 30
    # generous budget succeeds on something smaller
    enumerate_cutsets(Graph.cycle(10), budget=24)


def test_disconnected_enumeration_is_cartesian():
    g = Graph(range(1, 7), [(1, 2), (2, 3), (4, 5), (5, 6)])
    fam = enumerate_cutsets(g)
    assert fam.member_sets() == {frozenset(a) | frozenset(b)
                                 for a in [(), (2,)] for b in [(), (5,)]}
    assert fam.get({2, 5}).component_count == 4


def test_primary_decomposition_heights():
    # path 1-2-3: cutsets {} (c=1, h=2) and {2} (c=2, h=2); unmixed
    rep = primary_decomposition(Graph.path(3))
    assert {(tuple(sorted(c.killed)), c.height) for c in rep.components} == \
        {((), 2), ((2,), 2)}
    assert rep.unmixed and rep.witness is None
    # claw K_{1,3}: {2 components after removing the center} breaks unmixedness
    claw = Graph.from_edges([(1, 2), (1, 3), (1, 4)])
    rep = primary_decomposition(claw)
    assert not rep.unmixed
    assert rep.witness.members == {1}
    assert rep.min_height < rep.max_height


def test_height_formula():
    rng = random.Random(9)
    for _ in range(30):
        g = random_graph(rng, 7)
        rep = primary_decomposition(g)
        for c in rep.components:
            t = c.killed
            assert c.height == g.n + len(t) - g.count_components_without(t)
            # supports really are the components of G minus T
            assert set(c.clique_supports) == \
                set(g.delete(t).connected_components())


def test_unmixed_witness_is_first_in_order():
    claw = Graph.from_edges([(1, 2), (1, 3), (1, 4)])
    ok, wit = is_unmixed(claw)
    assert not ok and wit.members == {1} and wit.component_count == 3


def test_unmixed_matches_decomposition():
    rng = random.Random(10)
    for _ in range(40):
        g = random_graph(rng, 7)
        assert is_unmixed(g, use_cache=False)[0] == primary_decomposition(g).unmixed


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    return Graph(range(1, n + 1), sorted(chosen))


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_property_every_enumerated_set_satisfies_definition(g):
    for cs in enumerate_cutsets(g):
        assert literal_is_cutset(g, cs.members)
        assert cs.component_count == g.count_components_without(cs.members)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_property_singleton_cutsets_are_cut_vertices(g):
    fam = enumerate_cutsets(g)
    singles = {next(iter(c.members)) for c in fam if len(c.members) == 1}
    assert singles == set(g.cut_vertices())


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=6))
def test_property_kernels_agree(g):
    import bei.kernels as kernels
    from bei.kernels import bitset
    cand = [i for i in range(g.n) if not g.free_vertex_mask >> i & 1]
    for cm in g.component_masks:
        cc = [i for i in cand if cm >> i & 1]
        py = sorted(bitset.enumerate_cutset_masks(list(g.nbr), cm, cc))
        accel = kernels._accel()
        if accel is not None:
            import numpy as np
            masks, counts = accel.enumerate_cutset_masks(
                np.array(g.nbr, dtype=np.uint64), np.uint64(cm),
                np.array(cc, dtype=np.int64))
            assert sorted((int(m), int(c)) for m, c in zip(masks, counts)) == py


def test_glued_family_matches_direct(corpus):
    rng = random.Random(123)
    pool = [random_graph(rng, rng.randint(2, 6)) for _ in range(120)]
    pool = [g for g in pool if g.is_connected]
    done = 0
    i = 0
    while done < 50:
        g1 = pool[i % len(pool)]
        g2 = pool[(i * 7 + 3) % len(pool)]
        i += 1
        v = rng.choice(g1.labels)
        # shift g2 labels above g1's, then relabel one vertex to v
        off = max(g1.labels)
        g2s = Graph([x + off for x in g2.labels],
                    [(a + off, b + off) for a, b in g2.edges])
        w = rng.choice(g2s.labels)
        mapped = Graph([v if x == w else x for x in g2s.labels],
                       [tuple(v if y == w else y for y in e) for e in g2s.edges])
        fam = cutsets_of_glued(g1, mapped, v)
        direct = enumerate_cutsets(fam.graph)
        assert {c.members: c.component_count for c in fam} == \
            {c.members: c.component_count for c in direct}
        done += 1


def test_clique_close_family_matches_direct(corpus):
    for name, g in corpus.items():
        fam = enumerate_cutsets(g)
        for v in sorted(g.cut_vertices()):
            derived = cutsets_after_clique_close(fam, v)
            direct = enumerate_cutsets(g.clique_close(v))
            assert {c.members: c.component_count for c in derived} == \
                {c.members: c.component_count for c in direct}, (name, v)
