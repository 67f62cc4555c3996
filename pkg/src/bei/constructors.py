"""Graph constructions: whiskers, blocks with whiskers, star products and
their whiskered decoration, vertex-identification gluing, and the fixed
corpus of example graphs used throughout the tests."""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .graph import Graph


def add_whisker(g: Graph, v: int) -> Graph:
    """Attach one pendant vertex (fresh label max+1) to v."""
    g.pos(v)
    f = max(g.labels) + 1 if g.labels else 1
    return Graph(list(g.labels) + [f], list(g.edges) + [(v, f)])


def branch_at(g: Graph, block: frozenset[int], v: int) -> frozenset[int]:
    """Vertices of the branch hanging off cut vertex v away from the block
    (v included)."""
    comps = g.delete([v]).connected_components()
    hanging = [c for c in comps if not (c & (block - {v}))]
    out = {v}
    for c in hanging:
        out |= c
    return frozenset(out)


def block_with_whiskers(g: Graph, block, w=None) -> Graph:
    """The graph B^W: keep the block, replace the branch at each cut vertex
    in W by a whisker, keep the full branch at cut vertices outside W.
    Default W = all cut vertices of g inside the block."""
    block = frozenset(block)
    dec = g.blocks()
    if block not in dec.blocks:
        raise ValueError(f"{sorted(block)} is not a block of the graph")
    cuts_in_block = sorted(dec.cut_vertices & block)
    if w is None:
        w = cuts_in_block
    w = sorted(set(w))
    if not set(w) <= set(cuts_in_block):
        raise ValueError("whisker set must be cut vertices inside the block")
    verts = set(block)
    edges = [(a, b) for a, b in g.edges if a in block and b in block]
    for v in cuts_in_block:
        if v in w:
            continue
        br = branch_at(g, block, v)
        verts |= br
        edges += [(a, b) for a, b in g.edges if a in br and b in br]
    nxt = max(g.labels) + 1
    for v in w:
        verts.add(nxt)
        edges.append((v, nxt))
        nxt += 1
    return Graph(verts, set(edges))


def star_product(m: int, n: int, r: int) -> Graph:
    """Two cliques K_m (labels 1..m) and K_n (labels m+1..m+n) joined by the
    matching {i, m+i} for i <= r."""
    if not 1 <= r <= min(m, n):
        raise ValueError(f"need 1 <= r <= min(m, n), got r={r}, m={m}, n={n}")
    xs = list(range(1, m + 1))
    ys = list(range(m + 1, m + n + 1))
    edges = list(combinations(xs, 2)) + list(combinations(ys, 2))
    edges += [(xs[i], ys[i]) for i in range(r)]
    return Graph(xs + ys, edges)


def whiskered_star_product(m: int, n: int, r: int) -> Graph:
    """Star product with whiskers at x_i and y_i for 2 <= i <= r (index 1
    stays bare)."""
    g = star_product(m, n, r)
    for i in range(2, r + 1):
        g = add_whisker(g, i)        # x_i
    for i in range(2, r + 1):
        g = add_whisker(g, m + i)    # y_i
    return g


def relabel(g: Graph, mapping: dict[int, int]) -> Graph:
    """Apply an injective partial relabeling (unmapped labels kept)."""
    def f(x):
        return mapping.get(x, x)
    verts = [f(x) for x in g.labels]
    if len(set(verts)) != g.n:
        raise ValueError("relabeling is not injective on the vertex set")
    return Graph(verts, [(f(a), f(b)) for a, b in g.edges])


def glue(g1: Graph, v: int, g2: Graph, w: int) -> Graph:
    """Union of g1 and g2 identifying g2's vertex w with g1's vertex v (the
    result keeps the label v)."""
    g1.pos(v)
    g2.pos(w)
    bad = set(g1.labels) & (set(g2.labels) - {w})
    if v != w and v in g2._pos:
        bad.add(v)
    if bad:
        raise ValueError(f"label collision outside the identified pair: {sorted(bad)}")

    def relabel(x):
        return v if x == w else x

    verts = set(g1.labels) | {relabel(x) for x in g2.labels}
    edges = list(g1.edges) + [(relabel(a), relabel(b)) for a, b in g2.edges]
    return Graph(verts, set(tuple(sorted(e)) for e in edges))


def match_star_product(g: Graph) -> Optional[tuple[int, int, int]]:
    """Recognize K_m *_r K_n up to relabeling; returns (m, n, r) with m >= n,
    or None.  The complement of a star product is bipartite with the two
    cliques as sides, and the cross edges of g form a nonempty matching."""
    n = g.n
    if n < 2 or not g.is_connected:
        return None
    comp_nbr = [(~g.nbr[i]) & g.full_mask & ~(1 << i) for i in range(n)]
    # 2-color the complement; free choice per complement component
    color = [-1] * n
    comps = []
    for s in range(n):
        if color[s] != -1:
            continue
        comp = [s]
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            m = comp_nbr[u]
            while m:
                b = m & -m
                m ^= b
                j = b.bit_length() - 1
                if color[j] == -1:
                    color[j] = color[u] ^ 1
                    comp.append(j)
                    queue.append(j)
                elif color[j] == color[u]:
                    return None  # complement not bipartite
        comps.append(comp)
    for flips in range(1 << len(comps)):
        side = [0] * n
        for ci, comp in enumerate(comps):
            f = flips >> ci & 1
            for u in comp:
                side[u] = color[u] ^ f
        x = [i for i in range(n) if side[i] == 0]
        y = [i for i in range(n) if side[i] == 1]
        if not x or not y:
            continue
        if any(not g.nbr[a] >> b & 1 for a, b in combinations(x, 2)):
            continue
        if any(not g.nbr[a] >> b & 1 for a, b in combinations(y, 2)):
            continue
        ymask = sum(1 << i for i in y)
        cross = [(g.nbr[a] & ymask).bit_count() for a in x]
        xmask = sum(1 << i for i in x)
        cross_y = [(g.nbr[b] & xmask).bit_count() for b in y]
        if max(cross) > 1 or max(cross_y) > 1:
            continue
        r = sum(cross)
        if r >= 1:
            m_, n_ = max(len(x), len(y)), min(len(x), len(y))
            return (m_, n_, r)
    return None


_CORPUS_EDGES = {
    # G: strongly unmixed, Cohen-Macaulay
    "fig1a_G": [(1, 3), (1, 4), (1, 7), (2, 3), (2, 4), (2, 6), (2, 8),
                (3, 5), (3, 6), (3, 9), (4, 5), (5, 6)],
    # H: bipartite accessible
    "fig1b_H": [(1, 2), (1, 4), (2, 3), (3, 4), (3, 5), (4, 6)],
    # L: glued so that unmixedness fails
    "fig2a_L": [(1, 7), (1, 3), (1, 4), (2, 3), (2, 4), (2, 6), (2, 8),
                (3, 5), (3, 6), (3, 9), (4, 5), (5, 6),
                (7, 10), (10, 11), (1, 11), (11, 12)],
    # F: glued so that strong unmixedness survives
    "fig2b_F": [(1, 7), (1, 3), (1, 4), (2, 3), (2, 4), (2, 6), (2, 8),
                (3, 5), (3, 6), (3, 9), (4, 5), (5, 6),
                (9, 10), (10, 11), (3, 11), (9, 12)],
    # strongly 3-cut-connected graph with 3 cut vertices, 17 cutsets
    "fig3": [(1, 2), (1, 5), (1, 4), (1, 8), (2, 3), (2, 4), (2, 7), (2, 9),
             (3, 5), (3, 6), (3, 7), (3, 10), (4, 5), (5, 7), (6, 7)],
    # whiskered K3 star K3 (planar)
    "fig4": [(1, 2), (1, 3), (1, 7), (1, 4), (2, 3), (2, 9), (2, 5),
             (3, 6), (4, 5), (4, 6), (5, 6), (5, 10), (4, 8)],
    # five-block showcase graph
    "fig5": [(1, 2), (2, 3), (2, 5), (3, 4), (4, 5), (5, 6), (5, 7), (5, 10),
             (6, 10), (6, 7), (7, 9), (7, 13), (8, 9), (8, 13), (9, 10),
             (9, 13), (10, 11), (10, 12), (10, 13), (11, 12), (13, 14),
             (13, 17), (14, 15), (15, 17), (13, 16), (14, 16), (17, 18),
             (17, 20), (17, 21), (18, 19), (18, 21), (18, 23), (19, 20),
             (19, 22), (19, 24), (20, 22), (20, 25), (21, 22)],
}


def paper_corpus() -> dict[str, Graph]:
    """The fixed example graphs, with their original labels."""
    return {name: Graph.from_edges(edges) for name, edges in _CORPUS_EDGES.items()}
