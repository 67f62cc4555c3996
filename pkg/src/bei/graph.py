"""Immutable labeled simple graphs and the structural primitives used everywhere.

Vertices are integer labels (not necessarily contiguous: deletions keep the
original labels).  Adjacency is stored as one bitmask per vertex over internal
positions 0..n-1, which makes component counting and subset tests cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional


class UnknownVertexError(KeyError):
    pass


def mask_components(nbr: list[int], alive: int) -> list[int]:
    """Connected components of the subgraph on the `alive` bit positions,
    returned as bitmasks in ascending order of lowest member."""
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= nbr[b.bit_length() - 1]
            frontier = nxt & alive & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def count_mask_components(nbr: list[int], alive: int) -> int:
    return len(mask_components(nbr, alive))


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected pieces, bridges, or isolated vertices),
    the cut vertices, and the graph on block indices joining blocks that
    share a vertex."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_graph: "Graph"


class Graph:
    """Value-semantic simple graph.  All operations return new graphs."""

    __slots__ = ("labels", "_pos", "nbr", "__dict__")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        labels = tuple(sorted(set(int(v) for v in vertices)))
        pos = {v: i for i, v in enumerate(labels)}
        nbr = [0] * len(labels)
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in pos or v not in pos:
                raise UnknownVertexError(f"edge ({u},{v}) uses an undeclared vertex")
            nbr[pos[u]] |= 1 << pos[v]
            nbr[pos[v]] |= 1 << pos[u]
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_pos", pos)
        object.__setattr__(self, "nbr", tuple(nbr))

    # -- basics ---------------------------------------------------------

    @classmethod
    def _raw(cls, labels: tuple, nbr: tuple) -> "Graph":
        """Internal fast path: labels already sorted, nbr masks consistent."""
        g = object.__new__(cls)
        object.__setattr__(g, "labels", labels)
        object.__setattr__(g, "_pos", {v: i for i, v in enumerate(labels)})
        object.__setattr__(g, "nbr", nbr)
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]],
                   isolated: Iterable[int] = ()) -> "Graph":
        edges = [tuple(e) for e in edges]
        verts = set(isolated)
        for u, v in edges:
            verts.add(u)
            verts.add(v)
        return cls(verts, edges)

    @classmethod
    def complete(cls, n: int, labels: Optional[Iterable[int]] = None) -> "Graph":
        labs = list(labels) if labels is not None else list(range(1, n + 1))
        return cls(labs, combinations(labs, 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        labs = list(range(1, n + 1))
        return cls(labs, [(labs[i], labs[(i + 1) % n]) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        labs = list(range(1, n + 1))
        return cls(labs, [(labs[i], labs[i + 1]) for i in range(n - 1)])

    @property
    def n(self) -> int:
        return len(self.labels)

    def pos(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v}") from None

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1 if self.n else 0

    def mask_of(self, vs: Iterable[int]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.pos(v)
        return m

    def labels_of(self, mask: int) -> frozenset[int]:
        out = []
        while mask:
            b = mask & -mask
            mask ^= b
            out.append(self.labels[b.bit_length() - 1])
        return frozenset(out)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i, v in enumerate(self.labels):
            m = self.nbr[i]
            while m:
                b = m & -m
                m ^= b
                j = b.bit_length() - 1
                if j > i:
                    out.append((v, self.labels[j]))
        return tuple(sorted(out))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr[self.pos(u)] >> self.pos(v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.labels_of(self.nbr[self.pos(v)])

    def degree(self, v: int) -> int:
        return self.nbr[self.pos(v)].bit_count()

    @cached_property
    def key(self) -> tuple:
        """Exact labeled memo key: vertex labels plus adjacency masks (the
        masks determine the edge set since labels are sorted)."""
        return (self.labels, self.nbr)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- components and connectivity -------------------------------------

    @cached_property
    def component_masks(self) -> tuple[int, ...]:
        return tuple(mask_components(list(self.nbr), self.full_mask))

    def connected_components(self) -> list[frozenset[int]]:
        return [self.labels_of(m) for m in self.component_masks]

    @property
    def is_connected(self) -> bool:
        return len(self.component_masks) <= 1

    def component_count(self) -> int:
        return len(self.component_masks)

    def count_components_without(self, drop: Iterable[int]) -> int:
        """Number of connected components of self minus the given vertices."""
        alive = self.full_mask & ~self.mask_of(drop)
        return count_mask_components(list(self.nbr), alive)

    @cached_property
    def cut_vertex_mask(self) -> int:
        base = len(self.component_masks)
        mask = 0
        for i in range(self.n):
            alive = self.full_mask & ~(1 << i)
            if count_mask_components(list(self.nbr), alive) > base:
                mask |= 1 << i
        return mask

    def cut_vertices(self) -> frozenset[int]:
        return self.labels_of(self.cut_vertex_mask)

    def is_cut_vertex(self, v: int) -> bool:
        return bool(self.cut_vertex_mask >> self.pos(v) & 1)

    # -- free vertices and clique closing ---------------------------------

    def is_free_vertex(self, v: int) -> bool:
        """True iff the closed neighborhood induces a complete graph."""
        i = self.pos(v)
        m = self.nbr[i]
        rest = m
        while rest:
            b = rest & -rest
            rest ^= b
            j = b.bit_length() - 1
            if m & ~self.nbr[j] & ~b:
                return False
        return True

    @cached_property
    def free_vertex_mask(self) -> int:
        m = 0
        for v in self.labels:
            if self.is_free_vertex(v):
                m |= 1 << self.pos(v)
        return m

    def free_vertices(self) -> frozenset[int]:
        return self.labels_of(self.free_vertex_mask)

    def clique_close(self, v: int) -> "Graph":
        """The graph G_v: complete the neighborhood of v into a clique."""
        i = self.pos(v)
        nv = self.nbr[i]
        extra = []
        rest = nv
        while rest:
            b = rest & -rest
            rest ^= b
            j = b.bit_length() - 1
            missing = nv & ~self.nbr[j] & ~b
            while missing:
                c = missing & -missing
                missing ^= c
                k = c.bit_length() - 1
                if k > j:
                    extra.append((self.labels[j], self.labels[k]))
        if not extra:
            return self
        nbr = list(self.nbr)
        for u, w in extra:
            nbr[self._pos[u]] |= 1 << self._pos[w]
            nbr[self._pos[w]] |= 1 << self._pos[u]
        return Graph._raw(self.labels, tuple(nbr))

    # -- subgraphs --------------------------------------------------------

    def _induced_by_mask(self, keep_mask: int) -> "Graph":
        keep = []
        m = keep_mask
        while m:
            b = m & -m
            m ^= b
            keep.append(b.bit_length() - 1)
        remap = {old: new for new, old in enumerate(keep)}
        nbr = []
        for i in keep:
            mm = self.nbr[i] & keep_mask
            nm = 0
            while mm:
                b = mm & -mm
                mm ^= b
                nm |= 1 << remap[b.bit_length() - 1]
            nbr.append(nm)
        return Graph._raw(tuple(self.labels[i] for i in keep), tuple(nbr))

    def induced(self, s: Iterable[int]) -> "Graph":
        return self._induced_by_mask(self.mask_of(set(s)))

    def delete(self, s: Iterable[int]) -> "Graph":
        return self._induced_by_mask(self.full_mask & ~self.mask_of(set(s)))

    # -- blocks -----------------------------------------------------------

    def blocks(self) -> BlockDecomposition:
        """Biconnected components via iterative Hopcroft-Tarjan; bridges are
        K2 blocks and isolated vertices singleton blocks."""
        n = self.n
        disc = [0] * n
        low = [0] * n
        timer = 1
        blocks: list[frozenset[int]] = []
        cut = set()
        for root in range(n):
            if disc[root]:
                continue
            if self.nbr[root] == 0:
                blocks.append(frozenset([self.labels[root]]))
                disc[root] = timer
                timer += 1
                continue
            estack: list[tuple[int, int]] = []
            stack = [(root, -1, self.nbr[root])]
            disc[root] = low[root] = timer
            timer += 1
            root_children = 0
            while stack:
                u, parent, todo = stack[-1]
                if todo:
                    b = todo & -todo
                    stack[-1] = (u, parent, todo ^ b)
                    w = b.bit_length() - 1
                    if not disc[w]:
                        estack.append((u, w))
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, u, self.nbr[w]))
                        if u == root:
                            root_children += 1
                    elif w != parent and disc[w] < disc[u]:
                        estack.append((u, w))
                        low[u] = min(low[u], disc[w])
                else:
                    stack.pop()
                    if parent >= 0:
                        low[parent] = min(low[parent], low[u])
                        if low[u] >= disc[parent]:
                            if parent != root:
                                cut.add(parent)
                            bverts = set()
                            while True:
                                x, y = estack.pop()
                                bverts.add(x)
                                bverts.add(y)
                                if (x, y) == (parent, u):
                                    break
                            blocks.append(frozenset(self.labels[i] for i in bverts))
            if root_children >= 2:
                cut.add(root)
        blocks.sort(key=lambda b: sorted(b))
        cut_labels = frozenset(self.labels[i] for i in cut)
        bg_edges = [(i, j) for i, j in combinations(range(len(blocks)), 2)
                    if blocks[i] & blocks[j]]
        bg = Graph(range(len(blocks)), bg_edges)
        return BlockDecomposition(tuple(blocks), cut_labels, bg)

    # -- recognizers ------------------------------------------------------

    def is_chordal(self) -> bool:
        """Maximum cardinality search; verify the resulting ordering is a
        perfect elimination ordering."""
        n = self.n
        if n == 0:
            return True
        weight = [0] * n
        order = []
        placed = 0
        inorder = [False] * n
        for _ in range(n):
            u = max((i for i in range(n) if not inorder[i]), key=lambda i: weight[i])
            inorder[u] = True
            order.append(u)
            m = self.nbr[u]
            while m:
                b = m & -m
                m ^= b
                j = b.bit_length() - 1
                if not inorder[j]:
                    weight[j] += 1
            placed += 1
        rank = {u: r for r, u in enumerate(order)}
        # reverse MCS order is a perfect elimination ordering iff chordal:
        # each vertex's earlier-visited neighbors must form a clique around
        # the latest-visited of them
        for u in order:
            prior = [w for w in range(n)
                     if self.nbr[u] >> w & 1 and rank[w] < rank[u]]
            if prior:
                v0 = max(prior, key=lambda w: rank[w])
                for w in prior:
                    if w != v0 and not (self.nbr[v0] >> w & 1):
                        return False
        return True

    def has_hamiltonian_path(self, node_budget: int = 10_000_000) -> Optional[bool]:
        """Backtracking spanning-path search; None when the node budget runs
        out (intended for desk-scale graphs only)."""
        n = self.n
        if n <= 1:
            return True
        if not self.is_connected:
            return False
        if sum(1 for i in range(n) if self.nbr[i].bit_count() == 1) > 2:
            return False
        full = self.full_mask
        nbr = self.nbr
        budget = node_budget

        def extend(u: int, visited: int) -> Optional[bool]:
            nonlocal budget
            if visited == full:
                return True
            budget -= 1
            if budget <= 0:
                return None
            rest = nbr[u] & ~visited
            # dead end if some unvisited vertex lost all unvisited neighbors
            remaining = full & ~visited
            check = remaining
            while check:
                b = check & -check
                check ^= b
                j = b.bit_length() - 1
                free_deg = (nbr[j] & remaining).bit_count()
                if free_deg == 0 and not (nbr[j] >> u & 1):
                    return False
            saw_unknown = False
            while rest:
                b = rest & -rest
                rest ^= b
                r = extend(b.bit_length() - 1, visited | b)
                if r:
                    return True
                if r is None:
                    saw_unknown = True
            return None if saw_unknown else False

        # degree-1 vertices must be endpoints
        deg1 = [i for i in range(n) if nbr[i].bit_count() == 1]
        starts = deg1 if deg1 else range(n)
        saw_unknown = False
        for s in starts:
            r = extend(s, 1 << s)
            if r:
                return True
            if r is None:
                saw_unknown = True
        return None if saw_unknown else False

    # -- decomposability --------------------------------------------------

    def split_decomposable(self) -> Optional[tuple["Graph", "Graph"]]:
        """Split at a cut vertex that is free on both sides, if one exists."""
        if not self.is_connected:
            raise ValueError("split_decomposable expects a connected graph")
        for v in sorted(self.cut_vertices()):
            i = self.pos(v)
            comps = mask_components(list(self.nbr), self.full_mask & ~(1 << i))
            # try every bipartition {first comp} vs rest, then grow: a split is
            # determined by grouping the components of G-v into two sides
            for r in range(1, len(comps)):
                for side in combinations(range(len(comps)), r):
                    m1 = 0
                    for k in side:
                        m1 |= comps[k]
                    m2 = self.full_mask & ~(1 << i) & ~m1
                    g1 = self.induced(self.labels_of(m1 | (1 << i)))
                    g2 = self.induced(self.labels_of(m2 | (1 << i)))
                    if g1.is_free_vertex(v) and g2.is_free_vertex(v):
                        return g1, g2
        return None
