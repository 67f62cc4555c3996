"""Cutset families, combinatorial primary decomposition, and unmixedness.

A set T is a cutset when every t in T is a cut vertex of the graph minus the
other members.  Equivalently (and this is what the enumeration uses) every
t in T has neighbors in at least two distinct components of G\\T.  Free
vertices never occur in cutsets, so enumeration only ranges over subsets of
the non-free vertices, component by component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator, Optional

from . import kernels
from .graph import Graph

DEFAULT_SUBSET_BUDGET = 24


class CutsetBudgetError(RuntimeError):
    """Raised when the non-free vertex count exceeds the enumeration budget."""

    def __init__(self, candidates: int, budget: int):
        self.candidates = candidates
        self.budget = budget
        super().__init__(
            f"cutset enumeration over 2^{candidates} candidate subsets "
            f"exceeds budget 2^{budget}")


@dataclass(frozen=True)
class CutSet:
    members: frozenset[int]
    component_count: int

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


class CutSetFamily:
    """The family of all cutsets of a graph, keyed by member set."""

    def __init__(self, graph: Graph, cutsets: dict[frozenset[int], CutSet]):
        self.graph = graph
        self._by_members = cutsets

    def __contains__(self, members) -> bool:
        return frozenset(members) in self._by_members

    def __len__(self) -> int:
        return len(self._by_members)

    def __iter__(self) -> Iterator[CutSet]:
        # deterministic: by (size, lexicographic members)
        return iter(sorted(self._by_members.values(),
                           key=lambda c: (len(c.members), c.sorted_members())))

    def get(self, members) -> Optional[CutSet]:
        return self._by_members.get(frozenset(members))

    def member_sets(self) -> set[frozenset[int]]:
        return set(self._by_members)


def is_cutset(g: Graph, t) -> bool:
    """The cut point property, via the two-component characterization."""
    tset = frozenset(t)
    tmask = g.mask_of(tset)
    alive = g.full_mask & ~tmask
    from .graph import mask_components
    comps = mask_components(list(g.nbr), alive)
    rest = tmask
    while rest:
        b = rest & -rest
        rest ^= b
        nb = g.nbr[b.bit_length() - 1] & alive
        if sum(1 for c in comps if nb & c) < 2:
            return False
    return True


def _enumerate_component(g: Graph, comp_mask: int, budget: int) -> list[tuple[int, int]]:
    cand = [i for i in range(g.n)
            if comp_mask >> i & 1 and not g.free_vertex_mask >> i & 1]
    if len(cand) > budget:
        raise CutsetBudgetError(len(cand), budget)
    return kernels.enumerate_cutset_masks(list(g.nbr), comp_mask, cand)


def enumerate_cutsets(g: Graph, budget: int = DEFAULT_SUBSET_BUDGET) -> CutSetFamily:
    """Enumerate the full cutset family with per-cutset component counts.

    Disconnected graphs are enumerated per component and combined by
    cartesian union (component counts add)."""
    per_comp = [_enumerate_component(g, cm, budget) for cm in g.component_masks]
    cutsets: dict[frozenset[int], CutSet] = {}
    for combo in product(*per_comp) if per_comp else [()]:
        tmask = 0
        total = 0
        for m, c in combo:
            tmask |= m
            total += c
        members = g.labels_of(tmask)
        cutsets[members] = CutSet(members, total)
    if not per_comp:
        cutsets[frozenset()] = CutSet(frozenset(), 0)
    return CutSetFamily(g, cutsets)


@lru_cache(maxsize=500_000)
def _cached_family(g: Graph) -> CutSetFamily:
    return enumerate_cutsets(g)


def cached_family(g: Graph, use_cache: bool = True) -> CutSetFamily:
    return _cached_family(g) if use_cache else enumerate_cutsets(g)


def clear_caches() -> None:
    _cached_family.cache_clear()


@dataclass(frozen=True)
class PrimeComponent:
    """Combinatorial description of one minimal prime: killed variables for
    T, one clique support per component of G\\T, and its height."""

    killed: frozenset[int]
    clique_supports: tuple[frozenset[int], ...]
    height: int


@dataclass
class DecompositionReport:
    components: list[PrimeComponent]
    min_height: int
    max_height: int
    unmixed: bool
    witness: Optional[CutSet] = None


def primary_decomposition(g: Graph, budget: int = DEFAULT_SUBSET_BUDGET) -> DecompositionReport:
    family = enumerate_cutsets(g, budget)
    n = g.n
    comps = []
    witness = None
    base = n - g.component_count()
    for cs in family:
        supports = tuple(sorted((frozenset(p) for p in
                                 g.delete(cs.members).connected_components()),
                                key=sorted))
        height = n + len(cs.members) - len(supports)
        comps.append(PrimeComponent(cs.members, supports, height))
        if witness is None and height != base:
            witness = cs
    heights = [c.height for c in comps]
    lo, hi = min(heights), max(heights)
    return DecompositionReport(comps, lo, hi, lo == hi, witness)


def is_unmixed(g: Graph, budget: int = DEFAULT_SUBSET_BUDGET,
               use_cache: bool = True) -> tuple[bool, Optional[CutSet]]:
    """Unmixedness: every cutset T has c(T) = |T| + c.  The witness is the
    first violating cutset in (size, lex) order."""
    family = cached_family(g) if use_cache and budget == DEFAULT_SUBSET_BUDGET \
        else enumerate_cutsets(g, budget)
    c = g.component_count()
    for cs in family:
        if cs.component_count != len(cs.members) + c:
            return False, cs
    return True, None


def cutsets_of_glued(g1: Graph, g2: Graph, v: int,
                     budget: int = DEFAULT_SUBSET_BUDGET) -> CutSetFamily:
    """Cutset family of g1 union g2 glued at the single shared vertex v,
    assembled from the four families of the pieces and the pieces minus v
    rather than by direct enumeration."""
    shared = set(g1.labels) & set(g2.labels)
    if shared != {v}:
        raise ValueError(f"graphs must share exactly the vertex {v}, got {sorted(shared)}")
    glued = Graph(set(g1.labels) | set(g2.labels),
                  list(g1.edges) + list(g2.edges))
    f1 = enumerate_cutsets(g1, budget)
    f2 = enumerate_cutsets(g2, budget)
    f1v = enumerate_cutsets(g1.delete([v]), budget)
    f2v = enumerate_cutsets(g2.delete([v]), budget)
    n1 = g1.neighbors(v)
    n2 = g2.neighbors(v)
    member_sets: set[frozenset[int]] = set()
    for s1 in f1.member_sets():
        if v in s1:
            continue
        for s2 in f2.member_sets():
            if v not in s2:
                member_sets.add(s1 | s2)  # class A
    for s2 in f2.member_sets():
        if v in s2:
            for t1 in f1v.member_sets():
                member_sets.add(t1 | s2)  # class B
    for s1 in f1.member_sets():
        if v in s1:
            for t2 in f2v.member_sets():
                member_sets.add(s1 | t2)  # class C
    for t1 in f1v.member_sets():
        if n1 <= t1:
            continue
        for t2 in f2v.member_sets():
            if n2 <= t2:
                continue
            member_sets.add(t1 | t2 | {v})  # class D
    cutsets = {}
    for members in member_sets:
        cutsets[members] = CutSet(members, glued.count_components_without(members))
    return CutSetFamily(glued, cutsets)


def cutsets_after_clique_close(family: CutSetFamily, v: int) -> CutSetFamily:
    """Family of G_v from the family of G: keep the cutsets avoiding v and
    recompute component counts on G_v."""
    gv = family.graph.clique_close(v)
    cutsets = {}
    for cs in family:
        if v in cs.members:
            continue
        cutsets[cs.members] = CutSet(cs.members,
                                     gv.count_components_without(cs.members))
    return CutSetFamily(gv, cutsets)
