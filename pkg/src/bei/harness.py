"""Verification suites and conjecture search over graph families.

Every suite returns a SuiteReport whose violations carry enough data to
replay the check.  The one hard invariant enforced everywhere: strongly
unmixed implies accessible — a hit there fails the build, since it would
contradict a proven implication.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Optional

from .constructors import (block_with_whiskers, glue, match_star_product,
                           paper_corpus, relabel, star_product,
                           whiskered_star_product)
from .cutsets import is_unmixed
from .graph import Graph
from .properties import BudgetExceeded, is_accessible, is_strongly_unmixed

DEFAULT_BUDGET_SECS = 5.0


def budget_secs() -> float:
    return float(os.environ.get("BEI_BUDGET_SECS", DEFAULT_BUDGET_SECS))


@dataclass(frozen=True)
class FamilySpec:
    """Deterministic description of a graph family."""

    source: str  # exhaustive_connected | graph6_file | random_block_trees | star_family | corpus
    n: int = 0
    path: str = ""
    count: int = 0
    max_n: int = 0
    seed: int = 0
    r_max: int = 0

    def graphs(self) -> list[tuple[str, Graph]]:
        if self.source == "corpus":
            return sorted(paper_corpus().items())
        if self.source == "exhaustive_connected":
            return [(f"conn{n}_{i}", g)
                    for n in range(1, self.n + 1)
                    for i, g in enumerate(connected_graphs(n))]
        if self.source == "graph6_file":
            from .io import parse_graph6
            with open(self.path) as fh:
                gs = parse_graph6(fh.read())
            return [(f"g6_{i}", g) for i, g in enumerate(gs)]
        if self.source == "random_block_trees":
            gs = generate_block_trees(self.count, self.max_n, self.seed)
            return [(f"bt{self.seed}_{i}", g) for i, g in enumerate(gs)]
        if self.source == "star_family":
            out = []
            for r in range(2, self.r_max + 1):
                out.append((f"wsp_{r}_{r}_{r}", whiskered_star_product(r, r, r)))
            return out
        raise ValueError(f"unknown family source {self.source!r}")


@dataclass
class SuiteReport:
    suite: str
    examined: int = 0
    violations: list[dict] = field(default_factory=list)
    skips: list[dict] = field(default_factory=list)
    candidates: list[dict] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"suite": self.suite, "examined": self.examined,
                "passed": self.passed, "violations": self.violations,
                "skips": self.skips, "candidates": self.candidates,
                "elapsed_s": round(self.elapsed_s, 3)}


# -- exhaustive and random generators ------------------------------------

_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n <= 6 vertices up to isomorphism (labels
    1..n).  Labeled enumeration, dedup by orbit under S_n."""
    if not 1 <= n <= 6:
        raise ValueError("in-repo exhaustive generation is limited to n <= 6")
    if n == 1:
        return [Graph([1])]
    pairs = list(combinations(range(n), 2))
    eidx = {p: i for i, p in enumerate(pairs)}
    # per permutation: where each edge bit moves
    perm_maps = []
    for p in permutations(range(n)):
        perm_maps.append([eidx[tuple(sorted((p[a], p[b])))] for a, b in pairs])
    ne = len(pairs)
    seen: set[int] = set()
    out = []
    for mask in range(1 << ne):
        if mask in seen:
            continue
        g = Graph(range(1, n + 1),
                  [(a + 1, b + 1) for k, (a, b) in enumerate(pairs) if mask >> k & 1])
        if not g.is_connected:
            continue
        out.append(g)
        for pm in perm_maps:
            img = 0
            for k in range(ne):
                if mask >> k & 1:
                    img |= 1 << pm[k]
            seen.add(img)
    assert len(out) == _CONNECTED_COUNTS[n]
    return out


def connected_graphs_upto(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in connected_graphs(k)]


def generate_block_trees(count: int, max_n: int, seed: int) -> list[Graph]:
    """Random connected graphs whose block graph is a tree, built by gluing
    small 2-connected (or K2) pieces at single vertices."""
    rng = random.Random(seed)
    cores = [Graph.complete(2), Graph.complete(3), Graph.complete(4),
             Graph.complete(5), Graph.cycle(4), star_product(3, 3, 3)]
    out = []
    for _ in range(count):
        g = rng.choice([c for c in cores if c.n <= max_n])
        while True:
            fits = [c for c in cores if g.n + c.n - 1 <= max_n]
            if not fits or rng.random() < 0.2:
                break
            c = rng.choice(fits)
            v = rng.choice(g.labels)
            w = rng.choice(c.labels)
            base = max(g.labels)
            mapping = {}
            nxt = base + 1
            for x in c.labels:
                if x == w:
                    mapping[x] = v
                else:
                    mapping[x] = nxt
                    nxt += 1
            g = glue(g, v, relabel(c, mapping), v)
        out.append(g)
    return out


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Backtracking isomorphism test with degree-profile pruning (intended
    for the small graphs in this project)."""
    if a.n != b.n or a.m != b.m:
        return False
    n = a.n

    def profile(g):
        degs = [g.nbr[i].bit_count() for i in range(g.n)]
        return [(degs[i], tuple(sorted(degs[j] for j in range(g.n)
                                       if g.nbr[i] >> j & 1)))
                for i in range(g.n)]

    pa, pb = profile(a), profile(b)
    if sorted(pa) != sorted(pb):
        return False
    # map a-position -> b-position, most constrained (rarest profile) first
    from collections import Counter
    rarity = Counter(pa)
    order = sorted(range(n), key=lambda i: (rarity[pa[i]], -pa[i][0]))
    used = [False] * n
    mapping = [-1] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or pb[j] != pa[i]:
                continue
            ok = True
            for i2 in order[:k]:
                if bool(a.nbr[i] >> i2 & 1) != bool(b.nbr[j] >> mapping[i2] & 1):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
        return False

    return extend(0)


def vertex_connectivity_at_least(g: Graph, r: int) -> bool:
    """Brute force: no vertex set of size < r disconnects (or empties) g."""
    if not g.is_connected:
        return False
    if g.n <= r:
        return g.n == g.nbr[0].bit_count() + 1  # complete graphs only
    for k in range(1, r):
        for drop in combinations(g.labels, k):
            if g.count_components_without(drop) != 1:
                return False
    return True


# -- suites ---------------------------------------------------------------


def _deadline() -> float:
    return time.monotonic() + budget_secs()


def _graph_record(name: str, g: Graph) -> dict:
    return {"name": name, "n": g.n, "edges": [list(e) for e in g.edges]}


def _check_chain(name: str, g: Graph, su: bool, acc: bool, report: SuiteReport):
    if su and not acc:
        report.violations.append({
            **_graph_record(name, g), "check": "strongly_unmixed_implies_accessible",
            "expected": "accessible", "got": "not accessible"})


def verify_block_theorem(family: FamilySpec) -> SuiteReport:
    """Both directions of the block reduction: G strongly unmixed (resp.
    accessible) iff G unmixed and every block-with-whiskers is."""
    report = SuiteReport("block_theorem")
    t0 = time.monotonic()
    for name, g in family.graphs():
        report.examined += 1
        dl = _deadline()
        try:
            unm = is_unmixed(g)[0]
            acc = is_accessible(g)[0]
            su = is_strongly_unmixed(g, deadline=dl)[0]
            bars = [block_with_whiskers(g, b) for b in g.blocks().blocks]
            bars_su = all(is_strongly_unmixed(b, deadline=dl)[0] for b in bars)
            bars_acc = all(is_accessible(b)[0] for b in bars)
        except BudgetExceeded:
            report.skips.append({"name": name, "reason": "budget"})
            continue
        _check_chain(name, g, su, acc, report)
        if su != (unm and bars_su):
            report.violations.append({
                **_graph_record(name, g), "check": "block_theorem_su",
                "expected": unm and bars_su, "got": su,
                "unmixed": unm, "blocks_su": bars_su})
        if acc != (unm and bars_acc):
            report.violations.append({
                **_graph_record(name, g), "check": "block_theorem_acc",
                "expected": unm and bars_acc, "got": acc,
                "unmixed": unm, "blocks_acc": bars_acc})
    report.elapsed_s = time.monotonic() - t0
    return report


def verify_star_theorem(r_max: int,
                        extra: Iterable[tuple[int, int, int]] = ((3, 2, 2), (4, 3, 3), (5, 3, 3))
                        ) -> SuiteReport:
    """Whiskered K_r*K_r is accessible and strongly unmixed for r=2..r_max;
    whiskered K_m*_rK_n strongly unmixed for the sampled (m,n,r)."""
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    report = SuiteReport("star_theorem")
    t0 = time.monotonic()
    todo = [(f"wsp_{r}_{r}_{r}", whiskered_star_product(r, r, r), True)
            for r in range(2, r_max + 1)]
    todo += [(f"wsp_{m}_{n}_{r}", whiskered_star_product(m, n, r), False)
             for m, n, r in extra]
    for name, g, need_acc in todo:
        report.examined += 1
        try:
            su = is_strongly_unmixed(g, deadline=_deadline())[0]
        except BudgetExceeded:
            report.skips.append({"name": name, "reason": "budget"})
            continue
        acc = is_accessible(g)[0] if need_acc else None
        _check_chain(name, g, su, acc if acc is not None else True, report)
        if not su or (need_acc and not acc):
            report.violations.append({
                **_graph_record(name, g), "check": "star_theorem",
                "expected": "strongly unmixed" + (" and accessible" if need_acc else ""),
                "got": {"strongly_unmixed": su, "accessible": acc}})
    report.elapsed_s = time.monotonic() - t0
    return report


def _edge_decorations(b: Graph):
    """For a 2-connected candidate block B: every decoration that whiskers
    all vertices except the two endpoints of one edge."""
    for e in b.edges:
        g = b
        for v in b.labels:
            if v not in e:
                from .constructors import add_whisker
                g = add_whisker(g, v)
        yield e, g


def verify_regular_classification(n_max: int, r: int,
                                  graphs: Optional[list[Graph]] = None) -> SuiteReport:
    """Over r-regular r-connected non-complete blocks B with <= n_max
    vertices: if B is not a star product K_r*_rK_r then no edge decoration
    (whiskers everywhere but one edge) may be accessible."""
    if r < 2:
        raise ValueError("r must be >= 2")
    report = SuiteReport("regular_classification")
    t0 = time.monotonic()
    pool = graphs if graphs is not None else connected_graphs_upto(min(n_max, 6))
    for i, b in enumerate(pool):
        if b.n > n_max or b.n < 3:
            continue
        if any(b.nbr[j].bit_count() != r for j in range(b.n)):
            continue
        if b.m == b.n * (b.n - 1) // 2:
            continue  # complete graphs are the chordal case, not this one
        if not vertex_connectivity_at_least(b, r):
            continue
        report.examined += 1
        is_star = match_star_product(b) == (r, r, r)
        hits = []
        for e, dec in _edge_decorations(b):
            if is_accessible(dec)[0]:
                hits.append(list(e))
        if is_star and not hits:
            report.violations.append({
                **_graph_record(f"reg_{i}", b), "check": "star_block_accessible",
                "expected": "some edge decoration accessible", "got": "none"})
        if not is_star and hits:
            report.violations.append({
                **_graph_record(f"reg_{i}", b), "check": "non_star_block_inaccessible",
                "expected": "no accessible decoration", "got": hits})
    report.elapsed_s = time.monotonic() - t0
    return report


def search_conjecture(family: FamilySpec) -> SuiteReport:
    """Report accessible-but-not-strongly-unmixed graphs as candidates (a
    discovery, not a bug); fail hard on strongly-unmixed-but-not-accessible."""
    report = SuiteReport("conjecture_search")
    t0 = time.monotonic()
    for name, g in family.graphs():
        report.examined += 1
        try:
            acc, cert = is_accessible(g)
            su, trace = is_strongly_unmixed(g, deadline=_deadline())
        except BudgetExceeded:
            report.skips.append({"name": name, "reason": "budget"})
            continue
        _check_chain(name, g, su, acc, report)
        if acc and not su:
            report.candidates.append({
                **_graph_record(name, g),
                "accessibility_certificate": cert.to_dict(),
                "strongly_unmixed_trace": trace.to_dict()})
    report.elapsed_s = time.monotonic() - t0
    return report


def _sides(g: Graph, v: int) -> list[Graph]:
    """One side per component of g minus v, with v restored."""
    return [g.induced(set(c) | {v}) for c in g.delete([v]).connected_components()]


def verify_gluing_theorem(pairs: Iterable[tuple[Graph, int, Graph, int]]) -> SuiteReport:
    """For each (G, v, H, w) meeting the hypotheses (G, H, G\\v, H\\w all
    unmixed), every gluing F_ij of a side of G at v with a side of H at w
    inherits accessibility and strong unmixedness."""
    report = SuiteReport("gluing_theorem")
    t0 = time.monotonic()
    for k, (g, v, h, w) in enumerate(pairs):
        report.examined += 1
        hyp = {"G_unmixed": is_unmixed(g)[0],
               "H_unmixed": is_unmixed(h)[0],
               "G_minus_v_unmixed": is_unmixed(g.delete([v]))[0],
               "H_minus_w_unmixed": is_unmixed(h.delete([w]))[0]}
        if not all(hyp.values()):
            report.skips.append({"pair": k, "v": v, "w": w,
                                 "reason": "hypothesis_failure", "hypotheses": hyp})
            continue
        try:
            g_acc = is_accessible(g)[0]
            h_acc = is_accessible(h)[0]
            dl = _deadline()
            g_su = is_strongly_unmixed(g, deadline=dl)[0]
            h_su = is_strongly_unmixed(h, deadline=dl)[0]
            for i, gi in enumerate(_sides(g, v)):
                for j, hj in enumerate(_sides(h, w)):
                    # relabel the H side onto fresh labels, w onto v
                    base = max(gi.labels)
                    mapping, nxt = {}, base + 1
                    for x in hj.labels:
                        mapping[x] = v if x == w else nxt
                        nxt += x != w
                    fij = glue(gi, v, relabel(hj, mapping), v)
                    name = f"pair{k}_F{i}{j}"
                    f_acc = is_accessible(fij)[0]
                    f_su = is_strongly_unmixed(fij, deadline=_deadline())[0]
                    _check_chain(name, fij, f_su, f_acc, report)
                    if g_acc and h_acc and not f_acc:
                        report.violations.append({
                            **_graph_record(name, fij), "check": "gluing_accessible",
                            "expected": True, "got": False})
                    if g_su and h_su and not f_su:
                        report.violations.append({
                            **_graph_record(name, fij), "check": "gluing_strongly_unmixed",
                            "expected": True, "got": False})
        except BudgetExceeded:
            report.skips.append({"pair": k, "reason": "budget"})
    report.elapsed_s = time.monotonic() - t0
    return report
