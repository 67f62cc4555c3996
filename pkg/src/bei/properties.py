"""Graded predicates with replayable certificates: accessibility, the
strongly-unmixed recursion, r-cut-connectivity, block classification, and
the assembled Cohen-Macaulay verdict.

The strongly-unmixed recursion follows the definition: all connected
components complete, or unmixed with some cut vertex v whose three derived
graphs G\\v, G_v, G_v\\v are all strongly unmixed.  Disconnected graphs are
reduced component-wise (the predicates are component-wise by construction),
and verdicts are memoized on the exact labeled edge-set key.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .cutsets import CutSet, cached_family, is_unmixed
from .graph import Graph


class BudgetExceeded(RuntimeError):
    """Per-call wall clock budget ran out."""


@dataclass
class AccessibilityCertificate:
    verdict: bool
    # nonempty cutset -> the removed element t with T\{t} still a cutset
    chain: dict[frozenset[int], int] = field(default_factory=dict)
    failing: Optional[frozenset[int]] = None
    unmixed_witness: Optional[CutSet] = None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "chain": {",".join(map(str, sorted(k))): t
                      for k, t in sorted(self.chain.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))},
            "failing": sorted(self.failing) if self.failing is not None else None,
            "unmixed_witness": sorted(self.unmixed_witness.members)
            if self.unmixed_witness else None,
        }


def is_accessible(g: Graph, use_cache: bool = True) -> tuple[bool, AccessibilityCertificate]:
    """Unmixed and every nonempty cutset T has some t with T\\{t} a cutset."""
    unm, wit = is_unmixed(g, use_cache=use_cache)
    if not unm:
        return False, AccessibilityCertificate(False, unmixed_witness=wit)
    family = cached_family(g, use_cache)
    members = family.member_sets()
    cert = AccessibilityCertificate(True)
    for t in sorted(members, key=lambda s: (len(s), sorted(s))):
        if not t:
            continue
        for x in sorted(t):
            if t - {x} in members:
                cert.chain[t] = x
                break
        else:
            return False, AccessibilityCertificate(False, failing=t)
    return True, cert


@dataclass
class SUNode:
    """One node of the strongly-unmixed recursion trace."""

    verdict: bool
    kind: str  # complete_components | components | cut_vertex | not_unmixed | no_cut_vertex
    graph_key: tuple
    vertex: Optional[int] = None
    children: tuple["SUNode", ...] = ()
    witness: Optional[CutSet] = None
    tried: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        d = {"verdict": self.verdict, "kind": self.kind}
        if self.vertex is not None:
            d["cut_vertex"] = self.vertex
        if self.witness is not None:
            d["witness"] = sorted(self.witness.members)
        if self.tried:
            d["tried"] = list(self.tried)
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d


_su_memo: dict[tuple, tuple[bool, SUNode]] = {}


def clear_memo() -> None:
    _su_memo.clear()


def _all_components_complete(g: Graph) -> bool:
    for cm in g.component_masks:
        k = cm.bit_count()
        rest = cm
        while rest:
            b = rest & -rest
            rest ^= b
            i = b.bit_length() - 1
            if ((g.nbr[i] & cm) | b).bit_count() != k:
                return False
    return True


def is_strongly_unmixed(g: Graph, use_memo: bool = True,
                        deadline: Optional[float] = None) -> tuple[bool, SUNode]:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("strongly-unmixed recursion ran out of time")
    key = g.key
    if use_memo and key in _su_memo:
        return _su_memo[key]

    if _all_components_complete(g):
        res = (True, SUNode(True, "complete_components", key))
    elif len(g.component_masks) > 1:
        children = []
        ok = True
        for comp in g.connected_components():
            v, node = is_strongly_unmixed(g.induced(comp), use_memo, deadline)
            children.append(node)
            if not v:
                ok = False
                break
        res = (ok, SUNode(ok, "components", key, children=tuple(children)))
    else:
        unm, wit = is_unmixed(g, use_cache=use_memo)
        if not unm:
            res = (False, SUNode(False, "not_unmixed", key, witness=wit))
        else:
            res = None
            tried = []
            for v in sorted(g.cut_vertices()):
                tried.append(v)
                gv = g.clique_close(v)
                children = []
                ok = True
                for child in (g.delete([v]), gv, gv.delete([v])):
                    cv, node = is_strongly_unmixed(child, use_memo, deadline)
                    children.append(node)
                    if not cv:
                        ok = False
                        break
                if ok:
                    res = (True, SUNode(True, "cut_vertex", key, vertex=v,
                                        children=tuple(children)))
                    break
            if res is None:
                res = (False, SUNode(False, "no_cut_vertex", key,
                                     tried=tuple(tried)))
    if use_memo:
        _su_memo[key] = res
    return res


def replay_su_trace(g: Graph, node: SUNode) -> bool:
    """Re-derive each child graph and re-check leaf conditions; returns True
    when the trace is consistent with the recorded verdict."""
    if node.graph_key != g.key:
        return False
    if node.kind == "complete_components":
        return node.verdict and _all_components_complete(g)
    if node.kind == "not_unmixed":
        return (not node.verdict) and not is_unmixed(g)[0]
    if node.kind == "components":
        comps = g.connected_components()
        subs = [g.induced(c) for c in comps]
        if node.verdict:
            return len(node.children) == len(subs) and all(
                replay_su_trace(s, c) for s, c in zip(subs, node.children))
        return any(not c.verdict and replay_su_trace(s, c)
                   for c in node.children for s in subs if s.key == c.graph_key)
    if node.kind == "cut_vertex":
        v = node.vertex
        if v not in g.cut_vertices() or not is_unmixed(g)[0]:
            return False
        gv = g.clique_close(v)
        subs = [g.delete([v]), gv, gv.delete([v])]
        return len(node.children) == 3 and all(
            replay_su_trace(s, c) and c.verdict
            for s, c in zip(subs, node.children))
    if node.kind == "no_cut_vertex":
        return tuple(sorted(g.cut_vertices())) == node.tried
    return False


def is_r_cut_connected(g: Graph, r: int) -> bool:
    """No cut vertex, or every component of g minus any cut vertex has at
    most r cut vertices (counted in the component subgraph); disconnected
    graphs are checked per component."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    for cv in g.cut_vertices():
        h = g.delete([cv])
        for comp in h.connected_components():
            if len(h.induced(comp).cut_vertices()) > r:
                return False
    return True


_sruniv_memo: dict[tuple, bool] = {}


def is_strongly_r_cut_connected(g: Graph, r: int, use_memo: bool = True) -> bool:
    """r-cut-connected, and recursively so after deleting any cut vertex."""
    if r < 1:
        raise ValueError("r must be a positive integer")
    key = (g.key, r)
    if use_memo and key in _sruniv_memo:
        return _sruniv_memo[key]
    ok = is_r_cut_connected(g, r)
    if ok:
        for cv in sorted(g.cut_vertices()):
            if not is_strongly_r_cut_connected(g.delete([cv]), r, use_memo):
                ok = False
                break
    if use_memo:
        _sruniv_memo[key] = ok
    return ok


BLOCK_CLASSES = ("chordal", "star_product", "strongly_3_cut_connected",
                 "traceable", "unrecognized")


def classify_block(g: Graph, block) -> str:
    """Tag a block of g with the first matching recognized class, trying the
    cheap recognizers first and the NP-hard traceability check last."""
    from .constructors import block_with_whiskers, match_star_product
    block = frozenset(block)
    b = g.induced(block)
    if b.is_chordal():
        return "chordal"
    if match_star_product(b) is not None:
        return "star_product"
    bbar = block_with_whiskers(g, block)
    ncuts = len(g.blocks().cut_vertices & block)
    if ncuts <= 3 and is_strongly_r_cut_connected(bbar, 3):
        return "strongly_3_cut_connected"
    if bbar.has_hamiltonian_path():
        return "traceable"
    return "unrecognized"


@dataclass
class CmVerdict:
    status: str  # CM | NOT_CM | UNKNOWN
    reasons: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"status": self.status, "reasons": self.reasons}


def cm_verdict(g: Graph, deadline: Optional[float] = None) -> CmVerdict:
    """CM only from proven sufficient conditions (strongly unmixed, or the
    recognized block classes with accessible whiskered blocks); NOT_CM only
    when accessibility, a proven necessary condition, fails."""
    acc, cert = is_accessible(g)
    if not acc:
        why = ("unmixedness fails" if cert.unmixed_witness is not None
               else f"cutset {sorted(cert.failing)} has no removable element")
        return CmVerdict("NOT_CM", [f"not accessible ({why}); accessibility is "
                                    "necessary for Cohen-Macaulayness"])
    try:
        su, _ = is_strongly_unmixed(g, deadline=deadline)
    except BudgetExceeded:
        su = None
    if su:
        return CmVerdict("CM", ["strongly unmixed, which implies Cohen-Macaulay"])
    from .constructors import block_with_whiskers
    reasons = ["accessible but strongly-unmixed check "
               + ("negative" if su is False else "timed out")]
    tags = []
    for block in g.blocks().blocks:
        tag = classify_block(g, block)
        if tag == "unrecognized":
            return CmVerdict("UNKNOWN", reasons + [
                f"block {sorted(block)} not in a recognized class"])
        bbar = block_with_whiskers(g, block)
        if not is_accessible(bbar)[0]:
            return CmVerdict("UNKNOWN", reasons + [
                f"whiskered block {sorted(block)} not accessible"])
        tags.append((sorted(block), tag))
    reasons += [f"block {bl}: {tag}, whiskered form accessible"
                for bl, tag in tags]
    return CmVerdict("CM", reasons + ["all blocks in recognized classes with "
                                      "accessible whiskered forms"])
