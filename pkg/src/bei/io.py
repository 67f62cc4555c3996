"""Parsers, serializers, and the analysis report object.

Edge-list format: '#' comments; an optional first line with a single integer
n declaring vertices 1..n; then one edge per line "u v" (positive integer
labels) or a single integer for an isolated vertex.  graph6 is the standard
6-bit ASCII encoding, labels 1..n.
"""

from __future__ import annotations

import json
import time
from importlib import resources
from typing import Optional

from .cutsets import enumerate_cutsets, is_unmixed
from .graph import Graph


class ParseError(ValueError):
    pass


def parse_edge_list(text: str) -> Graph:
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    first = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            try:
                v = int(parts[0])
            except ValueError:
                raise ParseError(f"line {lineno}: expected an integer, got {line!r}")
            if first:
                verts |= set(range(1, v + 1))  # vertex-count header
            else:
                verts.add(v)
        elif len(parts) == 2:
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed edge {line!r}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            e = (min(u, v), max(u, v))
            edges.add(e)  # duplicates silently deduped
            verts |= {u, v}
        else:
            raise ParseError(f"line {lineno}: expected 'u v' or 'v', got {line!r}")
        first = False
    return Graph(verts, sorted(edges))


def serialize_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges]
    touched = {x for e in g.edges for x in e}
    lines += [str(v) for v in g.labels if v not in touched]
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> list[Graph]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">>graph6<<"):
            line = line[len(">>graph6<<"):]
            if not line:
                continue
        out.append(_decode_graph6(line, lineno))
    return out


def _decode_graph6(s: str, lineno: int) -> Graph:
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ParseError(f"line {lineno}: invalid graph6 byte")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ParseError(f"line {lineno}: graph6 size field too large")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"line {lineno}: truncated graph6 record "
                         f"(need {need} bytes, got {len(body)})")
    bits = []
    for b in body:
        for k in range(5, -1, -1):
            bits.append(b >> k & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph(range(1, n + 1), edges)


def encode_graph6(g: Graph) -> str:
    """Encode on labels mapped to 0..n-1 in sorted order."""
    n = g.n
    if n > 62:
        raise ValueError("encoder only handles n <= 62")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(g.labels[i], g.labels[j]) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def fixture_path(name: str):
    """Path to a shipped data fixture (e.g. 'fig3.edges', 'connected7.g6')."""
    return resources.files("bei.data").joinpath(name)


def load_fixture_graph(name: str) -> Graph:
    return parse_edge_list(fixture_path(name).read_text())


PROP_NAMES = ("unmixed", "accessible", "su", "cm")


def analysis_report(g: Graph, props: list[str], include_cutsets: bool = False,
                    cutset_limit: int = 10_000,
                    deadline: Optional[float] = None) -> dict:
    """The single report object every output renders from."""
    from . import properties
    t0 = time.monotonic()
    dec = g.blocks()
    report: dict = {
        "graph": {
            "n": g.n,
            "m": g.m,
            "components": len(g.component_masks),
            "cut_vertices": sorted(dec.cut_vertices),
            "blocks": [sorted(b) for b in dec.blocks],
        },
        "verdicts": {},
    }
    family = enumerate_cutsets(g)
    if include_cutsets or len(family) <= cutset_limit:
        report["cutsets"] = [
            {"members": list(cs.sorted_members()), "components": cs.component_count}
            for cs in family]
    else:
        by_size: dict[int, int] = {}
        for cs in family:
            by_size[len(cs.members)] = by_size.get(len(cs.members), 0) + 1
        report["cutsets_summary"] = {
            "total": len(family),
            "by_size": {str(k): v for k, v in sorted(by_size.items())}}
    for p in props:
        if p == "unmixed":
            ok, wit = is_unmixed(g)
            report["verdicts"]["unmixed"] = {
                "value": ok,
                "witness": sorted(wit.members) if wit else None,
                "witness_components": wit.component_count if wit else None}
        elif p == "accessible":
            ok, cert = properties.is_accessible(g)
            report["verdicts"]["accessible"] = {"value": ok,
                                                "certificate": cert.to_dict()}
        elif p == "su":
            ok, trace = properties.is_strongly_unmixed(g, deadline=deadline)
            report["verdicts"]["strongly_unmixed"] = {"value": ok,
                                                      "trace": trace.to_dict()}
        elif p == "cm":
            report["verdicts"]["cm"] = properties.cm_verdict(g, deadline=deadline).to_dict()
        elif p.startswith("rcut="):
            r = int(p.split("=", 1)[1])
            report["verdicts"][f"rcut_{r}"] = {
                "r_cut_connected": properties.is_r_cut_connected(g, r),
                "strongly_r_cut_connected": properties.is_strongly_r_cut_connected(g, r)}
        else:
            raise ValueError(f"unknown property {p!r}")
    report["elapsed_s"] = round(time.monotonic() - t0, 6)
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def render_text(report: dict) -> str:
    g = report["graph"]
    lines = [f"graph: n={g['n']} m={g['m']} components={g['components']}",
             f"cut vertices: {g['cut_vertices']}",
             f"blocks: {g['blocks']}"]
    if "cutsets" in report:
        lines.append(f"cutsets ({len(report['cutsets'])}):")
        for cs in report["cutsets"]:
            lines.append(f"  T={cs['members']} c(T)={cs['components']}")
    elif "cutsets_summary" in report:
        s = report["cutsets_summary"]
        lines.append(f"cutsets: {s['total']} (by size: {s['by_size']})")
    for name, v in report.get("verdicts", {}).items():
        if isinstance(v, dict) and "value" in v:
            lines.append(f"{name}: {v['value']}")
            if v.get("witness"):
                lines.append(f"  witness: {v['witness']} "
                             f"(components={v['witness_components']})")
        else:
            lines.append(f"{name}: {v}")
    return "\n".join(lines) + "\n"
