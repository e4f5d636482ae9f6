"""Graph ingestion and the report formats: edge list, versioned JSON, DOT."""

from __future__ import annotations

import json
import re

from .complexes import complex_parts
from .cutsets import enumerate_cutsets, sorted_cutsets, sort_key
from .errors import InputError, ParseError
from .graph_core import Graph
from .hypertree import build_hypertree

REPORT_SCHEMA = "tricut-report"
REPORT_VERSION = 1
# optional comment naming the vertices in id order; plain readers skip it
LABEL_DIRECTIVE = "# vertices: "
_INT = re.compile(r"[+-]?\d+")


def parse_graph(text: str) -> Graph:
    """Edge list ("n m" then m lines "u v", '#' comments) or the JSON graph schema."""
    if text.lstrip().startswith("{"):
        return _parse_json_graph(text)
    return _parse_edge_list(text)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    for t in tokens:
        if not _INT.fullmatch(t):
            raise ParseError(f"expected integers, got {t!r}", lineno)
    return [int(t) for t in tokens]


def _parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    labels = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.startswith(LABEL_DIRECTIVE) and header is None:
            labels = raw[len(LABEL_DIRECTIVE):].split()
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two fields, got {len(tokens)}", lineno)
        a, b = _ints(tokens, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("vertex and edge counts must be non-negative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError(f"loop at vertex {a}", lineno)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {a} {b} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((a, b))
    if header is None:
        raise ParseError("empty input: missing 'n m' header")
    if len(edges) != header[1]:
        raise ParseError(f"header announces {header[1]} edges, found {len(edges)}")
    if labels is not None and len(labels) != header[0]:
        raise ParseError(f"vertex name line lists {len(labels)} names for {header[0]} vertices")
    try:
        return Graph(header[0], edges, labels)
    except InputError as e:
        raise ParseError(str(e)) from None


def _parse_json_graph(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from None
    if isinstance(data, dict) and "graph" in data:
        data = data["graph"]
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ParseError("JSON graph needs keys 'n' and 'edges'")
    n, raw = data["n"], data["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(raw, list):
        raise ParseError("'n' must be an integer and 'edges' a list")
    edges = []
    seen = set()
    for k, e in enumerate(raw):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"edge #{k} is not a pair of integers")
        a, b = e
        if a == b:
            raise ParseError(f"edge #{k}: loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"edge #{k}: duplicate edge {a} {b}")
        seen.add(key)
        edges.append((a, b))
    labels = data.get("labels")
    try:
        return Graph(n, edges, labels)
    except InputError as e:
        raise ParseError(str(e)) from None


def format_edge_list(g: Graph) -> str:
    lines = []
    if g.labels is not None:
        lines.append(LABEL_DIRECTIVE + " ".join(g.labels))
    lines.append(f"{g.n} {len(g.edges)}")
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def _vs(vs) -> list[int]:
    return sorted(vs)


def analysis_report(g: Graph) -> dict:
    """The full decomposition as plain JSON-ready data, in deterministic order."""
    cutsets = sorted_cutsets(enumerate_cutsets(g))
    h = build_hypertree(g)
    complexes = []
    part_index = []
    for c in h.nodes:
        parts = complex_parts(g, c)
        part_index.append({p.vertices: k for k, p in enumerate(parts)})
        complexes.append(
            {
                "kind": c.kind.value,
                "members": [_vs(m) for m in c.members],
                "boundaries": [_vs(b) for b in sorted(c.boundaries, key=sort_key)],
                "parts": [
                    {
                        "vertices": _vs(p.vertices),
                        "boundary": _vs(p.boundary),
                        "interior": _vs(p.interior),
                        "neighborhood": _vs(p.neighborhood),
                    }
                    for p in parts
                ],
            }
        )
    belongs = []
    for (i, j), a in sorted(h.table.items()):
        belongs.append([i, j, None if a is None else part_index[i][a]])
    graph = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        graph["labels"] = list(g.labels)
    return {
        "schema": REPORT_SCHEMA,
        "version": REPORT_VERSION,
        "graph": graph,
        "cutsets": [_vs(c) for c in cutsets],
        "complexes": complexes,
        "hypertree": {
            "nodes": list(range(len(h.nodes))),
            "hyperedges": [_vs(e) for e in h.hyperedges],
            "belongs": belongs,
        },
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def load_report(text: str) -> dict:
    """Parse a JSON report, checking schema name, version and top-level keys."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from None
    if not isinstance(data, dict) or data.get("schema") != REPORT_SCHEMA:
        raise ParseError("not a tricut report")
    if data.get("version") != REPORT_VERSION:
        raise ParseError(f"unsupported report version {data.get('version')!r}")
    missing = {"graph", "cutsets", "complexes", "hypertree"} - set(data)
    if missing:
        raise ParseError(f"report lacks keys: {', '.join(sorted(missing))}")
    return data


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def format_dot(g: Graph) -> str:
    """The hypertree: one node per complex, one labeled cluster node per hyperedge."""
    h = build_hypertree(g)
    out = ["graph hypertree {", "  node [shape=box, fontname=monospace];"]
    for i, c in enumerate(h.nodes):
        members = "\n".join("{" + ",".join(g.label(v) for v in sorted(m)) + "}" for m in c.members[:6])
        if len(c.members) > 6:
            members += f"\n... {len(c.members) - 6} more"
        label = f"C{i} {c.kind.value}\n{members}"
        out.append(f"  c{i} [label={_dot_id(label)}];")
    for k, e in enumerate(h.hyperedges):
        out.append(f"  h{k} [shape=ellipse, style=dashed, label={_dot_id(f'H{k}')}];")
        for i in sorted(e):
            out.append(f"  h{k} -- c{i};")
    out.append("}")
    return "\n".join(out) + "\n"


def format_summary(g: Graph) -> str:
    cutsets = sorted_cutsets(enumerate_cutsets(g))
    h = build_hypertree(g)
    name = lambda vs: "{" + ",".join(g.label(v) for v in sorted(vs)) + "}"
    lines = [f"graph: {g.n} vertices, {len(g.edges)} edges", f"cutsets: {len(cutsets)}", f"complexes: {len(h.nodes)}"]
    for i, c in enumerate(h.nodes):
        lines.append(f"  C{i} {c.kind.value}: " + " ".join(name(m) for m in c.members))
    lines.append(f"hyperedges: {len(h.hyperedges)}")
    for e in h.hyperedges:
        lines.append("  " + " ".join(f"C{i}" for i in sorted(e)))
    return "\n".join(lines) + "\n"
