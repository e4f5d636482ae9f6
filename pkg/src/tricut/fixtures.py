"""Canonical small graphs used as golden inputs throughout the test-suite."""

from __future__ import annotations

from .cutsets import require_analyzable
from .errors import InputError
from .graph_core import Graph


def _wheel6() -> Graph:
    names = ["p", "q1", "q2", "q3", "q4", "q5", "q6"]
    rim = [(f"q{i}", f"q{i % 6 + 1}") for i in range(1, 7)]
    spokes = [("p", f"q{i}") for i in range(1, 7)]
    return Graph.from_labeled_edges(names, spokes + rim)


def _sing1() -> Graph:
    names = ["p", "q1", "q2", "q3", "q4", "u", "v"]
    edges = "pu pv pq3 uq1 uq2 vq4 vq1 q2q3 q3q4 q1q2 q4q1"
    return Graph.from_labeled_edges(names, _split(edges, names))


def _flower1() -> Graph:
    names = ["p", "q1", "q2", "q3", "q4", "x1", "x2", "y"]
    edges = "pq1 pq2 pq3 pq4 px1 py q1q4 q2q3 x1x2 x1q1 x1q2 x2q1 x2q2 yq3 yq4"
    return Graph.from_labeled_edges(names, _split(edges, names))


def _dk4() -> Graph:
    names = [f"a{i}" for i in range(1, 5)] + [f"b{i}" for i in range(1, 5)]
    edges = []
    for side in "ab":
        for i in range(1, 5):
            for j in range(i + 1, 5):
                edges.append((f"{side}{i}", f"{side}{j}"))
    edges += [("a1", "b1"), ("a2", "b2"), ("a3", "b3")]
    return Graph.from_labeled_edges(names, edges)


def _y3() -> Graph:
    names = ["a", "b", "c"] + [f"{x}{i}" for i in range(1, 4) for x in "uvw"]
    edges = []
    for i in range(1, 4):
        u, v, w = f"u{i}", f"v{i}", f"w{i}"
        edges += [(u, v), (v, w), (u, w), ("a", u), ("b", v), ("c", w)]
    return Graph.from_labeled_edges(names, edges)


def _ladder() -> Graph:
    # without x1x2 this is a chain of three blobs joined through {y, z} and {a, b}
    names = ["x1", "l1", "l2", "y", "z", "m1", "m2", "a", "b", "x2", "r1", "r2"]
    edges = (
        "x1-l1 x1-l2 l1-l2 l1-y l1-z l2-y l2-z y-m1 z-m2 m1-m2 y-m2 z-m1 "
        "m1-a m2-b a-m2 b-m1 a-r1 a-r2 b-r1 b-r2 r1-r2 x2-r1 x2-r2 x1-x2"
    )
    return Graph.from_labeled_edges(names, [tuple(e.split("-")) for e in edges.split()])


def _split(text: str, names: list[str]) -> list[tuple[str, str]]:
    # "pq3" -> ("p", "q3"); names are matched greedily, longest first
    ordered = sorted(names, key=len, reverse=True)
    out = []
    for token in text.split():
        for a in ordered:
            if token.startswith(a) and token[len(a):] in names:
                out.append((a, token[len(a):]))
                break
        else:
            raise InputError(f"cannot split edge token {token!r}")
    return out


FIXTURES = {
    "WHEEL6": _wheel6,
    "SING1": _sing1,
    "FLOWER1": _flower1,
    "DK4": _dk4,
    "Y3": _y3,
    "LADDER": _ladder,
}


def fixture_names() -> list[str]:
    return list(FIXTURES)


def load_fixture(name: str) -> Graph:
    try:
        build = FIXTURES[name.upper()]
    except KeyError:
        raise InputError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
    g = build()
    require_analyzable(g)
    return g
