"""Triconnected graph generators: wheels and random wheel growth."""

from __future__ import annotations

import random

from .errors import InputError, IntegrityError
from .graph_core import Graph, is_triconnected

CORPUS_SIZE = 200


def gen_wheel(m: int) -> Graph:
    if m < 6:
        raise InputError(f"wheel needs at least 6 rim vertices, got {m}")
    edges = [(0, i) for i in range(1, m + 1)]
    edges += [(i, i % m + 1) for i in range(1, m + 1)]
    labels = ["p"] + [f"q{i}" for i in range(1, m + 1)]
    return Graph(m + 1, edges, labels)


def gen_random_triconnected(n: int, seed: int, edge_rate: float = 0.2) -> Graph:
    """Grow a wheel on 7 vertices to ``n`` vertices by vertex splits and edge additions.

    A split replaces a vertex of degree at least 4 by two adjacent vertices,
    each keeping at least two of the old neighbours.
    """
    if n < 7:
        raise InputError(f"need at least 7 vertices, got {n}")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(7)]
    for a, b in gen_wheel(6).edges:
        adj[a].add(b)
        adj[b].add(a)
    while len(adj) < n or rng.random() < edge_rate:
        if len(adj) >= n or rng.random() < edge_rate:
            free = [(a, b) for a in range(len(adj)) for b in range(a + 1, len(adj)) if b not in adj[a]]
            if free:
                a, b = rng.choice(free)
                adj[a].add(b)
                adj[b].add(a)
                continue
            if len(adj) >= n:
                break
        big = [v for v in range(len(adj)) if len(adj[v]) >= 4]
        if not big:
            continue
        v = rng.choice(big)
        old = sorted(adj[v])
        rng.shuffle(old)
        k = rng.randint(2, len(old) - 2)
        moved = old[:k]
        w = len(adj)
        adj.append(set())
        for x in moved:
            adj[v].discard(x)
            adj[x].discard(v)
            adj[w].add(x)
            adj[x].add(w)
        adj[v].add(w)
        adj[w].add(v)
    edges = [(a, b) for a in range(len(adj)) for b in adj[a] if a < b]
    g = Graph(len(adj), edges)
    if not is_triconnected(g):
        raise IntegrityError("generator produced a graph that is not triconnected", (n, seed))
    return g


def corpus_params(size: int = CORPUS_SIZE) -> list[tuple[int, int]]:
    return [(8 + k % 6, k) for k in range(size)]


def corpus(size: int = CORPUS_SIZE) -> list[Graph]:
    return [gen_random_triconnected(n, seed) for n, seed in corpus_params(size)]
