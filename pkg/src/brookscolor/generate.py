"""Random instance generators for tests and the CLI.

All generators take an explicit random.Random so runs are reproducible.
"""

from __future__ import annotations

import random
from typing import Optional

from .core import FiniteGraph
from .basic import find_clique
from .gadgets import InjectionPair


def is_connected(g: FiniteGraph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def random_regular(n: int, d: int, rng: random.Random,
                   max_tries: int = 50000) -> FiniteGraph:
    """Uniform-ish d-regular simple graph via the pairing model: d stubs
    per vertex, matched at random; rejected on loops or repeated edges."""
    if n * d % 2:
        raise ValueError("n*d must be even")
    if d >= n:
        raise ValueError("need d < n")
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return FiniteGraph.from_edges(n, sorted(edges))
    raise RuntimeError(f"no simple {d}-regular pairing found in {max_tries} tries")


def random_regular_clique_free(n: int, d: int, rng: random.Random,
                               connected: bool = True,
                               max_tries: int = 50000) -> FiniteGraph:
    """Random d-regular graph with no (d+1)-clique (and connected unless
    told otherwise), by rejection sampling."""
    for _ in range(max_tries):
        g = random_regular(n, d, rng, max_tries=max_tries)
        if connected and not is_connected(g):
            continue
        if find_clique(g, d + 1) is None:
            return g
    raise RuntimeError("rejection sampling failed")


def random_cubic_k4_free(n: int, rng: random.Random) -> FiniteGraph:
    """Random connected 3-regular graph with no 4-clique."""
    return random_regular_clique_free(n, 3, rng)


def random_max_degree_graph(n: int, d: int, rng: random.Random,
                            edge_prob: float = 0.5,
                            max_tries: int = 1000) -> FiniteGraph:
    """Random graph with max degree <= d and no (d+1)-clique."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(max_tries):
        rng.shuffle(pairs)
        deg = [0] * n
        edges = []
        for u, v in pairs:
            if deg[u] < d and deg[v] < d and rng.random() < edge_prob:
                deg[u] += 1
                deg[v] += 1
                edges.append((u, v))
        g = FiniteGraph.from_edges(n, edges)
        if find_clique(g, d + 1) is None:
            return g
    raise RuntimeError("rejection sampling failed")


def random_circle_tree(k: int, rng: random.Random, min_len: int = 3,
                       max_len: int = 9):
    """Glue k random circles into a circle-tree.

    Returns (graph, circles) where circles is the list of vertex tuples in
    gluing order; each new circle hangs off a random degree-2 vertex of the
    part built so far by a single bridge edge.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    lengths = [rng.randint(min_len, max_len) for _ in range(k)]
    edges = []
    circles = []
    free = []            # degree-2 vertices available as gluing points
    next_id = 0
    for i, length in enumerate(lengths):
        ring = list(range(next_id, next_id + length))
        next_id += length
        for j in range(length):
            edges.append((ring[j], ring[(j + 1) % length]))
        if i > 0:
            x = free.pop(rng.randrange(len(free)))
            y = rng.choice(ring)
            edges.append((min(x, y), max(x, y)))
            ring_free = [v for v in ring if v != y]
        else:
            ring_free = list(ring)
        free.extend(ring_free)
        circles.append(tuple(ring))
    return FiniteGraph.from_edges(next_id, edges), circles


def perturb_non_circle_tree(g: FiniteGraph, rng: random.Random) -> FiniteGraph:
    """Break a circle-tree minimally so recognition must reject it.

    Either adds a pendant degree-1 vertex to a degree-2 vertex, or a chord
    between two non-adjacent degree-2 vertices (which welds two circles, or
    splits one into a theta block, neither of which is a circle).
    """
    deg2 = [v for v in range(g.n) if g.degree(v) == 2]
    chords = [(u, v) for i, u in enumerate(deg2) for v in deg2[i + 1:]
              if not g.has_edge(u, v)]
    if chords and rng.random() < 0.5:
        u, v = rng.choice(chords)
        return FiniteGraph.from_edges(g.n, list(g.edges()) + [(u, v)])
    x = rng.choice(deg2)
    return FiniteGraph.from_edges(g.n + 1, list(g.edges()) + [(x, g.n)])


def random_injection_pair(rng: random.Random, max_len: int = 6,
                          horizon: int = 12) -> InjectionPair:
    """Random disjoint-range injection prefixes below the horizon."""
    columns = list(range(horizon))
    rng.shuffle(columns)
    nf = rng.randint(0, min(max_len, horizon))
    ng = rng.randint(0, min(max_len, horizon - nf))
    return InjectionPair(tuple(columns[:nf]),
                         tuple(columns[nf:nf + ng]), horizon)
