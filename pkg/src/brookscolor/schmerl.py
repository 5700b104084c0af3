"""Counterexample machinery for the leveled-extension lemma.

The lemma in question claims: if a graph H with max degree 3 is layered
into levels Z_0, Z_1, ... from its first level, each level's boundary to
the next has at most 2 vertices, Z_0 is part of the degree-<=2 set d(H),
d(H) is contained in Z_0 plus the last level, and the last level carries 1
or 2 vertices of d(H), then every proper 3-coloring of d(H) extends to all
of H ("property A") — at least once the level count h is large enough.

This module builds, for every h, a graph satisfying all those conditions
whose degree-<=2 part still admits a non-extendable precoloring: a 6-vertex
blocker C forcing c(a) != c(b) is grafted onto a tall ladder, and the
precoloring c(a) = c(b) can never extend, no matter the height.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from .core import FiniteGraph, n_neighborhood


@dataclass
class LeveledGraph:
    """A graph together with its levels Z_0..Z_h grown from Z_0."""

    graph: FiniteGraph
    Z: tuple[tuple[int, ...], ...]
    names: dict[int, str] = field(default_factory=dict)

    @property
    def h(self) -> int:
        return len(self.Z) - 1

    def name_of(self, v: int) -> str:
        return self.names.get(v, str(v))


def d_subgraph(g: FiniteGraph) -> list[int]:
    """The degree-<=2 part d(g)."""
    return [v for v in range(g.n) if g.degree(v) <= 2]


def compute_levels(g: FiniteGraph, z0) -> tuple[tuple[int, ...], ...]:
    """Levels Z_i = N_i(Z0) - N_{i-1}(Z0); requires Z0 to reach everything."""
    levels = [tuple(sorted(z0))]
    prev = frozenset(z0)
    while True:
        cur = n_neighborhood(g, prev, 1)
        if cur == prev:
            break
        levels.append(tuple(sorted(cur - prev)))
        prev = cur
    if len(prev) != g.n:
        raise ValueError("levels do not exhaust the graph")
    return tuple(levels)


def check_lemma7_conditions(lg: LeveledGraph) -> dict[str, bool]:
    """Programmatic check of the leveled-extension lemma's hypotheses."""
    g = lg.graph
    d_set = set(d_subgraph(g))
    z0 = set(lg.Z[0])
    z_last = set(lg.Z[-1])
    out = {}
    out["max-degree-3"] = all(g.degree(v) <= 3 for v in range(g.n))
    out["levels-consistent"] = lg.Z == compute_levels(g, lg.Z[0])
    boundary_ok = True
    for i in range(len(lg.Z) - 1):
        nxt = set(lg.Z[i + 1])
        touching = [x for x in lg.Z[i]
                    if any(u in nxt for u in g.neighbors(x))]
        if len(touching) > 2:
            boundary_ok = False
    out["boundary-at-most-2"] = boundary_ok
    out["z0-in-d"] = z0 <= d_set
    out["d-in-z0-and-last"] = d_set <= z0 | z_last
    out["last-level-d-count"] = 1 <= len(d_set & z_last) <= 2
    return out


# vertex ids for the blocker C
C_A, C_P, C_Q, C_R, C_B, C_X = range(6)
C_NAMES = {C_A: "a", C_P: "p", C_Q: "q", C_R: "r", C_B: "b", C_X: "x"}


def build_C() -> FiniteGraph:
    """The 6-vertex blocker: a diamond a-p-q-r (all edges but a-r) forces
    c(a) = c(r) in any proper 3-coloring, so the tail r-b forces
    c(a) != c(b); x is a degree-1 handle on b."""
    edges = [(C_A, C_P), (C_A, C_Q), (C_P, C_Q),
             (C_Q, C_R), (C_R, C_P), (C_R, C_B), (C_B, C_X)]
    return FiniteGraph.from_edges(6, edges)


def build_apexed_ladder(h: int) -> LeveledGraph:
    """A ladder of height h with both rails tied to an apex.

    Vertices: apex g* adjacent to u_0 and w_0; rails u_0..u_h and w_0..w_h;
    rungs u_i-w_i at every row.  Z_0 = {g*}.  All lemma conditions are
    verified at build time, never assumed.
    """
    if h < 2:
        raise ValueError("need h >= 2")
    apex = 0
    u = [1 + i for i in range(h + 1)]
    w = [2 + h + i for i in range(h + 1)]
    edges = [(apex, u[0]), (apex, w[0])]
    for i in range(h):
        edges.append((u[i], u[i + 1]))
        edges.append((w[i], w[i + 1]))
    edges += [(u[i], w[i]) for i in range(h + 1)]
    g = FiniteGraph.from_edges(2 * h + 3, edges)
    names = {apex: "g*"}
    names.update({u[i]: f"u{i}" for i in range(h + 1)})
    names.update({w[i]: f"w{i}" for i in range(h + 1)})
    lg = LeveledGraph(g, compute_levels(g, [apex]), names)
    checks = check_lemma7_conditions(lg)
    if not all(checks.values()):
        bad = [k for k, v in checks.items() if not v]
        raise ValueError(f"apexed ladder violates conditions {bad}")
    return lg


def compose_CG(G: LeveledGraph) -> LeveledGraph:
    """Graft the blocker C onto a leveled graph whose Z_0 is a single
    vertex, identifying C's handle x with that vertex.

    The new first level is {a, b}; all lemma conditions survive, yet the
    composite loses property A (see has_property_A).
    """
    if len(G.Z[0]) != 1:
        raise ValueError("composition needs a singleton first level")
    apex = G.Z[0][0]
    offset = 5   # a, p, q, r, b keep ids 0..4; x merges with the apex
    c_graph = build_C()
    edges = []
    for uu, vv in c_graph.edges():
        uu = apex + offset if uu == C_X else uu
        vv = apex + offset if vv == C_X else vv
        edges.append((uu, vv))
    for uu, vv in G.graph.edges():
        edges.append((uu + offset, vv + offset))
    g = FiniteGraph.from_edges(G.graph.n + offset, edges)
    names = {i: C_NAMES[i] for i in range(5)}
    names.update({v + offset: G.name_of(v) for v in range(G.graph.n)})
    names[apex + offset] = f"x*{G.name_of(apex)}"
    lg = LeveledGraph(g, compute_levels(g, [C_A, C_B]), names)
    checks = check_lemma7_conditions(lg)
    if not all(checks.values()):
        bad = [k for k, v in checks.items() if not v]
        raise ValueError(f"composition violates conditions {bad}")
    return lg


def _extends(g: FiniteGraph, pre: dict[int, int]) -> bool:
    rest = [v for v in range(g.n) if v not in pre]
    colors = dict(pre)

    def place(i: int) -> bool:
        if i == len(rest):
            return True
        v = rest[i]
        taken = {colors[u] for u in g.adj[v] if u in colors}
        for c in range(3):
            if c not in taken:
                colors[v] = c
                if place(i + 1):
                    return True
                del colors[v]
        return False

    return place(0)


def has_property_A(g: FiniteGraph) -> tuple[bool, Optional[dict[int, int]]]:
    """Whether every proper 3-coloring of d(g) extends to g.

    Returns (True, None) or (False, witness) with a non-extendable
    precoloring of d(g).  Exhaustive; keep |d(g)| small.
    """
    d_set = d_subgraph(g)
    for combo in product(range(3), repeat=len(d_set)):
        pre = dict(zip(d_set, combo))
        if any(pre[a] == pre[b] for a, b in combinations(d_set, 2)
               if g.has_edge(a, b)):
            continue
        if not _extends(g, pre):
            return False, pre
    return True, None
