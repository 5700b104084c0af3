"""Baseline colorers and verification oracles.

Greedy max-degree+1 coloring, 2-coloring of degree-<=2 graphs, clique and
odd-cycle detection, and an exhaustive chromatic-number oracle used to
cross-check everything else.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import (
    EXHAUSTED,
    Coloring,
    FiniteGraph,
    HypothesisError,
    NoColoringError,
    max_degree,
)


@dataclass
class HypothesisReport:
    """Outcome of checking the Brooks-theorem hypotheses for a given degree."""

    max_degree: int
    clique: Optional[tuple[int, ...]] = None        # a (d+1)-clique, if found
    odd_cycle: Optional[tuple[int, ...]] = None     # an odd cycle, if found (d=2 only)

    @property
    def ok(self) -> bool:
        return self.clique is None and self.odd_cycle is None


def greedy_color(g: FiniteGraph) -> Coloring:
    """Proper coloring with at most max_degree+1 colors.

    Vertices are processed in ascending order; each gets the least color not
    used by an already-colored neighbor.
    """
    assignment: dict[int, int] = {}
    for v in range(g.n):
        taken = {assignment[u] for u in g.adj[v] if u in assignment}
        c = 0
        while c in taken:
            c += 1
        assignment[v] = c
    palette = max(assignment.values()) + 1 if assignment else 1
    return Coloring(assignment, palette)


def find_clique(g: FiniteGraph, size: int) -> Optional[tuple[int, ...]]:
    """Some clique of exactly `size` vertices, or None.

    Any clique lies inside the closed neighborhood of its least member, so
    the search enumerates subsets of each N(v).
    """
    if size < 1:
        raise ValueError("clique size must be >= 1")
    if size == 1:
        return (0,) if g.n > 0 else None
    for v in range(g.n):
        higher = [u for u in g.adj[v] if u > v]
        if len(higher) < size - 1:
            continue
        for rest in combinations(higher, size - 1):
            if all(g.has_edge(a, b) for a, b in combinations(rest, 2)):
                return (v,) + rest
    return None


def find_odd_cycle(g: FiniteGraph) -> Optional[tuple[int, ...]]:
    """An odd cycle (closed vertex sequence), or None iff g is bipartite.

    BFS 2-coloring; an edge inside one BFS side closes an odd cycle through
    the two vertices' common ancestor.
    """
    side = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            nxt = []
            for v in queue:
                for u in g.adj[v]:
                    if side[u] == -1:
                        side[u] = 1 - side[v]
                        parent[u] = v
                        nxt.append(u)
                    elif side[u] == side[v]:
                        return _close_cycle(parent, v, u)
            queue = nxt
    return None


def _close_cycle(parent, v, u):
    path_v, path_u = [v], [u]
    seen = {v: 0}
    while parent[path_v[-1]] != -1:
        path_v.append(parent[path_v[-1]])
        seen[path_v[-1]] = len(path_v) - 1
    x = u
    while x not in seen:
        x = parent[x]
        path_u.append(x)
    # walk down the meet..v branch, cross the offending edge v-u, then walk
    # back up u..(just below meet) and close at the meet
    cycle = path_v[: seen[x] + 1][::-1] + path_u[:-1]
    return tuple(cycle) + (cycle[0],)


def check_brooks_hypotheses(g: FiniteGraph, d: int) -> HypothesisReport:
    """Check the hypotheses of Brooks' theorem for degree d."""
    delta = max_degree(g) if g.n else 0
    report = HypothesisReport(max_degree=delta)
    if d == 2:
        report.odd_cycle = find_odd_cycle(g)
    else:
        report.clique = find_clique(g, d + 1)
    return report


def _color_component(g, comp: list[int], assignment: dict[int, int]) -> None:
    """2-color one finite component of a degree-<=2 graph in place."""
    for v in comp:
        if len(g.neighbors(v)) > 2:
            raise HypothesisError(f"vertex {v} has degree > 2", kind="degree", witness=v)
    if len(comp) == 1:
        assignment[comp[0]] = 0
        return
    endpoints = [v for v in comp if len(g.neighbors(v)) <= 1]
    if endpoints:
        # line segment: walk from the least endpoint, alternating colors
        start = min(endpoints)
    else:
        # circle: start at the least node; odd circles are a hypothesis error
        if len(comp) % 2 == 1:
            cyc = _component_cycle(g, comp)
            raise HypothesisError("odd cycle found", kind="odd-cycle", witness=cyc)
        start = min(comp)
    assignment[start] = 0
    prev, cur = None, start
    while True:
        nxt = [u for u in g.neighbors(cur) if u != prev and u not in assignment]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        assignment[cur] = 1 - assignment[prev]


def _component_cycle(g, comp: list[int]) -> tuple[int, ...]:
    start = min(comp)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        prev, cur = cur, nxt[0]
        if cur == start:
            return tuple(order) + (start,)
        order.append(cur)


def color_degree_two(g: FiniteGraph, component_budget: Optional[int] = None):
    """Proper 2-coloring of a finite graph of max degree <= 2.

    Singletons get color 0, segments are 2-colored from the least endpoint,
    even circles from the least node.  An odd cycle raises HypothesisError
    carrying the cycle.  Returns EXHAUSTED if any component exceeds the
    budget (when one is given).
    """
    assignment: dict[int, int] = {}
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        comp = [root]
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        if component_budget is not None and len(comp) > component_budget:
            return EXHAUSTED
        _color_component(g, comp, assignment)
    return Coloring(assignment, 2)


def color_degree_two_query(g, v: int, component_budget: int):
    """Color of v in the canonical 2-coloring of its component, or EXHAUSTED.

    Query-driven variant for oracle graphs: explores only the component of v,
    and returns EXHAUSTED (never a wrong color) if it exceeds the budget.
    """
    from .core import component_of_bounded

    comp = component_of_bounded(g, v, component_budget)
    if comp is EXHAUSTED:
        return EXHAUSTED
    assignment: dict[int, int] = {}
    _color_component(g, sorted(comp), assignment)
    return assignment[v]


def brute_chromatic(g: FiniteGraph, cap: int) -> int:
    """Least k <= cap admitting a proper k-coloring, by backtracking.

    Symmetry breaking: vertex 0 is pinned to color 0.  Raises NoColoringError
    if no proper coloring with at most `cap` colors exists.
    """
    if g.n == 0:
        return 0
    if cap < 1:
        raise NoColoringError("palette cap below 1")
    for k in range(1, cap + 1):
        if _colorable(g, k):
            return k
    raise NoColoringError(f"no proper coloring with <= {cap} colors")


def _colorable(g: FiniteGraph, k: int) -> bool:
    colors = [-1] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        taken = {colors[u] for u in g.adj[v] if colors[u] != -1}
        limit = 1 if v == 0 else k
        for c in range(limit):
            if c not in taken:
                colors[v] = c
                if place(v + 1):
                    return True
                colors[v] = -1
        return False

    return place(0)
