"""Degree descent: reduce coloring at max degree d >= 4 to max degree 3.

The operator phi removes an independent set W from a d-regular graph with
no (d+1)-clique so that the remainder has max degree d-1 and no d-clique.
Iterating regularize-then-phi from degree d down to 4 partitions the
original vertices into classes K(0), K(1), ... (one spare color each) plus
a remainder of max degree 3 with no 4-clique, which the stage-wise deletion
engine 3-colors.  Total palette: d.

Each level multiplies the vertex count by 2^(current degree); keep inputs
small (the tests cap at d = 5, n <= 12).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .core import Coloring, DeletionView, FiniteGraph, HypothesisError
from .basic import find_clique, find_odd_cycle, color_degree_two
from .regularize import regularize


def is_clique_chain(g, vertices, d: int) -> bool:
    """Whether the induced subgraph is built from d-cliques glued in
    sequence by single bridge edges (the degree-d analogue of a circle
    built from circles).  Used only as an invariant probe: the stage rules
    should never strand such a component."""
    vset = set(vertices)
    adj = {v: {u for u in g.neighbors(v) if u in vset} for v in vset}
    if any(len(adj[v]) not in (d - 1, d) for v in vset):
        return False
    while True:
        high = [v for v in vset if len(adj[v]) == d]
        if not high:
            # base case: a single K_d
            return len(vset) == d and all(
                u in adj[v] for u, v in combinations(vset, 2))
        # find a leaf block: a d-clique with exactly one degree-d member
        for v in sorted(high):
            for rest in combinations(sorted(adj[v]), d - 1):
                block = {v} | set(rest)
                if not all(b in adj[a]
                           for a, b in combinations(block, 2)):
                    continue
                if sum(1 for u in block if len(adj[u]) == d) != 1:
                    continue
                outside = [u for u in adj[v] if u not in block]
                if len(outside) != 1:
                    continue
                for u in block:
                    for w in adj[u]:
                        adj[w].discard(u)
                    adj.pop(u)
                vset -= block
                break
            else:
                continue
            break
        else:
            return False
        if not vset:
            return False


def phi(g: FiniteGraph, d: int, check: bool = True,
        check_invariants: bool = False):
    """Independent W in a d-regular (d+1)-clique-free graph, d >= 4, whose
    removal leaves max degree d-1 and no d-clique.

    Stage rule: remove the least P-vertex if any; otherwise take the least
    degree-d vertex v and remove the least Q-vertex in N(v), or v itself.
    Returns (W sorted tuple, remainder view).
    """
    if d < 4:
        raise ValueError("phi requires d >= 4; use the degree-3 engine below")
    if check:
        for v in range(g.n):
            if g.degree(v) != d:
                raise HypothesisError(
                    f"vertex {v} has degree {g.degree(v)}, expected {d}",
                    kind="degree", witness=v)
        clique = find_clique(g, d + 1)
        if clique is not None:
            raise HypothesisError(f"contains a {d + 1}-clique {clique}",
                                  kind="clique", witness=clique)
    removed: set[int] = set()
    view = DeletionView(g, removed)
    n = g.n
    adjsets = [frozenset(g.adj[v]) for v in range(n)]
    alive = [True] * n
    deg = [g.degree(v) for v in range(n)]
    lowcnt = [sum(1 for u in g.adj[v] if g.degree(u) < d) for v in range(n)]
    # a P-clique through v needs d-1 members of degree < d, all adjacent
    # to v, so only vertices with lowcnt >= d-1 can be P-vertices
    p_watch: set[int] = set()
    W: list[int] = []
    pointer = 0

    def live_neighbors(v):
        return [u for u in g.adj[v] if alive[u]]

    def is_p(v):
        lows = [u for u in g.adj[v] if alive[u] and deg[u] < d]
        for rest in combinations(lows, d - 1):
            if all(b in adjsets[a] for a, b in combinations(rest, 2)):
                return True
        return False

    def is_q(v):
        if deg[v] != d:
            return False
        nbrs = live_neighbors(v)
        for rest in combinations(nbrs, d - 1):
            if not all(b in adjsets[a] for a, b in combinations(rest, 2)):
                continue
            high = 1 + sum(1 for u in rest if deg[u] == d)
            if 2 <= high <= d - 1:
                return True
        return False

    def rewatch(v):
        if alive[v] and deg[v] == d and lowcnt[v] >= d - 1:
            p_watch.add(v)
        else:
            p_watch.discard(v)

    for v in range(n):
        rewatch(v)

    while True:
        while pointer < n and not (alive[pointer] and deg[pointer] == d):
            pointer += 1
        if pointer >= n:
            break
        w = None
        for v in sorted(p_watch):
            if is_p(v):
                w = v
                break
        if w is None:
            v = pointer
            q_cands = sorted(u for u in live_neighbors(v) if is_q(u))
            w = q_cands[0] if q_cands else v
        nbrs = live_neighbors(w)
        alive[w] = False
        removed.add(w)
        p_watch.discard(w)
        W.append(w)
        for u in nbrs:
            deg[u] -= 1
            if deg[u] == d - 1:      # u just dropped below degree d
                for x in live_neighbors(u):
                    lowcnt[x] += 1
                    rewatch(x)
            rewatch(u)
        if check_invariants:
            _check_no_clique_chain(view, g, removed, d)
    return tuple(sorted(W)), view


def _check_no_clique_chain(view, g, removed, d):
    from .core import InternalInvariantError
    seen: set[int] = set()
    for root in range(g.n):
        if root in removed or root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in view.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        if is_clique_chain(view, comp, d):
            raise InternalInvariantError(
                f"remainder stranded a {d}-clique chain: {sorted(comp)}")


@dataclass(frozen=True)
class DescentResult:
    """K-classes (original vertices, one per level) and the degree-<=3
    remainder induced in the original graph."""

    K: tuple[tuple[int, ...], ...]
    g3: FiniteGraph
    g3_vertices: tuple[int, ...]   # original ids, index-aligned with g3


def descend_pipeline(g: FiniteGraph, d: int, check: bool = True,
                     check_invariants: bool = False) -> DescentResult:
    """Iterate regularize + phi from degree d down to 4.

    K[i] collects the original vertices whose image (followed through the
    embedding chain) is removed at level i; each K[i] is independent in g,
    and the remaining original vertices induce a graph of max degree <= 3
    with no 4-clique.
    """
    if check:
        clique = find_clique(g, d + 1)
        if clique is not None:
            raise HypothesisError(f"contains a {d + 1}-clique {clique}",
                                  kind="clique", witness=clique)
        for v in range(g.n):
            if g.degree(v) > d:
                raise HypothesisError(
                    f"vertex {v} has degree {g.degree(v)} > {d}",
                    kind="degree", witness=v)
    K: list[tuple[int, ...]] = []
    orig_map = {v: v for v in range(g.n)}   # original id -> id in H
    h = g
    for cur_d in range(d, 3, -1):
        emb = regularize(h, cur_d)
        W, _view = phi(emb.graph, cur_d, check=False,
                       check_invariants=check_invariants)
        w_set = set(W)
        ki = tuple(sorted(orig for orig, cur in orig_map.items()
                          if emb.embed(cur) in w_set))
        K.append(ki)
        survivors = [x for x in range(emb.graph.n) if x not in w_set]
        h, old_ids = emb.graph.induced(survivors)
        new_index = {old: new for new, old in enumerate(old_ids)}
        ki_set = set(ki)
        orig_map = {orig: new_index[emb.embed(cur)]
                    for orig, cur in orig_map.items() if orig not in ki_set}
    g3_vertices = sorted(orig_map)
    g3, _ = g.induced(g3_vertices)
    return DescentResult(tuple(K), g3, tuple(g3_vertices))


def brooks_color(g: FiniteGraph, d: int, check: bool = True) -> Coloring:
    """Proper d-coloring of a graph with max degree <= d meeting the
    degree-d hypotheses (no odd cycle for d = 2, no (d+1)-clique for
    d >= 3)."""
    if d < 2:
        raise ValueError("brooks_color requires d >= 2")
    if check:
        for v in range(g.n):
            if g.degree(v) > d:
                raise HypothesisError(
                    f"vertex {v} has degree {g.degree(v)} > {d}",
                    kind="degree", witness=v)
    if d == 2:
        if check:
            cyc = find_odd_cycle(g)
            if cyc is not None:
                raise HypothesisError(f"odd cycle {cyc}", kind="odd-cycle",
                                      witness=cyc)
        return color_degree_two(g)
    from .tverberg import run_trace
    if d == 3:
        return run_trace(g).source_coloring()
    if check:
        clique = find_clique(g, d + 1)
        if clique is not None:
            raise HypothesisError(f"contains a {d + 1}-clique {clique}",
                                  kind="clique", witness=clique)
    res = descend_pipeline(g, d, check=False)
    sub_coloring = run_trace(res.g3).source_coloring()
    assignment: dict[int, int] = {}
    for new_id, orig in enumerate(res.g3_vertices):
        assignment[orig] = sub_coloring[new_id]
    for i, ki in enumerate(res.K):
        for v in ki:
            assignment[v] = 3 + i
    return Coloring(assignment, d)
