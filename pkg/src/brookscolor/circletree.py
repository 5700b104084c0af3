"""Circle-tree calculus: recognition, quotients, and the local features
(P-vertices, Q-vertices, germs) driving the degree-3 deletion engine.

A circle is a finite connected graph in which every vertex has degree
exactly 2 (as an induced subgraph: chords disqualify).  A circle-tree is
built by repeatedly gluing a fresh circle to a degree-2 vertex of the part
built so far via a single bridge edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import FiniteGraph


@dataclass(frozen=True)
class CircleTreeWitness:
    """Certificate that a finite graph is a circle-tree.

    ``circles`` is a valid construction order (circle 0 first, each later
    circle glued to the part built before it); ``attach[i]`` is the bridge
    edge (x, y) with x in an earlier circle and y in ``circles[i + 1]``.
    """

    circles: tuple[tuple[int, ...], ...]
    attach: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.circles)

    def circle_multiset(self) -> tuple[tuple[int, ...], ...]:
        """Canonical content: the decomposition circles, sorted."""
        return tuple(sorted(self.circles))

    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for c in self.circles for v in c)


# ---------------------------------------------------------------------------
# chain scanning
# ---------------------------------------------------------------------------

_DEAD = ("dead", None)
_CYCLE = ("cycle", None)


def _walk_direction(g, start, first):
    """Follow low-degree vertices from `start` towards `first`.

    Returns (vertices visited after start, end marker).  The end marker is
    ('anchor', w) when a vertex of degree >= 3 is met, ('cycle', None) when
    the walk returns to `start`, and ('dead', None) at a degree-<=1 end.
    """
    run = []
    prev, cur = start, first
    while True:
        if cur == start:
            return run, _CYCLE
        nbrs = g.neighbors(cur)
        if len(nbrs) >= 3:
            return run, ("anchor", cur)
        run.append(cur)
        nxt = [u for u in nbrs if u != prev]
        if not nxt:
            return run, _DEAD
        prev, cur = cur, nxt[0]


def scan_runs(g, region: Iterable[int]):
    """Maximal runs of degree-<=2 vertices meeting `region`.

    Yields (run, left_end, right_end) with the run an ordered vertex list
    and each end one of ('anchor', w), ('dead', None), ('cycle', None).
    Runs are reported once, in order of their least starting vertex.
    """
    seen: set[int] = set()
    out = []
    for u in sorted(set(region)):
        if u in seen:
            continue
        nbrs = g.neighbors(u)
        if len(nbrs) >= 3:
            continue
        if not nbrs:
            seen.add(u)
            out.append(([u], _DEAD, _DEAD))
            continue
        left_run, left_end = _walk_direction(g, u, nbrs[0])
        if left_end == _CYCLE:
            run = [u] + left_run
            seen.update(run)
            out.append((run, _CYCLE, _CYCLE))
            continue
        if len(nbrs) == 2:
            right_run, right_end = _walk_direction(g, u, nbrs[1])
        else:
            right_run, right_end = [], _DEAD
        run = left_run[::-1] + [u] + right_run
        seen.update(run)
        out.append((run, left_end, right_end))
    return out


def closed_components(g, region: Iterable[int]):
    """Components made only of degree-<=2 vertices with no outside edge.

    Returns (segments, circles): vertex lists of closed line-segment or
    singleton components, and of closed circle components.
    """
    segments, circles = [], []
    for run, left, right in scan_runs(g, region):
        if left == _CYCLE:
            circles.append(run)
        elif left == _DEAD and right == _DEAD:
            segments.append(run)
    return segments, circles


# ---------------------------------------------------------------------------
# P-vertices, Q-vertices, germs
# ---------------------------------------------------------------------------


def p_vertices_with_circles(g, region: Iterable[int]) -> dict[int, frozenset[int]]:
    """P-vertices found from the degree-2 chains of `region`, with a circle
    witnessing each: the circle's non-anchor vertices all have degree 2."""
    found: dict[int, frozenset[int]] = {}
    for run, left, right in scan_runs(g, region):
        if left[0] != "anchor" or right[0] != "anchor":
            continue
        w = left[1]
        if w != right[1] or len(run) < 2:
            continue
        if len(g.neighbors(w)) != 3:
            continue
        if any(len(g.neighbors(x)) != 2 for x in run):
            continue
        if w not in found:
            found[w] = frozenset(run) | {w}
    return found


def find_p_vertices(g, region: Iterable[int]) -> list[int]:
    """All P-vertices: degree-3 vertices on a circle whose other nodes all
    have degree 2.  `region` must contain every degree-<=2 vertex of the
    graph under consideration."""
    return sorted(p_vertices_with_circles(g, region))


def _segments(g, region):
    """Chains of degree-exactly-2 vertices between two degree-3 anchors."""
    segs = []
    for run, left, right in scan_runs(g, region):
        if left[0] != "anchor" or right[0] != "anchor":
            continue
        if any(len(g.neighbors(x)) != 2 for x in run):
            continue
        if len(g.neighbors(left[1])) != 3 or len(g.neighbors(right[1])) != 3:
            continue
        segs.append((left[1], tuple(run), right[1]))
    return segs


def _is_induced_circle(g, vertices: frozenset[int]) -> bool:
    for v in vertices:
        if sum(1 for u in g.neighbors(v) if u in vertices) != 2:
            return False
    return True


def q_vertices_with_circles(g, region: Iterable[int],
                            candidates: Optional[Iterable[int]] = None
                            ) -> dict[int, frozenset[int]]:
    """Q-vertices with a witnessing circle each.

    A Q-vertex has degree 3, is not a P-vertex, and lies on a circle with at
    most 3 degree-3 vertices, adjacent on that circle to a degree-2 vertex.
    The search walks degree-2 chains between at most 3 anchors.
    """
    region = sorted(set(region))
    p_set = set(p_vertices_with_circles(g, region))
    segs = _segments(g, region)
    by_anchor: dict[int, list] = {}
    for i, (a, run, b) in enumerate(segs):
        key = ("seg", i)
        by_anchor.setdefault(a, []).append((b, key, run))
        by_anchor.setdefault(b, []).append((a, key, run[::-1]))
    if candidates is None:
        cand = sorted(by_anchor)
    else:
        cand = sorted(set(candidates) & set(by_anchor))
    found: dict[int, frozenset[int]] = {}
    for v in cand:
        if v in p_set or v in found:
            continue
        for circle in _circles_through(g, v, by_anchor):
            two_on_circle = [u for u in g.neighbors(v) if u in circle]
            if any(len(g.neighbors(u)) == 2 for u in two_on_circle):
                found[v] = circle
                break
    return found


def _circles_through(g, v, by_anchor):
    """Induced circles through anchor v using <= 3 degree-3 anchors, where
    at least one of v's circle-neighbors has degree 2."""
    results = []
    seen_sets = set()

    def anchor_moves(a):
        moves = list(by_anchor.get(a, ()))
        for w in g.neighbors(a):
            if len(g.neighbors(w)) == 3:
                edge = ("edge", min(a, w), max(a, w))
                moves.append((w, edge, ()))
        return moves

    def close(path_anchors, used_moves, chain_vertices):
        vs = frozenset(path_anchors) | frozenset(chain_vertices)
        if vs in seen_sets:
            return
        seen_sets.add(vs)
        if any(len(g.neighbors(a)) != 3 for a in path_anchors):
            return
        if _is_induced_circle(g, vs):
            results.append(vs)

    # depth-first over anchor sequences v -> ... -> v, at most 3 anchors
    def dfs(cur, anchors, used, chain_vertices, first_is_chain):
        for b, key, run in anchor_moves(cur):
            if key in used:
                continue
            if b == v:
                if len(anchors) >= 2 and not first_is_chain and not run:
                    continue  # need a degree-2 neighbor of v on the circle
                if len(anchors) == 1 and not run:
                    continue  # v-v would be a multi-edge
                close(anchors, used | {key}, chain_vertices + list(run))
                continue
            if b in anchors or len(anchors) >= 3:
                continue
            dfs(b, anchors + [b], used | {key},
                chain_vertices + list(run), first_is_chain)

    for b, key, run in anchor_moves(v):
        if b == v:
            close([v], {key}, list(run))
        else:
            dfs(b, [v, b], {key}, list(run), first_is_chain=bool(run))
    return results


def find_q_vertices(g, region: Iterable[int],
                    candidates: Optional[Iterable[int]] = None) -> list[int]:
    """All Q-vertices whose witnessing circle meets `region`'s degree-2
    chains; optionally restricted to the given candidate anchors."""
    return sorted(q_vertices_with_circles(g, region, candidates))


def _walk_germ(g, a, b) -> Optional[tuple[int, ...]]:
    """The unique germ starting a, b (degrees force the rest), or None."""
    path = [a, b]
    seen = {a, b}
    prev, cur = a, b
    while True:
        nxt = [u for u in g.neighbors(cur) if u != prev]
        if not nxt:
            return None
        cur2 = nxt[0]
        if len(g.neighbors(cur2)) >= 3:
            return tuple(path + [cur2])
        if cur2 in seen:
            return None
        path.append(cur2)
        seen.add(cur2)
        prev, cur = cur, cur2


def find_germs(g, region: Iterable[int]) -> list[tuple[int, ...]]:
    """All germs starting inside `region`, ordered by (start, second node).

    A germ is a path of length >= 3 whose non-terminal vertices have degree
    <= 2 and whose last vertex has degree 3.
    """
    germs = []
    for a in sorted(set(region)):
        nbrs = g.neighbors(a)
        if not 1 <= len(nbrs) <= 2:
            continue
        for b in nbrs:
            if len(g.neighbors(b)) > 2:
                continue
            germ = _walk_germ(g, a, b)
            if germ is not None and len(g.neighbors(germ[-1])) == 3:
                germs.append(germ)
    return germs


def minimal_germ_below(g, region: Iterable[int], bound: int
                       ) -> Optional[tuple[int, ...]]:
    """The germ with minimal (start, second) among those starting below
    `bound`, or None.  Equivalent to filtering find_germs but stops early."""
    for a in sorted(set(region)):
        if a >= bound:
            break
        nbrs = g.neighbors(a)
        if not 1 <= len(nbrs) <= 2:
            continue
        for b in nbrs:
            if len(g.neighbors(b)) > 2:
                continue
            germ = _walk_germ(g, a, b)
            if germ is not None:
                return germ
    return None


# ---------------------------------------------------------------------------
# recognition
# ---------------------------------------------------------------------------


def recognize_circle_tree(g, vertices: Optional[Iterable[int]] = None
                          ) -> Optional[CircleTreeWitness]:
    """Witness that the induced subgraph on `vertices` is a circle-tree,
    or None.  Defaults to the whole graph for finite graphs.

    Works by peeling leaf circles (circles attached by exactly one bridge)
    until a single circle remains; decomposition uniqueness makes the
    returned circle multiset canonical.
    """
    if vertices is None:
        vertices = g.vertices  # FiniteGraph only
    vset = set(vertices)
    if not vset:
        return None
    adj = {}
    for v in vset:
        local = [u for u in g.neighbors(v) if u in vset]
        if len(local) not in (2, 3):
            return None
        adj[v] = set(local)
    # connectivity
    start = next(iter(vset))
    stack, comp = [start], {start}
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in comp:
                comp.add(u)
                stack.append(u)
    if comp != vset:
        return None

    peeled: list[tuple[tuple[int, ...], tuple[int, int]]] = []
    remaining = set(vset)
    while True:
        deg3 = [v for v in remaining if len(adj[v]) == 3]
        if not deg3:
            circle = _as_single_circle(adj, remaining)
            if circle is None:
                return None
            circles = [circle]
            attach = []
            for circ, bridge in reversed(peeled):
                circles.append(circ)
                attach.append(bridge)
            return CircleTreeWitness(tuple(circles), tuple(attach))
        leaf = _find_leaf_circle(adj, remaining)
        if leaf is None:
            return None
        circle, anchor = leaf
        outside = [u for u in adj[anchor] if u not in circle]
        if len(outside) != 1:
            return None
        bridge = (outside[0], anchor)
        for v in circle:
            for u in adj[v]:
                adj[u].discard(v)
            adj.pop(v)
            remaining.discard(v)
        peeled.append((tuple(sorted(circle)), bridge))


def _as_single_circle(adj, remaining) -> Optional[tuple[int, ...]]:
    if len(remaining) < 3 or any(len(adj[v]) != 2 for v in remaining):
        return None
    start = min(remaining)
    prev, cur, count = None, start, 0
    while True:
        nxt = [u for u in adj[cur] if u != prev]
        prev, cur = cur, nxt[0]
        count += 1
        if cur == start:
            break
    if count != len(remaining):
        return None
    return tuple(sorted(remaining))


def _find_leaf_circle(adj, remaining) -> Optional[tuple[frozenset[int], int]]:
    """A circle with exactly one degree-3 vertex (its anchor) in the current
    peel state; the one with the least minimum vertex, for determinism."""
    best = None
    visited: set[int] = set()
    for u in sorted(remaining):
        if u in visited or len(adj[u]) != 2:
            continue
        run = [u]
        nbrs = sorted(adj[u])
        ends = []
        for first in nbrs:
            prev, cur = u, first
            side = []
            while True:
                if cur == u:
                    ends.append(("cycle", None))
                    break
                if len(adj[cur]) == 3:
                    ends.append(("anchor", cur))
                    break
                side.append(cur)
                nxt = [w for w in adj[cur] if w != prev]
                if not nxt:
                    ends.append(("dead", None))
                    break
                prev, cur = cur, nxt[0]
            run.extend(side)
            if ends[-1][0] == "cycle":
                break
        visited.update(run)
        if len(ends) == 2 and ends[0][0] == "anchor" and ends[0] == ends[1]:
            anchor = ends[0][1]
            circle = frozenset(run) | {anchor}
            key = min(circle)
            if best is None or key < best[0]:
                best = (key, circle, anchor)
    if best is None:
        return None
    return best[1], best[2]


def quotient(w: CircleTreeWitness, h=None) -> FiniteGraph:
    """Graph on the witness's circles, adjacent when joined by a bridge.

    Always acyclic and connected (a tree).
    """
    index = {}
    for i, circ in enumerate(w.circles):
        for v in circ:
            index[v] = i
    edges = []
    for i, (x, y) in enumerate(w.attach):
        edges.append((index[x], index[y]))
    return FiniteGraph.from_edges(len(w.circles), edges)
