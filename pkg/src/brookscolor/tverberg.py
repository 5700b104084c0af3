"""Stage-wise deletion engine for 3-coloring graphs of maximum degree 3
with no 4-clique.

The engine removes one vertex per stage, building an independent set W
whose removal leaves only line segments and isolated vertices; W gets
color 0 and each leftover segment alternates colors 1, 2 starting from its
least endpoint.  Stage rules, in priority order, with s the least vertex of
current degree 3:

1. remove the least P-vertex, if any;
2. if there are no P-vertices and some germ starts below s, take the germ
   (a, b, ..., l, m) minimal by (start, second node): if deleting its head
   m would leave a circle-tree component, remove instead the first vertex
   of (N(m) - {l}) inside the least such component; otherwise remove m;
3. otherwise remove the least Q-vertex adjacent to s, if any, else s.

The engine works lazily, so it also serves vertex-wise color queries on
infinite oracle graphs: a vertex's color is settled as soon as its
component in the remainder closes off.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (Coloring, DeletionView, EXHAUSTED, FiniteGraph,
                   HypothesisError, InternalInvariantError)
from .basic import find_clique
from .circletree import (closed_components, minimal_germ_below,
                         p_vertices_with_circles, q_vertices_with_circles,
                         recognize_circle_tree)


@dataclass(frozen=True)
class StageDecision:
    """One engine stage: which rule fired and what it removed."""

    index: int
    rule: str          # "P" | "germ" | "germ-redirect" | "Q" | "S"
    w: int
    s: int
    evidence: object = None   # germ tuple, redirect component, ...
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class DeletionTrace:
    """Full run record: per-stage decisions and the resulting coloring."""

    stages: tuple[StageDecision, ...]
    coloring: Coloring
    embedding: object = None  # set when the input needed regularization

    @property
    def w(self) -> tuple[int, ...]:
        return tuple(st.w for st in self.stages)

    def source_coloring(self) -> Coloring:
        """Coloring of the original vertices when the run happened on a
        regularized supergraph; identical to `coloring` otherwise."""
        if self.embedding is None:
            return self.coloring
        pulled = self.embedding.pull_back(self.coloring.assignment)
        return Coloring(pulled, self.coloring.palette)


def least_circle_tree_component(h, deg2_vertices) -> Optional[frozenset]:
    """The circle-tree component of h with the least vertex, or None.

    `deg2_vertices` must contain every degree-2 vertex of h that could lie
    on such a component.  Components are grown breadth-first and abandoned
    once they exceed three times the degree-2 count, which bounds the size
    of any circle-tree.
    """
    seeds = sorted({v for v in deg2_vertices if len(h.neighbors(v)) == 2})
    cutoff = 3 * len(seeds)
    rejected: set[int] = set()
    best: Optional[frozenset] = None
    for x in seeds:
        if x in rejected or (best is not None and x in best):
            continue
        comp = {x}
        frontier = [x]
        too_big = False
        while frontier:
            nxt = []
            for v in frontier:
                for u in h.neighbors(v):
                    if u not in comp:
                        comp.add(u)
                        nxt.append(u)
            if len(comp) > cutoff:
                too_big = True
                break
            frontier = nxt
        if too_big:
            rejected |= comp
            continue
        witness = recognize_circle_tree(h, comp)
        if witness is None:
            rejected |= comp
        elif best is None or min(comp) < min(best):
            best = frozenset(comp)
    return best


class TverbergEngine:
    """Incremental stage-wise deletion on a 3-regular, 4-clique-free graph.

    The graph may be a FiniteGraph or an OracleGraph (possibly infinite).
    State is monotone: degrees only drop, the degree-3 scan pointer only
    advances, and a vertex's color never changes once assigned.
    """

    def __init__(self, g, check_invariants: bool = False):
        self.g = g
        self.check_invariants = check_invariants
        self.removed: set[int] = set()
        self.view = DeletionView(g, self.removed)
        self.low: set[int] = set()       # degree <= 2, fate still open
        self.stages: list[StageDecision] = []
        self._colors: dict[int, int] = {}
        self._s = 0
        self._finished = False
        self._n = getattr(g, "n", None)
        if self._n is None:
            self._n = getattr(g, "n_vertices", None)

    # -- state queries ------------------------------------------------

    def color_of(self, v: int) -> Optional[int]:
        """The settled color of v, or None if its fate is still open."""
        if v in self.removed:
            return 0
        return self._colors.get(v)

    def coloring(self) -> Coloring:
        assignment = {v: 0 for v in self.removed}
        assignment.update(self._colors)
        return Coloring(assignment, 3)

    # -- stage machinery ----------------------------------------------

    def _find_s(self) -> Optional[int]:
        v = self._s
        while self._n is None or v < self._n:
            if v not in self.removed and v not in self._colors \
                    and self.view.degree(v) == 3:
                self._s = v
                return v
            v += 1
        self._s = v
        return None

    def _choose(self, s: int) -> StageDecision:
        i = len(self.stages)
        ps = p_vertices_with_circles(self.view, self.low)
        if ps:
            p = min(ps)
            return StageDecision(i, "P", p, s, evidence=ps[p])
        germ = minimal_germ_below(self.view, self.low, s)
        if germ is not None:
            l, m = germ[-2], germ[-1]
            h_removed = self.removed | {m}
            h = DeletionView(self.g, h_removed)
            deg2 = {u for u in self.low if u != m and len(h.neighbors(u)) == 2}
            deg2.update(u for u in self.view.neighbors(m)
                        if len(h.neighbors(u)) == 2)
            comp = least_circle_tree_component(h, deg2)
            if comp is None:
                return StageDecision(i, "germ", m, s, evidence=germ)
            picks = [u for u in self.view.neighbors(m)
                     if u != l and u in comp]
            if picks:
                return StageDecision(i, "germ-redirect", picks[0], s,
                                     evidence=(germ, comp))
            # provably unreachable; kept as a guarded fallback
            fallback = [u for u in self.view.neighbors(m) if u != l][0]
            return StageDecision(i, "germ-redirect", fallback, s,
                                 evidence=(germ, comp),
                                 flags=("redirect-missed-component",))
        qs = q_vertices_with_circles(self.view, self.low,
                                     candidates=self.view.neighbors(s))
        if qs:
            q = min(qs)
            return StageDecision(i, "Q", q, s, evidence=qs[q])
        return StageDecision(i, "S", s, s)

    def _settle(self) -> None:
        segments, circles = closed_components(self.view, self.low)
        for run in segments:
            if run[-1] < run[0]:
                run = run[::-1]
            for j, v in enumerate(run):
                self._colors[v] = 1 + (j % 2)
            self.low.difference_update(run)
        for run in circles:
            # the stage rules provably never strand a circle; tolerate the
            # even case defensively, an odd one cannot be 2-colored
            if len(run) % 2:
                raise InternalInvariantError(
                    f"odd circle left in remainder: {sorted(run)}")
            k = run.index(min(run))
            run = run[k:] + run[:k]
            for j, v in enumerate(run):
                self._colors[v] = 1 + (j % 2)
            self.low.difference_update(run)

    def step(self) -> Optional[StageDecision]:
        """Run one stage; None once no degree-3 vertex remains (finite)."""
        if self._finished:
            return None
        s = self._find_s()
        if s is None:
            self._finished = True
            self._settle()
            return None
        decision = self._choose(s)
        w = decision.w
        if self.check_invariants:
            if self.view.degree(w) != 3:
                raise InternalInvariantError(
                    f"stage {decision.index} removed {w} of degree "
                    f"{self.view.degree(w)}")
            if any(u in self.removed for u in self.g.neighbors(w)):
                raise InternalInvariantError(
                    f"stage {decision.index} removed {w} adjacent to W")
            if decision.flags:
                raise InternalInvariantError(
                    f"stage {decision.index}: {decision.flags}")
        nbrs = self.view.neighbors(w)
        self.removed.add(w)
        self.low.discard(w)
        for u in nbrs:
            if self.view.degree(u) <= 2:
                self.low.add(u)
        self.stages.append(decision)
        self._settle()
        return decision

    def run(self) -> tuple[StageDecision, ...]:
        """Run to completion (finite graphs only)."""
        if self._n is None:
            raise ValueError("cannot exhaust an unbounded oracle graph")
        while self.step() is not None:
            pass
        return tuple(self.stages)

    def color_query(self, v: int, max_stages: Optional[int] = None):
        """Color of v, running stages on demand until its fate settles.

        Returns EXHAUSTED if the stage budget runs out first: the answer is
        then unknown, never wrong.
        """
        while True:
            c = self.color_of(v)
            if c is not None:
                return c
            if self._finished:
                raise InternalInvariantError(
                    f"engine finished with {v} uncolored")
            if max_stages is not None and len(self.stages) >= max_stages:
                return EXHAUSTED
            self.step()


def tverberg_color(g: FiniteGraph, check: bool = True,
                   check_invariants: bool = False) -> Coloring:
    """3-coloring of a finite 3-regular graph with no 4-clique.

    With check=True the hypotheses are verified up front and violations
    raise HypothesisError.
    """
    if check:
        for v in range(g.n):
            if g.degree(v) != 3:
                raise HypothesisError(
                    f"vertex {v} has degree {g.degree(v)}, expected 3",
                    kind="degree", witness=v)
        clique = find_clique(g, 4)
        if clique is not None:
            raise HypothesisError(f"contains a 4-clique {clique}",
                                  kind="clique", witness=clique)
    engine = TverbergEngine(g, check_invariants=check_invariants)
    engine.run()
    return engine.coloring()


def run_trace(g: FiniteGraph, check_invariants: bool = False) -> DeletionTrace:
    """Full deletion trace for a finite graph of maximum degree <= 3 with
    no 4-clique.

    Inputs that are not already 3-regular are first embedded into a
    3-regular supergraph; the trace then refers to the supergraph and the
    embedding is recorded on the result (use source_coloring() to read the
    original vertices' colors).
    """
    clique = find_clique(g, 4)
    if clique is not None:
        raise HypothesisError(f"contains a 4-clique {clique}",
                              kind="clique", witness=clique)
    embedding = None
    target = g
    if g.n == 0:
        return DeletionTrace((), Coloring({}, 3))
    if any(g.degree(v) != 3 for v in range(g.n)):
        from .regularize import regularize
        embedding = regularize(g, 3)
        target = embedding.graph
    engine = TverbergEngine(target, check_invariants=check_invariants)
    stages = engine.run()
    return DeletionTrace(stages, engine.coloring(), embedding)
