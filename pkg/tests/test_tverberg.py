import random

import pytest

from brookscolor.core import (
    DeletionView,
    FiniteGraph,
    HypothesisError,
    OracleGraph,
    is_proper,
)
from brookscolor.basic import brute_chromatic
from brookscolor.circletree import recognize_circle_tree
from brookscolor.tverberg import (
    EXHAUSTED,
    TverbergEngine,
    least_circle_tree_component,
    run_trace,
    tverberg_color,
)
from brookscolor.generate import random_cubic_k4_free, is_connected

from conftest import complete_graph, cycle_graph


def _stage_graph(g, trace, i):
    """The graph as the engine saw it when stage i was decided."""
    removed = {st.w for st in trace.stages[:i]}
    return DeletionView(g, removed)


class TestSmallGraphs:
    @pytest.mark.parametrize("name", ["petersen", "prism", "cube", "k33"])
    def test_three_colors_proper(self, name, request):
        g = request.getfixturevalue(name)
        c = tverberg_color(g)
        assert c.palette == 3
        assert is_proper(g, c)

    def test_first_stage_rule_s(self, petersen):
        tr = run_trace(petersen)
        assert tr.stages[0].rule == "S"
        assert tr.stages[0].w == 0

    def test_deterministic(self, prism):
        t1, t2 = run_trace(prism), run_trace(prism)
        assert [(s.rule, s.w) for s in t1.stages] == \
               [(s.rule, s.w) for s in t2.stages]
        assert t1.coloring.assignment == t2.coloring.assignment

    def test_query_matches_run(self, cube):
        full = run_trace(cube).source_coloring()
        for v in range(cube.n):
            eng = TverbergEngine(cube)
            assert eng.color_query(v) == full.assignment[v]

    def test_non_regular_input(self):
        # K4 minus an edge: max degree 3, not regular, chi = 3
        g = FiniteGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        c = run_trace(g).source_coloring()
        assert is_proper(g, c)
        assert brute_chromatic(g, 4) == 3

    def test_k4_rejected(self):
        with pytest.raises(HypothesisError):
            tverberg_color(complete_graph(4))

    def test_degree_four_rejected(self):
        g = FiniteGraph.from_edges(5, [(0, i) for i in range(1, 5)])
        with pytest.raises(HypothesisError):
            tverberg_color(g)

    def test_empty_graph(self):
        c = tverberg_color(FiniteGraph.from_edges(0, []))
        assert c.assignment == {}


class TestStageClaims:
    """Structural claims on the deletion order, checked by replaying traces."""

    def _graphs(self, rng):
        for _ in range(25):
            n = rng.choice([8, 10, 12, 14, 16])
            yield random_cubic_k4_free(n, rng)

    def test_w_is_independent(self, rng):
        for g in self._graphs(rng):
            tr = run_trace(g)
            ws = [s.w for s in tr.stages]
            for i, w in enumerate(ws):
                assert not any(g.has_edge(w, u) for u in ws[:i])

    def test_w_has_degree_three_when_chosen(self, rng):
        for g in self._graphs(rng):
            tr = run_trace(g)
            for i, st in enumerate(tr.stages):
                h = _stage_graph(g, tr, i)
                assert len(h.neighbors(st.w)) == 3

    def test_no_circle_tree_component_left(self, rng):
        for g in self._graphs(rng):
            tr = run_trace(g)
            removed = set()
            for st in tr.stages:
                removed.add(st.w)
                h = DeletionView(g, removed)
                for comp in _components(g, removed):
                    sub, _ = g.induced(sorted(comp))
                    assert recognize_circle_tree(sub) is None

    def test_germ_resolved_within_bound(self, rng):
        # a germ first seen at stage i never persists past stage 4i
        for g in self._graphs(rng):
            tr = run_trace(g)
            first_seen = {}
            for j, st in enumerate(tr.stages):
                if st.rule.startswith("germ"):
                    germ = st.evidence if st.rule == "germ" else st.evidence[0]
                    key = (germ[0], germ[1])
                    first_seen.setdefault(key, j)
                    assert j <= 4 * first_seen[key] + 4

    def test_remainder_is_segments(self, rng):
        for g in self._graphs(rng):
            tr = run_trace(g)
            removed = {st.w for st in tr.stages}
            for comp in _components(g, removed):
                sub, _ = g.induced(sorted(comp))
                degs = sorted(sub.degree(v) for v in range(sub.n))
                assert degs[-1] <= 2
                # settled components are paths/singletons, never circles
                assert sub.edge_count < sub.n

    def test_coloring_proper_with_invariant_checks(self, rng):
        for _ in range(10):
            g = random_cubic_k4_free(rng.choice([10, 12, 14]), rng)
            c = tverberg_color(g, check_invariants=True)
            assert is_proper(g, c)
            assert set(c.assignment) == set(range(g.n))


def _components(g, removed):
    seen, out = set(removed), []
    for root in range(g.n):
        if root in seen:
            continue
        comp, stack = {root}, [root]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in comp and u not in removed:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append(comp)
    return out


class TestLeastComponent:
    def test_finds_triangle(self):
        g = FiniteGraph.from_edges(
            7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)])
        found = least_circle_tree_component(g, {0, 1, 2, 3, 4, 5, 6})
        assert found == frozenset({0, 1, 2})

    def test_least_by_minimum_vertex(self):
        g = FiniteGraph.from_edges(
            7, [(4, 5), (5, 6), (4, 6), (0, 1), (1, 2), (2, 3), (0, 3)])
        found = least_circle_tree_component(g, {0, 1, 2, 3, 4, 5, 6})
        assert min(found) == 0

    def test_none_when_only_paths(self):
        g = FiniteGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert least_circle_tree_component(g, {0, 1, 2, 3}) is None


class TestOracleQueries:
    def test_infinite_three_regular_tree(self):
        def nbrs(v):
            if v == 0:
                return [1, 2, 3]
            parent = v // 2 - 1 if v >= 2 else 0
            return sorted([parent, 2 * v + 2, 2 * v + 3])

        g = OracleGraph(nbrs)
        eng = TverbergEngine(g)
        colors = {}
        for v in [0, 1, 2, 5, 17]:
            ans = eng.color_query(v, max_stages=3000)
            assert ans is not EXHAUSTED
            colors[v] = ans
        assert colors[0] != colors[1]
        assert colors[0] != colors[2]
        assert colors[1] != colors[5]

    def test_budget_exhausts(self):
        def nbrs(v):
            return sorted({(v - 1) % (10 ** 9), (v + 1) % (10 ** 9),
                           (v + 10 ** 9 // 2) % (10 ** 9)})

        eng = TverbergEngine(OracleGraph(nbrs))
        assert eng.color_query(500, max_stages=2) is EXHAUSTED

    def test_run_requires_finite(self):
        eng = TverbergEngine(OracleGraph(lambda v: sorted({max(v - 1, 0), v + 1, v + 2})))
        with pytest.raises(ValueError):
            eng.run()
