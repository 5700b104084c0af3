import itertools

import pytest

from brookscolor.core import FiniteGraph, is_proper, max_degree
from brookscolor.basic import find_clique
from brookscolor.schmerl import (
    C_A,
    C_B,
    C_X,
    build_C,
    build_apexed_ladder,
    check_lemma7_conditions,
    compose_CG,
    compute_levels,
    d_subgraph,
    has_property_A,
)

from conftest import complete_graph, cycle_graph, path_graph


class TestBlocker:
    def test_shape(self):
        c = build_C()
        assert c.n == 6
        assert max_degree(c) == 3
        assert find_clique(c, 4) is None
        assert sorted(c.degree(v) for v in range(6)) == [1, 2, 2, 3, 3, 3]

    def test_forces_endpoint_colors_apart(self):
        # in every proper 3-coloring of C, the two degree-<=2 ends a and b
        # receive different colors
        c = build_C()
        found = 0
        for colors in itertools.product(range(3), repeat=6):
            if any(colors[u] == colors[v] for u, v in c.edges()):
                continue
            found += 1
            assert colors[C_A] != colors[C_B]
        assert found > 0


class TestLevels:
    def test_path_levels(self):
        assert compute_levels(path_graph(4), [0]) == ((0,), (1,), (2,), (3,))

    def test_not_exhaustive(self):
        g = FiniteGraph.from_edges(3, [(0, 1)])
        with pytest.raises(ValueError):
            compute_levels(g, [0])

    def test_d_subgraph(self):
        assert d_subgraph(build_C()) == [C_A, C_B, C_X]
        assert d_subgraph(complete_graph(4)) == []


class TestApexedLadder:
    def test_height_three(self):
        lg = build_apexed_ladder(3)
        g = lg.graph
        assert g.n == 9
        assert lg.h == 4
        # degree-<=2 part: apex plus the top rung
        names = sorted(lg.name_of(v) for v in d_subgraph(g))
        assert names == ["g*", "u3", "w3"]
        assert [len(z) for z in lg.Z] == [1, 2, 2, 2, 2]

    @pytest.mark.parametrize("h", range(2, 13))
    def test_conditions_hold(self, h):
        lg = build_apexed_ladder(h)
        assert all(check_lemma7_conditions(lg).values())

    def test_too_short(self):
        with pytest.raises(ValueError):
            build_apexed_ladder(1)


class TestComposition:
    def test_structure(self):
        lg = compose_CG(build_apexed_ladder(3))
        assert lg.Z[0] == (C_A, C_B)
        assert all(check_lemma7_conditions(lg).values())
        # the merged vertex carries both roles: handle of C and apex of G
        merged = [v for v in range(lg.graph.n)
                  if lg.name_of(v).startswith("x*")]
        assert len(merged) == 1
        assert lg.graph.degree(merged[0]) == 3

    @pytest.mark.parametrize("h", range(2, 13))
    def test_refutes_extension_lemma(self, h):
        lg = compose_CG(build_apexed_ladder(h))
        assert all(check_lemma7_conditions(lg).values())
        ok, witness = has_property_A(lg.graph)
        assert not ok
        assert witness is not None
        # the stuck precoloring colors only the degree-<=2 part ...
        assert set(witness) <= set(d_subgraph(lg.graph))
        assert is_proper(lg.graph,_as_coloring(witness), vertices=witness)
        # ... and it is stuck precisely because it gives a and b one color
        assert witness[C_A] == witness[C_B]


def _as_coloring(witness):
    from brookscolor.core import Coloring
    return Coloring(dict(witness), 3)


class TestPropertyA:
    def test_k4_fails_on_empty_precoloring(self):
        # d(K4) is empty; the empty precoloring cannot extend since K4 is
        # not 3-colorable at all
        ok, witness = has_property_A(complete_graph(4))
        assert not ok and witness == {}

    def test_k4_minus_edge(self):
        # d(g) = {2, 3}; coloring them differently leaves the adjacent
        # pair 0, 1 only one color, so the extension fails
        g = FiniteGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
        ok, witness = has_property_A(g)
        assert not ok
        assert witness[2] != witness[3]

    def test_triangle(self):
        # every vertex is in d(g): proper precolorings are total colorings
        ok, witness = has_property_A(complete_graph(3))
        assert ok and witness is None

    def test_even_cycle(self):
        ok, _ = has_property_A(cycle_graph(6))
        assert ok

    def test_composite_witness_minimal_case(self):
        lg = compose_CG(build_apexed_ladder(2))
        ok, witness = has_property_A(lg.graph)
        assert not ok
        # re-verify independently: no proper total 3-coloring agrees with it
        g = lg.graph
        free = [v for v in range(g.n) if v not in witness]
        for rest in itertools.product(range(3), repeat=len(free)):
            colors = dict(witness)
            colors.update(zip(free, rest))
            if all(colors[u] != colors[v] for u, v in g.edges()):
                pytest.fail("witness precoloring was extendable after all")
