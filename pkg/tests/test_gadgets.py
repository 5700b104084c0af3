import itertools

import pytest

from brookscolor.core import Coloring, FiniteGraph, is_proper, max_degree
from brookscolor.basic import color_degree_two, find_clique
from brookscolor.descent import brooks_color
from brookscolor.gadgets import (
    GadgetGraph,
    InjectionPair,
    build_h2,
    build_h2_oracle,
    build_hd,
    build_hd_oracle,
    build_ladder,
    build_ladder_oracle,
    extract_separator,
)
from brookscolor.generate import random_injection_pair


def separator_ok(pair: InjectionPair, X) -> bool:
    return set(pair.f) <= set(X) and not set(pair.g) & set(X)


class TestInjectionPair:
    def test_valid(self):
        p = InjectionPair(f=(0, 2), g=(1, 3), horizon=5)
        assert p.f == (0, 2)

    def test_not_injective(self):
        with pytest.raises(ValueError):
            InjectionPair(f=(1, 1), g=(), horizon=4)

    def test_overlapping_ranges(self):
        with pytest.raises(ValueError):
            InjectionPair(f=(1, 2), g=(2, 3), horizon=5)

    def test_value_outside_horizon(self):
        with pytest.raises(ValueError):
            InjectionPair(f=(7,), g=(), horizon=5)


class TestH2:
    def test_exact_structure(self):
        p = InjectionPair(f=(2,), g=(5,), horizon=6)
        gg = build_h2(p)
        g = gg.graph
        # f(0)=2: even path a_2 - c_0 - b_2
        assert g.has_edge(gg.id_of(("a", 2)), gg.id_of(("c", 0)))
        assert g.has_edge(gg.id_of(("b", 2)), gg.id_of(("c", 0)))
        # g(0)=5: odd path a_5 - c'_0 - d'_0 - b_5
        assert g.has_edge(gg.id_of(("a", 5)), gg.id_of(("cp", 0)))
        assert g.has_edge(gg.id_of(("cp", 0)), gg.id_of(("dp", 0)))
        assert g.has_edge(gg.id_of(("dp", 0)), gg.id_of(("b", 5)))
        assert g.edge_count == 5
        # untouched columns stay isolated
        for n in (0, 1, 3, 4):
            assert g.degree(gg.id_of(("a", n))) == 0
            assert g.degree(gg.id_of(("b", n))) == 0
        assert max_degree(g) <= 2

    def test_forcing(self):
        p = InjectionPair(f=(0, 4), g=(1, 3), horizon=5)
        gg = build_h2(p)
        c = color_degree_two(gg.graph)
        assert is_proper(gg.graph, c)
        for n in p.f:
            assert c.assignment[gg.id_of(("a", n))] == \
                c.assignment[gg.id_of(("b", n))]
        for n in p.g:
            assert c.assignment[gg.id_of(("a", n))] != \
                c.assignment[gg.id_of(("b", n))]


class TestHd:
    @pytest.mark.parametrize("d", [3, 4])
    def test_structure(self, d):
        p = InjectionPair(f=(0, 2), g=(1, 4), horizon=5)
        gg = build_hd(p, d)
        g = gg.graph
        assert max_degree(g) <= d
        assert find_clique(g, d + 1) is None
        # the pin vertex of a g-column has degree d at d=3: clique + b_n
        assert g.degree(gg.id_of(("ep", 0))) == d

    def test_forcing_all_colorings_d3(self):
        # exhaustively verify the forced relations over every proper coloring
        p = InjectionPair(f=(0,), g=(1,), horizon=2)
        gg = build_hd(p, 3)
        g = gg.graph
        a0, b0 = gg.id_of(("a", 0)), gg.id_of(("b", 0))
        a1, b1 = gg.id_of(("a", 1)), gg.id_of(("b", 1))
        count = 0
        for colors in itertools.product(range(3), repeat=g.n):
            if any(colors[u] == colors[v] for u, v in g.edges()):
                continue
            count += 1
            assert colors[a0] == colors[b0]
            assert colors[a1] != colors[b1]
        assert count > 0


class TestLadder:
    def test_shapes(self):
        p = InjectionPair(f=(1,), g=(2,), horizon=4)
        gg = build_ladder(p)
        g = gg.graph
        # column 3 is hit by f at row 0 (f(0)=... wait: f maps m -> column)
        # f(0)=1: column 1 rails stop at row 0, closed by a rung
        assert g.has_edge(gg.id_of(("l", 1, 0)), gg.id_of(("r", 1, 0)))
        assert gg.label_of(gg.id_of(("l", 1, 0))) == ("l", 1, 0)
        # g(0)=2: column 2 closed through the midpoint vertex
        m = gg.id_of(("m", 2, 0))
        assert g.has_edge(gg.id_of(("l", 2, 0)), m)
        assert g.has_edge(m, gg.id_of(("r", 2, 0)))
        # untouched columns 0 and 3: two disjoint rails of length horizon
        for n in (0, 3):
            for k in range(p.horizon):
                gg.id_of(("l", n, k))
                gg.id_of(("r", n, k))
            assert g.degree(gg.id_of(("l", n, 0))) == 1
            assert g.degree(gg.id_of(("l", n, p.horizon - 1))) == 1
        assert max_degree(g) <= 2

    def test_deeper_hits(self):
        # f = (3, 1): column 3 hit at row 0, column 1 hit at row 1
        p = InjectionPair(f=(3, 1), g=(2,), horizon=4)
        gg = build_ladder(p)
        g = gg.graph
        assert g.has_edge(gg.id_of(("l", 1, 1)), gg.id_of(("r", 1, 1)))
        assert g.has_edge(gg.id_of(("l", 1, 0)), gg.id_of(("l", 1, 1)))
        with pytest.raises(KeyError):
            gg.id_of(("l", 1, 2))

    def test_forcing(self):
        p = InjectionPair(f=(0, 3), g=(1, 5), horizon=6)
        gg = build_ladder(p)
        c = color_degree_two(gg.graph)
        for n in p.f:
            assert c.assignment[gg.id_of(("l", n, 0))] != \
                c.assignment[gg.id_of(("r", n, 0))]
        for n in p.g:
            assert c.assignment[gg.id_of(("l", n, 0))] == \
                c.assignment[gg.id_of(("r", n, 0))]


class TestOracleVariants:
    def _compare(self, finite_gg: GadgetGraph, oracle_gg: GadgetGraph,
                 rails_continue: bool = False):
        g, og = finite_gg.graph, oracle_gg.graph
        horizon = finite_gg.pair.horizon
        for label, vid in finite_gg.ids.items():
            ovid = oracle_gg.id_of(label)
            fin = {oracle_gg.id_of(finite_gg.label_of(u))
                   for u in g.neighbors(vid)}
            orc = set(og.neighbors(ovid))
            if rails_continue and label[0] in ("l", "r") \
                    and label[2] == horizon - 1:
                # rails of untouched columns run past the finite horizon
                orc.discard(oracle_gg.id_of((label[0], label[1], horizon)))
            assert fin == orc, f"mismatch at {label}"

    def test_ladder(self, rng):
        for _ in range(10):
            p = random_injection_pair(rng)
            self._compare(build_ladder(p), build_ladder_oracle(p),
                          rails_continue=True)

    def test_h2(self, rng):
        for _ in range(10):
            p = random_injection_pair(rng)
            self._compare(build_h2(p), build_h2_oracle(p))

    def test_hd(self, rng):
        for _ in range(10):
            p = random_injection_pair(rng)
            self._compare(build_hd(p, 3), build_hd_oracle(p, 3))

    def test_unmentioned_ids_isolated(self):
        # column 0 is hit by f, so it never grows a midpoint vertex:
        # the id reserved for ("m", 0, 0) stays isolated
        p = InjectionPair(f=(0,), g=(1,), horizon=3)
        gg = build_ladder_oracle(p)
        assert gg.graph.neighbors(gg.id_of(("m", 0, 0))) == ()


class TestExtractSeparator:
    def test_contract_on_randoms(self, rng):
        for _ in range(25):
            p = random_injection_pair(rng)
            for build in (build_h2, build_ladder):
                gg = build(p)
                X = extract_separator(gg, color_degree_two(gg.graph))
                assert separator_ok(p, X)
            for d in (3, 4):
                gg = build_hd(p, d)
                X = extract_separator(gg, brooks_color(gg.graph, d))
                assert separator_ok(p, X)

    def test_improper_coloring_rejected(self):
        p = InjectionPair(f=(0,), g=(1,), horizon=2)
        gg = build_h2(p)
        bad = Coloring({v: 0 for v in range(gg.graph.n)}, 2)
        with pytest.raises(ValueError):
            extract_separator(gg, bad)
