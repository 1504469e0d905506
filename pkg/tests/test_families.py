import itertools

import pytest

from sgcirc import (
    NEG,
    POS,
    Apex,
    Grid,
    Rung,
    build_graph,
    bm,
    bq_even,
    bq_odd,
    cylinder,
    is_bipartite,
    mobius_ladder,
    mycielski_cycle,
    s_construction,
    validate,
)
from sgcirc.errors import BadParamsError
from sgcirc.families import Family, FamilyParams, make_family
from sgcirc.girth import enumerate_simple_cycles


def vertex_counts(g):
    return g.n, g.m


class TestCylinder:
    def test_counts(self):
        g = cylinder(3, 5)
        assert vertex_counts(g) == (15, 20)

    def test_single_layer_has_no_edges(self):
        g = cylinder(1, 5)
        assert vertex_counts(g) == (5, 0)

    def test_two_layers_all_degree_two(self):
        g = cylinder(2, 3)
        assert all(g.degree(v) == 2 for v in range(g.n))

    def test_grid_labels(self):
        g = cylinder(2, 4)
        assert g.labels[0] == Grid(1, 1)
        assert g.labels[7] == Grid(2, 4)

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            cylinder(0, 5)
        with pytest.raises(BadParamsError):
            cylinder(2, 2)

    def test_isomorphic_to_categorical_product(self):
        # explicit isomorphism v_{i,j} -> (i, (2j + i) mod m) onto P_ell x C_m
        for ell, k in itertools.product(range(2, 5), range(1, 5)):
            m = 2 * k + 1
            g = cylinder(ell, m)
            product_edges = set()
            for i in range(1, ell):
                for a in range(m):
                    for delta in (-1, 1):
                        key = frozenset({(i, a), (i + 1, (a + delta) % m)})
                        product_edges.add(key)
            mapped = set()
            for u, v, _ in g.edges:
                lu, lv = g.labels[u], g.labels[v]
                mapped.add(frozenset({(lu.layer, (2 * lu.index + lu.layer) % m),
                                      (lv.layer, (2 * lv.index + lv.layer) % m)}))
            assert mapped == product_edges


class TestMycielski:
    def test_m1c3_is_k4(self):
        g = mycielski_cycle(1, 1)
        assert vertex_counts(g) == (4, 6)
        assert all(g.degree(v) == 3 for v in range(4))

    def test_m2c5_is_grotzsch(self):
        g = mycielski_cycle(2, 2)
        assert vertex_counts(g) == (11, 20)
        assert all(len(c) > 3 for c, _ in enumerate_simple_cycles(g, length_cap=3))

    def test_first_layer_chords_form_odd_cycle(self):
        for k in (1, 2, 3):
            g = mycielski_cycle(2, k)
            m = 2 * k + 1
            chord_edges = [(u, v) for u, v, _ in g.edges
                           if isinstance(g.labels[u], Grid) and isinstance(g.labels[v], Grid)
                           and g.labels[u].layer == 1 and g.labels[v].layer == 1]
            assert len(chord_edges) == m
            adj = {}
            for u, v in chord_edges:
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
            assert all(len(nbrs) == 2 for nbrs in adj.values()) and len(adj) == m
            # one single cycle, not a union of shorter ones
            prev, cur = None, chord_edges[0][0]
            for steps in range(1, m + 1):
                prev, cur = cur, [w for w in adj[cur] if w != prev][0]
                if cur == chord_edges[0][0]:
                    break
            assert steps == m

    def test_without_apex_and_chords_equals_cylinder(self):
        g = mycielski_cycle(3, 2)
        base = cylinder(3, 5)
        layer_edges = {(u, v) for u, v, _ in g.edges
                       if isinstance(g.labels[u], Grid) and isinstance(g.labels[v], Grid)
                       and g.labels[u].layer != g.labels[v].layer}
        assert layer_edges == {(u, v) for u, v, _ in base.edges}

    def test_all_negative_and_non_bipartite(self):
        g = mycielski_cycle(2, 2)
        assert g.is_all_negative()
        assert is_bipartite(g) is None


class TestBQOdd:
    def test_bq23_is_k34_with_positive_matching(self):
        g = bq_odd(2, 1)
        assert vertex_counts(g) == (7, 12)
        parts = is_bipartite(g)
        assert parts is not None
        assert sorted(len(p) for p in parts) == [3, 4]
        positives = [e for e in g.edges if e.sign is POS]
        assert len(positives) == 3
        matched = {v for e in positives for v in (e.u, e.v)}
        assert len(matched) == 6
        degs = sorted(g.degree(v) for v in range(g.n))
        assert degs == [3, 3, 3, 3, 4, 4, 4]

    def test_order_formula(self):
        assert bq_odd(3, 2).n == 3 * 5 + 1 == 16

    def test_always_bipartite(self):
        for ell, k in itertools.product(range(2, 5), range(1, 4)):
            assert is_bipartite(bq_odd(ell, k)) is not None

    def test_apex_label(self):
        g = bq_odd(2, 2)
        assert isinstance(g.labels[-1], Apex)

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            bq_odd(1, 2)
        with pytest.raises(BadParamsError):
            bq_odd(2, 0)


class TestBQEven:
    def test_counts(self):
        assert vertex_counts(bq_even(3, 2))[0] == 13
        assert bq_even(4, 3).n == 25

    def test_chord_count_per_layer(self):
        g = bq_even(3, 2)
        for layer in (1, 2):
            chords = [(u, v) for u, v, _ in g.edges
                      if isinstance(g.labels[u], Grid) and isinstance(g.labels[v], Grid)
                      and g.labels[u].layer == layer and g.labels[v].layer == layer]
            assert len(chords) == 2

    def test_all_negative_non_bipartite(self):
        for ell, k in itertools.product(range(2, 4), range(2, 4)):
            g = bq_even(ell, k)
            assert g.is_all_negative()
            assert is_bipartite(g) is None

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            bq_even(2, 1)


class TestBM:
    def test_counts(self):
        assert bm(2, 2).n == 11  # 8 grid + 2 rungs + apex
        assert bm(2, 3).n == 16

    def test_rung_signs(self):
        g = bm(2, 2)
        width = 4
        rung_1 = 2 * width  # u_1
        nbr_signs = {g.labels[w]: s for w, s in g.neighbors(rung_1)}
        assert nbr_signs[Grid(1, 1)] is NEG
        assert nbr_signs[Grid(1, 2)] is NEG
        assert nbr_signs[Grid(1, 3)] is POS
        assert nbr_signs[Grid(1, 4)] is POS

    def test_bipartite(self):
        for ell, k in itertools.product(range(2, 4), range(2, 4)):
            assert is_bipartite(bm(ell, k)) is not None

    def test_labels(self):
        g = bm(2, 2)
        assert isinstance(g.labels[8], Rung) and g.labels[8].index == 1
        assert isinstance(g.labels[-1], Apex)
        assert validate(g) == []


class TestVertexCountFormulas:
    def test_all_families(self):
        for ell, k in itertools.product(range(1, 7), range(1, 7)):
            if k >= 3:
                assert cylinder(ell, k).n == ell * k
            assert mycielski_cycle(ell, k).n == ell * (2 * k + 1) + 1
            if ell >= 2:
                assert bq_odd(ell, k).n == ell * (2 * k + 1) + 1
                if k >= 2:
                    assert bq_even(ell, k).n == 2 * k * ell + 1
                    assert bm(ell, k).n == 2 * k * ell + k + 1


class TestMobiusLadder:
    def test_counts_and_regularity(self):
        g = mobius_ladder(2)
        assert vertex_counts(g) == (8, 12)
        assert all(g.degree(v) == 3 for v in range(8))

    def test_k1_is_k4(self):
        g = mobius_ladder(1)
        assert vertex_counts(g) == (4, 6)

    def test_contains_5_cycle_for_k2(self):
        lengths = {len(c) for c, _ in enumerate_simple_cycles(mobius_ladder(2))}
        assert 5 in lengths

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            mobius_ladder(0)


class TestSConstruction:
    def test_k3_counts(self):
        k3 = build_graph(3, [(0, 1, NEG), (1, 2, NEG), (0, 2, NEG)])
        s = s_construction(k3)
        assert vertex_counts(s) == (9, 12)

    def test_k2_gives_negative_4_cycle(self):
        s = s_construction(build_graph(2, [(0, 1, NEG)]))
        assert vertex_counts(s) == (4, 4)
        cycles = list(enumerate_simple_cycles(s))
        assert len(cycles) == 1
        assert cycles[0][1] is NEG

    def test_each_gadget_cycle_negative(self):
        k3 = build_graph(3, [(0, 1, NEG), (1, 2, NEG), (0, 2, NEG)])
        for cycle, sign in enumerate_simple_cycles(s_construction(k3), length_cap=4):
            if len(cycle) == 4:
                assert sign is NEG

    def test_always_bipartite(self):
        k3 = build_graph(3, [(0, 1, NEG), (1, 2, NEG), (0, 2, NEG)])
        assert is_bipartite(s_construction(k3)) is not None

    def test_input_signs_ignored(self):
        a = s_construction(build_graph(2, [(0, 1, NEG)]))
        b = s_construction(build_graph(2, [(0, 1, POS)]))
        assert a.edges == b.edges


class TestMakeFamily:
    def test_dispatch(self):
        g = make_family(FamilyParams(Family.BQ_EVEN, 3, 2))
        assert g.n == 13

    def test_s_of_needs_base(self):
        with pytest.raises(BadParamsError):
            make_family(FamilyParams(Family.S_CONSTRUCTION))
