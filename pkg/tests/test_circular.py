from fractions import Fraction
from random import Random

import pytest

from sgcirc import (
    NEG,
    POS,
    Coloring,
    PQ,
    bipartite_four_coloring,
    bm,
    bq_odd,
    brute_force_chi_c,
    brute_force_decide,
    build_graph,
    candidate_grid,
    chi_c,
    decide_colorable,
    mycielski_cycle,
    sample_coloring,
    s_construction,
    verify_coloring,
)
from sgcirc.errors import (
    InvalidPQError,
    NoCandidateColorableError,
    NotBipartiteError,
    PartialAssignmentError,
    TooLargeError,
)

from conftest import dense_signed_graph


def cycle_graph(n, signs=None):
    signs = signs or [NEG] * n
    return build_graph(n, [(i, (i + 1) % n, signs[i]) for i in range(n)])


def k_n(n):
    return build_graph(n, [(u, v, NEG) for u in range(n) for v in range(u + 1, n)])


class TestPQ:
    def test_invariants(self):
        with pytest.raises(InvalidPQError):
            PQ(5, 2)  # odd p
        with pytest.raises(InvalidPQError):
            PQ(2, 2)  # p < 2q
        with pytest.raises(InvalidPQError):
            PQ(4, 0)

    def test_canonical(self):
        assert PQ(20, 8).canonical() == PQ(10, 4)  # 5/2 has odd numerator
        assert PQ(12, 4).canonical() == PQ(6, 2)
        assert PQ.from_value(Fraction(4)) == PQ(4, 1)


class TestVerifyColoring:
    def test_bipartite_two_point_coloring(self):
        g = bq_odd(2, 1)
        assert verify_coloring(g, bipartite_four_coloring(g))

    def test_negative_edge_needs_separation(self):
        g = build_graph(2, [(0, 1, NEG)])
        assert not verify_coloring(g, Coloring(PQ(4, 1), (0, 0)))

    def test_positive_edge_allows_equality(self):
        g = build_graph(2, [(0, 1, POS)])
        assert verify_coloring(g, Coloring(PQ(4, 2), (0, 0)))

    def test_partial_assignment(self):
        with pytest.raises(PartialAssignmentError):
            verify_coloring(cycle_graph(3), Coloring(PQ(4, 1), (0, 1)))


class TestDecideColorable:
    def test_negative_k2_at_two(self):
        coloring = decide_colorable(build_graph(2, [(0, 1, NEG)]), PQ(4, 2))
        assert coloring is not None and coloring.assign == (0, 2)

    def test_grotzsch_refuted_below_four(self):
        assert decide_colorable(mycielski_cycle(2, 2), PQ(30, 8)) is None

    def test_bq23_colorable_at_four(self):
        assert decide_colorable(bq_odd(2, 1), PQ(4, 1)) is not None

    def test_scale_invariance(self):
        rng = Random(3001)
        for _ in range(40):
            g = dense_signed_graph(rng, n_max=6)
            for pq in (PQ(6, 2), PQ(10, 4), PQ(4, 1)):
                doubled = PQ(2 * pq.p, 2 * pq.q)
                assert (decide_colorable(g, pq) is None) == \
                       (decide_colorable(g, doubled) is None)

    def test_rotation_invariance(self):
        g = cycle_graph(5)
        coloring = decide_colorable(g, PQ(10, 4))
        for t in range(10):
            assert verify_coloring(g, coloring.rotated(t))


class TestChiC:
    def test_k2(self):
        assert chi_c(build_graph(2, [(0, 1, NEG)])).value == 2

    def test_k4(self):
        result = chi_c(k_n(4), upper=Fraction(4))
        assert result.value == 4
        assert all(pq.r < 4 for pq in result.refuted)

    def test_edgeless_defined_as_two(self):
        assert chi_c(build_graph(3, [])).value == 2

    def test_s_formula_small(self):
        assert chi_c(s_construction(build_graph(2, [(0, 1, NEG)]))).value == Fraction(8, 3)
        assert chi_c(s_construction(k_n(3))).value == 3

    def test_s_formula_c5(self):
        # 4 - 4/(5/2 + 1) = 20/7
        result = chi_c(s_construction(cycle_graph(5)), q_max=7)
        assert result.value == Fraction(20, 7)

    def test_certificate_and_refuted_are_consistent(self):
        g = cycle_graph(5)
        result = chi_c(g, q_max=4, upper=Fraction(4))
        assert verify_coloring(g, result.certificate)
        assert all(pq.r < result.value for pq in result.refuted)

    def test_no_candidate_colorable(self):
        with pytest.raises(NoCandidateColorableError):
            chi_c(k_n(4), q_max=1, upper=Fraction(3))

    def test_threads_match_sequential(self):
        g = cycle_graph(5, [NEG, NEG, NEG, NEG, POS])
        seq = chi_c(g, q_max=4, upper=Fraction(4))
        par = chi_c(g, q_max=4, upper=Fraction(4), threads=4)
        assert seq == par


class TestBipartiteFourColoring:
    def test_families(self):
        for g in (bq_odd(2, 1), bm(2, 2)):
            coloring = bipartite_four_coloring(g)
            assert coloring.pq == PQ(4, 1)
            assert verify_coloring(g, coloring)

    def test_every_bipartite_family_instance_colorable_at_four(self):
        import itertools
        instances = [bq_odd(ell, k) for ell, k in
                     itertools.product((2, 3), (1, 2, 3))]
        instances += [bm(ell, k) for ell, k in itertools.product((1, 2, 3), (2, 3))]
        for g in instances:
            coloring = bipartite_four_coloring(g)
            assert verify_coloring(g, coloring)
            assert decide_colorable(g, PQ(4, 1)) is not None

    def test_not_bipartite(self):
        with pytest.raises(NotBipartiteError):
            bipartite_four_coloring(cycle_graph(3))


class TestCandidateGrid:
    def test_qmax_four_upper_four(self):
        grid = candidate_grid(4, Fraction(4))
        values = [pq.r for pq in grid]
        assert values == sorted(values)
        assert len(set(values)) == len(values)
        assert values == [Fraction(x) for x in
                          ("2", "5/2", "8/3", "3", "10/3", "7/2", "4")]
        assert grid[1] == PQ(10, 4)  # 5/2 needs doubling for even p

    def test_bounds_validated(self):
        with pytest.raises(InvalidPQError):
            candidate_grid(0, Fraction(4))
        with pytest.raises(InvalidPQError):
            candidate_grid(3, Fraction(1))


class TestBruteForce:
    def test_k2(self):
        assert brute_force_chi_c(build_graph(2, [(0, 1, NEG)]), 4, Fraction(4)) == 2

    def test_c5(self):
        assert brute_force_chi_c(cycle_graph(5), 4, Fraction(4)) == Fraction(5, 2)

    def test_size_guard(self):
        with pytest.raises(TooLargeError):
            brute_force_chi_c(k_n(9), 4, Fraction(4))

    def test_c4_one_positive_matches_engine(self):
        g = cycle_graph(4, [POS, NEG, NEG, NEG])
        assert chi_c(g, q_max=4, upper=Fraction(4)).value == \
            brute_force_chi_c(g, 4, Fraction(4))

    def test_decide_agrees_with_engine(self):
        rng = Random(3011)
        for _ in range(30):
            g = dense_signed_graph(rng, n_max=6)
            for pq in (PQ(4, 1), PQ(6, 2), PQ(10, 4)):
                assert (brute_force_decide(g, pq) is None) == \
                       (decide_colorable(g, pq) is None)


class TestSampling:
    def test_sampled_colorings_verify_and_vary(self):
        g = cycle_graph(6)
        rng = Random(3021)
        seen = set()
        for _ in range(20):
            coloring = sample_coloring(g, PQ(10, 4), rng)
            assert coloring is not None and verify_coloring(g, coloring)
            seen.add(coloring.assign)
        assert len(seen) > 1

    def test_uncolorable_returns_none(self):
        assert sample_coloring(cycle_graph(3), PQ(4, 2), Random(1)) is None
