import pytest

import gpmcdiag as gd
from gpmcdiag import InputError

from brute import pmc_brute_diagnosability
from gallery import full_gallery, is_connected, min_edge_max_degree

# Values established by literal syndrome-set enumeration (see the brute
# module and the distinguishability sweeps); frozen here as ground truth.
EXPECTED_EDGE_RESTRICTED = {
    2: {0: 1, 1: 0, 2: 0},
    3: {0: 3, 1: 2, 2: 0, 3: 0},
    4: {0: 4, 1: 3, 2: 2, 3: 0, 4: 0},
}
EXPECTED_SINGLE_VERTEX_EDGE = {2: 0, 3: 1, 4: 2}


class TestIsTsDiagnosable:
    def test_zero_bounds_always_diagnosable(self):
        for g in [gd.build_hypercube(2), gd.build_path(4), gd.build_complete(4)]:
            assert gd.is_ts_diagnosable(g, 0, 0).diagnosable

    def test_q3_two_one_holds(self, q3):
        assert gd.is_ts_diagnosable(q3, 2, 1).diagnosable

    def test_q3_three_one_fails_with_witness(self, q3):
        result = gd.is_ts_diagnosable(q3, 3, 1)
        assert not result.diagnosable
        p1, p2 = result.witness
        assert not gd.distinguishable(q3, p1, p2).distinguishable
        assert not gd.distinguishable_oracle(q3, p1, p2)
        assert len(p1.faulty_vertices) <= 3 and len(p2.faulty_vertices) <= 3
        assert len(p1.faulty_edges) <= 1 and len(p2.faulty_edges) <= 1

    def test_negative_bounds_rejected(self, q2):
        with pytest.raises(InputError):
            gd.is_ts_diagnosable(q2, -1, 0)

    def test_methods_agree_on_grid(self):
        graphs = [gd.build_hypercube(2), gd.build_cycle(4), gd.build_cycle(6),
                  gd.build_complete(4), gd.build_path(4),
                  gd.build_random(6, 0.5, 61), gd.build_random(7, 0.5, 8)]
        for g in graphs:
            for t in range(0, 4):
                for s in range(0, 3):
                    full = gd.is_ts_diagnosable(g, t, s, method="full")
                    local = gd.is_ts_diagnosable(g, t, s, method="local")
                    audit = gd.is_ts_diagnosable(g, t, s, method="local", audit=True)
                    assert full.diagnosable == local.diagnosable == audit.diagnosable, \
                        (g.name, t, s)

    def test_methods_agree_on_q3_levels(self, q3):
        for (t, s) in [(2, 1), (3, 1), (1, 2), (3, 0), (4, 0)]:
            assert (gd.is_ts_diagnosable(q3, t, s, method="full").diagnosable
                    == gd.is_ts_diagnosable(q3, t, s, method="local").diagnosable)

    def test_antipodal_split_defeats_the_four_cycle(self):
        # the (2,0) witness spans the whole cycle; a purely neighborhood-local
        # enumeration would miss it, the difference-structure search must not
        c4 = gd.build_cycle(4)
        for method in ("full", "local"):
            result = gd.is_ts_diagnosable(c4, 2, 0, method=method)
            assert not result.diagnosable
            f1 = result.witness[0].faulty_vertices
            f2 = result.witness[1].faulty_vertices
            assert f1 | f2 == {0, 1, 2, 3} and f1 & f2 == set()

    def test_monotonicity(self):
        for g in [gd.build_hypercube(2), gd.build_complete(4), gd.build_random(6, 0.5, 82)]:
            table = {(t, s): gd.is_ts_diagnosable(g, t, s).diagnosable
                     for t in range(4) for s in range(3)}
            for (t, s), ok in table.items():
                if not ok:
                    for t2 in range(t, 4):
                        for s2 in range(s, 3):
                            assert not table[(t2, s2)]

    def test_parallel_matches_sequential(self, q4):
        seq = gd.is_ts_diagnosable(q4, 3, 1, audit=True, jobs=1)
        par = gd.is_ts_diagnosable(q4, 3, 1, audit=True, jobs=4)
        assert seq.diagnosable == par.diagnosable
        assert seq.stats == par.stats
        assert seq.witness == par.witness


class TestEdgeRestricted:
    @pytest.mark.parametrize("n", [2, 3])
    def test_hypercube_values_full_enumeration(self, n):
        g = gd.build_hypercube(n)
        for h, expected in EXPECTED_EDGE_RESTRICTED[n].items():
            rep = gd.edge_restricted_diagnosability(g, h, method="full")
            assert rep.value == expected, (n, h)
            assert rep.stats["method"] == "full"

    def test_q4_values_with_local_pruning(self, q4):
        for h, expected in EXPECTED_EDGE_RESTRICTED[4].items():
            rep = gd.edge_restricted_diagnosability(q4, h)
            assert rep.value == expected, h
            assert rep.stats["method"] == "local"

    def test_witness_attached_and_revalidates(self, q3):
        rep = gd.edge_restricted_diagnosability(q3, 1)
        p1, p2 = rep.witness
        assert not gd.distinguishable_oracle(q3, p1, p2)
        assert max(len(p1.faulty_vertices), len(p2.faulty_vertices)) <= rep.value + 1
        assert max(len(p1.faulty_edges), len(p2.faulty_edges)) <= 1

    def test_beyond_min_degree_is_flagged(self):
        g = gd.build_path(3)
        rep = gd.edge_restricted_diagnosability(g, 2)
        assert rep.outside_analyzed_range
        assert gd.edge_restricted_diagnosability(g, 1).outside_analyzed_range is False

    def test_bad_budget_rejected(self, q2):
        with pytest.raises(InputError):
            gd.edge_restricted_diagnosability(q2, 5)
        with pytest.raises(InputError):
            gd.edge_restricted_diagnosability(q2, -1)

    def test_empty_graph_rejected(self):
        with pytest.raises(InputError):
            gd.edge_restricted_diagnosability(gd.Graph(0, []), 0)

    def test_stats_accumulate(self, q3):
        rep = gd.edge_restricted_diagnosability(q3, 1, method="full")
        assert rep.stats["pairs_examined"] > 0
        assert rep.elapsed_seconds >= 0


class TestVertexRestricted:
    def test_zero_budget_is_edge_count_without_search(self, q3):
        rep = gd.vertex_restricted_edge_diagnosability(q3, 0)
        assert rep.value == 12
        assert rep.stats == {"method": "analytic"}
        assert rep.witness is None

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_hypercube_single_vertex_values(self, n):
        g = gd.build_hypercube(n)
        rep = gd.vertex_restricted_edge_diagnosability(g, 1)
        assert rep.value == EXPECTED_SINGLE_VERTEX_EDGE[n]

    def test_witness_revalidates(self, q3):
        rep = gd.vertex_restricted_edge_diagnosability(q3, 1)
        p1, p2 = rep.witness
        assert not gd.distinguishable_oracle(q3, p1, p2)
        assert max(len(p1.faulty_edges), len(p2.faulty_edges)) == rep.value + 1

    def test_single_vertex_graph_has_no_workable_budget(self):
        g = gd.Graph(1, [])
        rep = gd.vertex_restricted_edge_diagnosability(g, 1)
        assert rep.value == -1

    def test_negative_budget_rejected(self, q2):
        with pytest.raises(InputError):
            gd.vertex_restricted_edge_diagnosability(q2, -1)


class TestPmcDiagnosability:
    def test_two_mutually_testing_nodes(self):
        # either node alone explains the both-fail syndrome, so one faulty
        # node is already ambiguous
        k2 = gd.build_hypercube(1)
        assert gd.pmc_diagnosability(k2) == 0

    @pytest.mark.parametrize("n,expected", [(2, 1), (3, 3)])
    def test_hypercubes(self, n, expected):
        assert gd.pmc_diagnosability(gd.build_hypercube(n)) == expected

    def test_matches_independent_brute_force(self):
        graphs = [gd.build_hypercube(1), gd.build_hypercube(2), gd.build_path(4),
                  gd.build_cycle(5), gd.build_complete(4), gd.build_complete(5),
                  gd.build_random(6, 0.5, 61), gd.build_random(7, 0.5, 65)]
        for g in graphs:
            assert gd.pmc_diagnosability(g) == pmc_brute_diagnosability(g), g.name


class TestAnalyticBounds:
    def test_q4_budget_one(self, q4):
        b = gd.analytic_upper_bounds(q4, 1)
        assert b.t_h_bound == 3 and b.s1_bound == 2

    def test_q3_at_full_degree(self, q3):
        assert gd.analytic_upper_bounds(q3, 3).t_h_bound == 0

    def test_q2_budget_zero(self, q2):
        assert gd.analytic_upper_bounds(q2, 0).t_h_bound == 2

    def test_clamped_at_zero(self):
        g = gd.build_path(3)
        assert gd.analytic_upper_bounds(g, 1).s1_bound == 0

    def test_beyond_min_degree_rejected(self, q3):
        with pytest.raises(InputError):
            gd.analytic_upper_bounds(q3, 4)

    def test_bounds_hold_across_gallery(self):
        for g in full_gallery():
            delta = gd.min_degree(g)
            for h in range(delta + 1):
                rep = gd.edge_restricted_diagnosability(g, h)
                assert rep.value <= gd.analytic_upper_bounds(g, h).t_h_bound, (g.name, h)


class TestVertexSeededWitness:
    def test_q3_worked_example(self, q3):
        # neighbors of 000 ascending: 001, 010, 100; budget 1 blames the
        # first edge and keeps the last two neighbors faulty
        p1, p2 = gd.construct_indistinguishable_witness(q3, 0, 1)
        assert p1.faulty_vertices == {0, 2, 4} and p1.faulty_edges == set()
        assert p2.faulty_vertices == {2, 4} and p2.faulty_edges == {(0, 1)}

    def test_q2_full_budget(self, q2):
        p1, p2 = gd.construct_indistinguishable_witness(q2, 0, 2)
        assert p1.faulty_vertices == {0} and p1.faulty_edges == set()
        assert p2.faulty_vertices == set()
        assert p2.faulty_edges == {(0, 1), (0, 2)}

    def test_every_vertex_and_budget_on_small_hypercubes(self, q2, q3):
        for g in (q2, q3):
            for u in range(g.vertex_count):
                for h in range(0, gd.degree(g, u) + 1):
                    p1, p2 = gd.construct_indistinguishable_witness(g, u, h)
                    assert not gd.distinguishable(g, p1, p2).distinguishable
                    assert not gd.distinguishable_oracle(g, p1, p2)

    def test_budget_beyond_degree_rejected(self, q3):
        with pytest.raises(InputError):
            gd.construct_indistinguishable_witness(q3, 0, 4)

    def test_sizes_prove_the_bound(self, q4):
        for h in range(0, 5):
            p1, p2 = gd.construct_indistinguishable_witness(q4, 0, h)
            assert len(p1.faulty_vertices) == 4 - h + 1
            assert len(p2.faulty_vertices) == 4 - h
            assert len(p2.faulty_edges) == h


class TestEdgeSeededWitness:
    def test_q3_symmetric_blame(self, q3):
        p1, p2 = gd.construct_edge_witness(q3, (0, 1))
        assert p1.faulty_vertices == {0}
        assert p1.faulty_edges == {(1, 3), (1, 5)}
        assert p2.faulty_vertices == {1}
        assert p2.faulty_edges == {(0, 2), (0, 4)}

    def test_every_edge_of_small_hypercubes(self, q2, q3):
        for g in (q2, q3):
            delta = gd.min_degree(g)
            for e in g.edges:
                p1, p2 = gd.construct_edge_witness(g, e)
                assert not gd.distinguishable(g, p1, p2).distinguishable
                assert not gd.distinguishable_oracle(g, p1, p2)
                assert len(p1.faulty_edges) == delta - 1
                assert len(p2.faulty_edges) == delta - 1

    def test_oracle_cross_check_on_q2(self, q2):
        for e in q2.edges:
            p1, p2 = gd.construct_edge_witness(q2, e)
            assert not gd.distinguishable_enumerated(q2, p1, p2)

    def test_requires_min_degree_endpoint(self):
        # triangle with a pendant: edge 1-2 joins two degree-3... both
        # non-minimum endpoints must be rejected
        g = gd.Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)], name="paw")
        with pytest.raises(InputError):
            gd.construct_edge_witness(g, (0, 1))
        p1, p2 = gd.construct_edge_witness(g, (2, 3))  # 3 has min degree
        assert p1.faulty_vertices == {3}

    def test_non_edge_rejected(self, q3):
        with pytest.raises(InputError):
            gd.construct_edge_witness(q3, (0, 7))


def test_gallery_satisfies_selection_conditions():
    for g in full_gallery():
        assert g.vertex_count <= 8
        assert is_connected(g)
        assert gd.min_degree(g) >= 2
        assert min_edge_max_degree(g) == gd.min_degree(g)
