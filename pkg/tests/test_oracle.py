"""Tests for the exhaustive labeling oracle."""

import pytest

from errors import SearchInvariantError
from graphs import (
    complete_graph,
    connected_graphs,
    is_eulerian,
    make_graph,
    nonisomorphic_trees,
    path_graph,
    random_graph,
    wheel_graph,
)
from labeling import LabelingKind, verify
from oracle import (
    Decision,
    SearchConfig,
    decide,
    decide_with_symmetry,
    enumerate_labelings,
    naive_exists,
    naive_witnesses,
)
from oracle import search as search_module

H = LabelingKind.h_cordial()
SEMI_H = LabelingKind.semi_h_cordial()
ZERO_M = LabelingKind.zero_m_cordial()
H2 = LabelingKind.hk_cordial(2)

PRUNING = [(True, True), (True, False), (False, True), (False, False)]


class TestDecide:
    def test_k3_exhausts_all_eight_assignments(self, k3):
        outcome = decide(k3, SearchConfig.naive(H))
        assert outcome.decision is Decision.EXHAUSTED
        assert outcome.statistics.assignments == 8
        assert outcome.witness is None

    def test_k3_symmetry_halves_the_space(self, k3):
        outcome = decide_with_symmetry(k3, SearchConfig.naive(H))
        assert outcome.decision is Decision.EXHAUSTED
        assert outcome.statistics.assignments == 4

    @pytest.mark.parametrize("n", [2, 4, 6, 8])
    def test_even_trees_are_not_semi_h_cordial(self, n):
        for tree in nonisomorphic_trees(n):
            assert decide(tree, SearchConfig(SEMI_H)).decision is Decision.EXHAUSTED

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_odd_trees_are_semi_h_cordial(self, n):
        for tree in nonisomorphic_trees(n):
            assert decide(tree, SearchConfig(SEMI_H)).found

    def test_canonical_c4_zero_m_witness(self, c4):
        outcome = decide(c4, SearchConfig(ZERO_M))
        assert outcome.found
        assert outcome.witness.labels == (-1, 1, 1, -1)

    def test_symmetric_witness_starts_positive(self, c4):
        outcome = decide_with_symmetry(c4, SearchConfig(ZERO_M))
        assert outcome.witness.labels == (1, -1, -1, 1)

    def test_k4_found_and_verified(self):
        outcome = decide(complete_graph(4), SearchConfig(H, limit=5))
        assert outcome.found
        assert len(outcome.witnesses) == 1
        assert verify(outcome.witness, H).valid

    def test_even_wheel_exhausted(self):
        assert decide(wheel_graph(4), SearchConfig(H)).decision is Decision.EXHAUSTED

    def test_edgeless_graphs(self):
        assert decide(make_graph(1, []), SearchConfig(H)).decision is Decision.EXHAUSTED
        assert decide(make_graph(1, []), SearchConfig(ZERO_M)).found

    def test_budget_gives_undecided(self):
        outcome = decide(complete_graph(6), SearchConfig.naive(H, budget=5))
        assert outcome.decision is Decision.UNDECIDED
        assert outcome.truncated
        assert outcome.statistics.nodes <= 5

    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_budget_bounds_total_work(self, workers):
        cfg = SearchConfig.naive(H, budget=1000, workers=workers)
        outcome = decide(complete_graph(6), cfg)
        assert outcome.decision is Decision.UNDECIDED
        assert 0 < outcome.statistics.nodes <= 1000
        baseline = decide(complete_graph(6), SearchConfig.naive(H, budget=1000, workers=1))
        assert outcome.statistics.nodes == baseline.statistics.nodes

    def test_budget_shares_follow_task_order(self):
        assert search_module._task_caps(10, 4) == [3, 3, 2, 2]
        assert search_module._task_caps(2, 4) == [1, 1, 0, 0]
        assert search_module._task_caps(None, 2) == [None, None]

    def test_render_and_dict(self, c4):
        outcome = decide(c4, SearchConfig(ZERO_M))
        assert outcome.to_dict()["decision"] == "found"
        assert "witness 1: -1 +1 +1 -1" in outcome.render()

    def test_bad_witness_raises(self, c4, monkeypatch):
        monkeypatch.setattr(search_module._Search, "accepts", lambda self: True)
        with pytest.raises(SearchInvariantError):
            decide(c4, SearchConfig.naive(H))


class TestEnumerate:
    def test_c4_has_two_zero_m_labelings(self, c4):
        outcome = enumerate_labelings(c4, SearchConfig(ZERO_M, limit=None))
        assert [w.labels for w in outcome.witnesses] == [(-1, 1, 1, -1), (1, -1, -1, 1)]

    def test_single_edge_has_none(self):
        outcome = enumerate_labelings(path_graph(2), SearchConfig(H, limit=None))
        assert outcome.decision is Decision.EXHAUSTED
        assert outcome.witnesses == ()

    def test_limit_caps_witnesses(self):
        outcome = enumerate_labelings(complete_graph(4), SearchConfig(H, limit=3))
        assert len(outcome.witnesses) == 3

    def test_matches_naive_enumeration(self):
        g = complete_graph(4)
        outcome = enumerate_labelings(g, SearchConfig(H, limit=None))
        assert list(outcome.witnesses) == naive_witnesses(g, H)

    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_results_do_not_depend_on_workers(self, workers):
        g = wheel_graph(5)
        baseline = enumerate_labelings(g, SearchConfig(H, limit=None, workers=1))
        outcome = enumerate_labelings(g, SearchConfig(H, limit=None, workers=workers))
        assert outcome.witnesses == baseline.witnesses
        assert outcome.statistics.nodes == baseline.statistics.nodes
        assert outcome.statistics.prunes == baseline.statistics.prunes

    @pytest.mark.parametrize("workers", [1, 2, 8])
    def test_canonical_witness_does_not_depend_on_workers(self, workers):
        g = wheel_graph(7)
        baseline = decide(g, SearchConfig(H, workers=1))
        outcome = decide(g, SearchConfig(H, workers=workers))
        assert outcome.witness == baseline.witness

    def test_non_canonical_still_verifies(self):
        outcome = decide(wheel_graph(7), SearchConfig(H, canonical=False, workers=4))
        assert outcome.found
        assert verify(outcome.witness, H).valid


class TestAgainstNaive:
    @pytest.mark.parametrize("kind", [H, SEMI_H, ZERO_M], ids=str)
    def test_pruned_search_agrees(self, kind):
        for g in connected_graphs(5):
            assert decide(g, SearchConfig(kind)).found == naive_exists(g, kind), g.edges

    def test_zero_m_characterization(self):
        for g in connected_graphs(6):
            expected = is_eulerian(g) and g.m % 2 == 0
            assert decide(g, SearchConfig(ZERO_M)).found == expected, g.edges

    @pytest.mark.parametrize("prune_vertex,prune_cardinality", PRUNING)
    @pytest.mark.parametrize("kind", [H, SEMI_H, ZERO_M], ids=str)
    def test_every_pruning_configuration_agrees(self, kind, prune_vertex, prune_cardinality):
        cfg = SearchConfig(kind, prune_vertex=prune_vertex, prune_cardinality=prune_cardinality)
        for g in connected_graphs(5):
            assert decide(g, cfg).found == naive_exists(g, kind), g.edges

    @pytest.mark.slow
    @pytest.mark.parametrize("prune_vertex,prune_cardinality", PRUNING)
    def test_every_pruning_configuration_agrees_for_h2(self, prune_vertex, prune_cardinality):
        cfg = SearchConfig(H2, prune_vertex=prune_vertex, prune_cardinality=prune_cardinality)
        for g in connected_graphs(5):
            assert decide(g, cfg).found == naive_exists(g, H2), g.edges

    def test_symmetry_agrees(self):
        for g in connected_graphs(5):
            for kind in (H, SEMI_H):
                plain = decide(g, SearchConfig(kind)).found
                assert decide_with_symmetry(g, SearchConfig(kind)).found == plain


@pytest.mark.slow
def test_k5_h2_decision_completes():
    outcome = decide_with_symmetry(complete_graph(5), SearchConfig(H2))
    assert outcome.decision in (Decision.FOUND, Decision.EXHAUSTED)
    if outcome.found:
        assert verify(outcome.witness, H2).valid


@pytest.mark.slow
def test_decisions_do_not_depend_on_workers_on_random_graphs():
    for seed in range(50):
        g = random_graph(6, 0.5, seed=seed)
        for kind in (H, ZERO_M):
            baseline = decide(g, SearchConfig(kind, workers=1))
            for workers in (2, 8):
                outcome = decide(g, SearchConfig(kind, workers=workers))
                assert outcome.decision is baseline.decision, (seed, kind)
                assert outcome.witness == baseline.witness, (seed, kind)
