"""Tests for labelings, tallies, the four verifiers and the f* transform."""

import json

import pytest
from hypothesis import given, settings

from constructors import h_cordial_wheel
from errors import AlphabetError, GraphFormatError, LabelingError
from graphs import complete_graph, make_graph, path_graph
from labeling import (
    KindName,
    Labeling,
    LabelingKind,
    VerificationReport,
    check_handshake,
    induced_vertex_labels,
    is_valid,
    negate,
    parse_labeled,
    serialize_labeled,
    star_transform,
    tally,
    to_dot,
    verify,
)
from strategies import labelings

H = LabelingKind.h_cordial()
SEMI_H = LabelingKind.semi_h_cordial()
ZERO_M = LabelingKind.zero_m_cordial()
H2 = LabelingKind.hk_cordial(2)

HK_TREE = {(0, 1): 2, (0, 2): -1, (0, 3): -1, (0, 4): -1, (4, 5): 1, (4, 6): 1}


class TestLabelingModel:
    def test_induced_values_on_path(self):
        lab = Labeling(path_graph(3), (-1, 1))
        assert induced_vertex_labels(lab) == [-1, 0, 1]

    def test_isolated_vertex_induces_zero(self):
        lab = Labeling(make_graph(3, [(0, 1)]), (1,))
        assert induced_vertex_labels(lab) == [1, 1, 0]

    def test_label_count_mismatch(self, k3):
        with pytest.raises(LabelingError, match="2 labels for 3 edges"):
            Labeling(k3, (1, -1))

    def test_zero_label_rejected(self, k3):
        with pytest.raises(AlphabetError):
            Labeling(k3, (1, 0, -1))

    def test_from_edge_map_realigns(self, labeled):
        lab = labeled(3, {(2, 1): -1, (1, 0): 1})
        assert lab.labels == (1, -1)
        assert lab.label_of(2, 1) == -1

    def test_from_edge_map_requires_every_edge(self, k3):
        with pytest.raises(LabelingError, match="no label"):
            Labeling.from_edge_map(k3, {(0, 1): 1})

    def test_kind_names(self):
        assert str(H) == "HCordial"
        assert str(H2) == "HkCordial(2)"
        assert H2.label_values == (-2, -1, 1, 2)
        assert LabelingKind.from_dict(H2.to_dict()) == H2
        assert LabelingKind("semi-h").name is KindName.SEMI_H_CORDIAL

    def test_kind_rejects_k_for_non_hk(self):
        with pytest.raises(ValueError):
            LabelingKind(KindName.H_CORDIAL, 2)
        with pytest.raises(ValueError):
            LabelingKind.hk_cordial(0)

    @settings(max_examples=1000, deadline=None)
    @given(labelings(k=3, max_n=8))
    def test_handshake(self, lab):
        assert check_handshake(lab)

    @settings(max_examples=100, deadline=None)
    @given(labelings(k=1, max_n=8))
    def test_induced_parity_follows_degree(self, lab):
        induced = induced_vertex_labels(lab)
        degrees = lab.graph.degrees()
        assert all(value % 2 == d % 2 for value, d in zip(induced, degrees))


class TestTally:
    def test_wheel_three_tallies(self):
        counts = tally(h_cordial_wheel(3))
        assert (counts.e(1), counts.e(-1)) == (3, 3)
        assert (counts.v(1), counts.v(-1)) == (2, 2)
        assert counts.v(5) == 0

    def test_frame_is_schema_checked(self):
        frame = tally(h_cordial_wheel(3)).to_frame()
        assert list(frame.columns) == ["scope", "value", "count"]
        assert frame[frame["scope"] == "edge"]["count"].sum() == 6
        assert frame[frame["scope"] == "vertex"]["count"].sum() == 4


class TestVerify:
    def test_wheel_three_is_h_cordial(self):
        report = verify(h_cordial_wheel(3), H)
        assert report.valid
        assert report.constant == 1

    def test_triangle_labeling_invalid(self, k3):
        report = verify(Labeling(k3, (1, 1, -1)), H)
        assert not report.valid
        conditions = {v.condition for v in report.violations}
        assert "uniform-k" in conditions

    def test_empty_graph_is_not_h_cordial(self):
        report = verify(Labeling(make_graph(0, []), ()), H)
        assert not report.valid

    def test_alphabet_checked_before_tallying(self, k3):
        with pytest.raises(AlphabetError) as info:
            verify(Labeling(k3, (1, 2, -1)), H)
        assert info.value.edge == (0, 2)
        assert info.value.label == 2

    def test_hk_tree_is_h2_cordial_with_hub_minus_one(self, labeled):
        lab = labeled(7, HK_TREE)
        report = verify(lab, H2)
        assert report.valid
        assert report.induced[0] == -1

    def test_semi_h_on_path(self):
        assert is_valid(Labeling(path_graph(3), (-1, 1)), SEMI_H)
        report = verify(Labeling(path_graph(3), (1, 1)), SEMI_H)
        assert {v.condition for v in report.violations} >= {"vertex-range", "edge-balance"}

    def test_zero_m_on_cycle(self, c4):
        lab = Labeling(c4, (1, -1, -1, 1))
        assert is_valid(lab, ZERO_M)
        report = verify(Labeling(c4, (1, 1, -1, -1)), ZERO_M)
        assert report.violations[0].condition == "vertex-zero"

    def test_hk_range_violation(self):
        lab = Labeling(path_graph(3), (2, 2))
        report = verify(lab, H2)
        assert "vertex-range" in {v.condition for v in report.violations}

    def test_report_round_trips_through_json(self, k3):
        report = verify(Labeling(k3, (1, 1, -1)), H)
        restored = VerificationReport.from_dict(json.loads(json.dumps(report.to_dict())))
        assert restored == report

    def test_render_mentions_status(self, k3):
        assert "INVALID" in verify(Labeling(k3, (1, 1, -1)), H).render()
        assert "K = 1" in verify(h_cordial_wheel(5), H).render()

    @settings(max_examples=500, deadline=None)
    @given(labelings(k=2, max_n=7))
    def test_validity_is_sign_symmetric(self, lab):
        for kind in (H, SEMI_H, ZERO_M, H2):
            try:
                valid = is_valid(lab, kind)
            except AlphabetError:
                continue
            assert valid == is_valid(negate(lab), kind)


class TestTransforms:
    def test_negate_is_an_involution(self, k3):
        lab = Labeling(k3, (1, -1, 1))
        assert negate(negate(lab)) == lab

    def test_star_transform_k2(self):
        lab = Labeling(path_graph(5), (2, 1, -1, -2))
        assert star_transform(lab, 2).labels == (1, 2, -2, -1)

    def test_star_transform_k1_is_identity(self, k3):
        lab = Labeling(k3, (1, -1, 1))
        assert star_transform(lab, 1) == lab

    def test_star_transform_breaks_hk_tree(self, labeled):
        transformed = star_transform(labeled(7, HK_TREE), 2)
        report = verify(transformed, H2)
        assert report.induced[0] == -5
        assert not report.valid

    def test_star_transform_rejects_large_labels(self, k3):
        with pytest.raises(AlphabetError):
            star_transform(Labeling(k3, (3, 1, 1)), 2)


class TestLabeledIO:
    def test_parse_realigns_labels(self):
        lab = parse_labeled("# path\n3 2\n2 1 -1\n1 0 1\n")
        assert lab.graph == path_graph(3)
        assert lab.labels == (1, -1)

    def test_zero_label_is_format_error(self):
        with pytest.raises(GraphFormatError, match="label 0"):
            parse_labeled("2 1\n0 1 0\n")

    def test_missing_label_column(self):
        with pytest.raises(GraphFormatError, match="u v L"):
            parse_labeled("2 1\n0 1\n")

    def test_serialize_with_comment(self):
        lab = Labeling(complete_graph(3), (1, -1, 1))
        text = serialize_labeled(lab, comment="triangle")
        assert text == "# triangle\n3 3\n0 1 1\n0 2 -1\n1 2 1\n"
        assert parse_labeled(text) == lab

    def test_dot_marks_signs_and_induced_values(self):
        dot = to_dot(Labeling(path_graph(3), (-1, 1)), name="p-3")
        assert dot.startswith("graph p_3 {")
        assert '0 -- 1 [label="-1", style=solid, penwidth=1]' in dot
        assert '1 -- 2 [label="+1", style=bold, penwidth=3]' in dot
        assert '1 [label="1\\n+0"]' in dot
