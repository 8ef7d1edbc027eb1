"""Tests for the hcordial command-line runner."""

import io
import json

import pytest

from catalog import names as catalog_names
from constructors import h_cordial_wheel
from graphs import complete_graph, cycle_graph, parse_graph, serialize_graph, star_graph
from labeling import Labeling, LabelingKind, VerificationReport, parse_labeled, serialize_labeled, verify
from pipelines.cordial.run_toolkit import (
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_UNDECIDED,
    EXIT_USAGE,
    main,
)


@pytest.fixture
def graph_file(write_file):
    def _write(g, name="graph.txt"):
        return write_file(name, serialize_graph(g))

    return _write


@pytest.fixture
def labeled_file(write_file):
    def _write(labeling, name="labeled.txt"):
        return write_file(name, serialize_labeled(labeling))

    return _write


class TestGen:
    def test_wheel(self, capsys):
        assert main(["gen", "--family", "wheel", "--n", "5"]) == EXIT_OK
        g = parse_graph(capsys.readouterr().out)
        assert (g.n, g.m) == (6, 10)

    def test_random_tree_to_file(self, tmp_path):
        out = tmp_path / "tree.txt"
        assert main(["gen", "--family", "random-tree", "--n", "9", "--seed", "3", "--out", str(out)]) == EXIT_OK
        assert parse_graph(out.read_text()).m == 8

    def test_unknown_family_is_usage_error(self, capsys):
        assert main(["gen", "--family", "petersen", "--n", "10"]) == EXIT_USAGE

    def test_bad_size_is_usage_error(self, capsys):
        assert main(["gen", "--family", "wheel", "--n", "2"]) == EXIT_USAGE
        assert "rim" in capsys.readouterr().err


class TestLabel:
    def test_complete_five_is_rejected(self, capsys):
        assert main(["label", "--kind", "h", "--family", "complete", "--n", "5"]) == EXIT_PRECONDITION
        assert "m-n-odd" in capsys.readouterr().err

    def test_complete_from_file(self, capsys, graph_file):
        path = graph_file(complete_graph(4))
        assert main(["label", "--kind", "h", "--in", path]) == EXIT_OK
        lab = parse_labeled(capsys.readouterr().out)
        assert verify(lab, LabelingKind.h_cordial()).constant == 1

    def test_h2_even_wheel(self, capsys):
        assert main(["label", "--kind", "h2", "--family", "wheel", "--n", "6"]) == EXIT_OK
        lab = parse_labeled(capsys.readouterr().out)
        assert verify(lab, LabelingKind.hk_cordial(2)).valid

    def test_zero_m(self, capsys, graph_file):
        assert main(["label", "--kind", "zero-m", "--in", graph_file(cycle_graph(4))]) == EXIT_OK
        assert parse_labeled(capsys.readouterr().out).labels == (1, -1, -1, 1)

    def test_semi_h_needs_tree(self, capsys, graph_file):
        assert main(["label", "--kind", "semi-h", "--in", graph_file(cycle_graph(5))]) == EXIT_PRECONDITION
        assert "not-a-tree" in capsys.readouterr().err

    def test_other_shapes_report_obstruction(self, capsys, graph_file):
        assert main(["label", "--kind", "h", "--in", graph_file(star_graph(3))]) == EXIT_PRECONDITION
        assert "m-n-odd" in capsys.readouterr().err


class TestVerify:
    def test_json_report_round_trips(self, capsys, labeled_file):
        path = labeled_file(h_cordial_wheel(3))
        assert main(["verify", "--kind", "h", "--in", path, "--json"]) == EXIT_OK
        report = VerificationReport.from_dict(json.loads(capsys.readouterr().out))
        assert report.valid
        assert report.tally.e(1) == report.tally.e(-1) == 3

    def test_invalid_exits_one(self, capsys, labeled_file, k3):
        path = labeled_file(Labeling(k3, (1, 1, -1)))
        assert main(["verify", "--kind", "h", "--in", path]) == EXIT_NEGATIVE
        assert "INVALID" in capsys.readouterr().out

    def test_hk_defaults_k_with_notice(self, capsys, write_file):
        path = write_file("hk.txt", "7 6\n0 1 2\n0 2 -1\n0 3 -1\n0 4 -1\n4 5 1\n4 6 1\n")
        assert main(["verify", "--kind", "hk", "--in", path]) == EXIT_OK
        captured = capsys.readouterr()
        assert "using k = 2" in captured.err
        assert "HkCordial(2): VALID" in captured.out

    def test_alphabet_violation_is_rejected(self, capsys, write_file):
        path = write_file("bad.txt", "2 1\n0 1 2\n")
        assert main(["verify", "--kind", "h", "--in", path]) == EXIT_PRECONDITION
        assert "alphabet" in capsys.readouterr().err

    def test_malformed_input(self, capsys, write_file):
        path = write_file("bad.txt", "2 1\n0 2 1\n")
        assert main(["verify", "--kind", "h", "--in", path]) == EXIT_USAGE

    def test_missing_file(self, capsys, tmp_path):
        assert main(["verify", "--kind", "h", "--in", str(tmp_path / "absent.txt")]) == EXIT_USAGE
        assert "cannot read" in capsys.readouterr().err


class TestSearch:
    def test_k3_is_exhausted(self, capsys, graph_file, k3):
        assert main(["search", "--kind", "h", "--in", graph_file(k3)]) == EXIT_NEGATIVE
        out = capsys.readouterr().out
        assert "HCordial: exhausted" in out
        assert "nodes=" in out

    def test_enumerate_all(self, capsys, graph_file, c4):
        path = graph_file(c4)
        assert main(["search", "--kind", "zero-m", "--in", path, "--enumerate", "0", "--canonical", "--json"]) == EXIT_OK
        outcome = json.loads(capsys.readouterr().out)
        assert outcome["witnesses"] == [[-1, 1, 1, -1], [1, -1, -1, 1]]

    def test_budget_undecided(self, capsys, graph_file):
        path = graph_file(complete_graph(6))
        assert main(["search", "--kind", "h", "--in", path, "--budget", "5", "--no-prune"]) == EXIT_UNDECIDED
        assert "undecided-budget" in capsys.readouterr().out

    def test_hk_needs_k(self, capsys, graph_file, k3):
        assert main(["search", "--kind", "hk", "--in", graph_file(k3)]) == EXIT_USAGE

    def test_symmetry_flag(self, capsys, graph_file, c4):
        assert main(["search", "--kind", "zero-m", "--in", graph_file(c4), "--symmetry", "--canonical"]) == EXIT_OK
        assert "witness 1: +1 -1 -1 +1" in capsys.readouterr().out


PIPELINES = [
    ("wheel", 5, "h", ["--kind", "h"]),
    ("complete", 8, "h", ["--kind", "h"]),
    ("complete", 7, "h", ["--kind", "h"]),
    ("wheel", 6, "h2", ["--kind", "hk", "--k", "2"]),
    ("cycle", 8, "zero-m", ["--kind", "zero-m"]),
    ("path", 7, "semi-h", ["--kind", "semi-h"]),
    ("star", 4, "semi-h", ["--kind", "semi-h"]),
]


class TestPipes:
    @staticmethod
    def _stage(monkeypatch, capsys, argv, stdin=None):
        if stdin is not None:
            monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
        status = main(argv)
        return status, capsys.readouterr().out

    @pytest.mark.parametrize("family,n,label_kind,verify_flags", PIPELINES)
    def test_gen_label_verify_through_stdin(self, monkeypatch, capsys, family, n, label_kind, verify_flags):
        status, graph_text = self._stage(monkeypatch, capsys, ["gen", "--family", family, "--n", str(n)])
        assert status == EXIT_OK
        status, labeled_text = self._stage(monkeypatch, capsys, ["label", "--kind", label_kind], graph_text)
        assert status == EXIT_OK
        status, report_text = self._stage(monkeypatch, capsys, ["verify", *verify_flags, "--json"], labeled_text)
        assert status == EXIT_OK
        report = VerificationReport.from_dict(json.loads(report_text))
        assert report.valid
        assert parse_labeled(labeled_text).graph == parse_graph(graph_text)

class TestOtherCommands:
    def test_hamiltonian(self, capsys, graph_file):
        assert main(["hamiltonian", "--in", graph_file(cycle_graph(5))]) == EXIT_OK
        assert "0 1 2 3 4 0" in capsys.readouterr().out
        assert main(["hamiltonian", "--in", graph_file(star_graph(3), "star.txt")]) == EXIT_NEGATIVE

    def test_export_dot(self, tmp_path, labeled_file):
        out = tmp_path / "w3.dot"
        path = labeled_file(h_cordial_wheel(3))
        assert main(["export-dot", "--in", path, "--name", "w3", "--out", str(out)]) == EXIT_OK
        assert out.read_text().startswith("graph w3 {")

    def test_unwritable_output_is_usage_error(self, capsys, tmp_path, labeled_file):
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        path = labeled_file(h_cordial_wheel(3))
        assert main(["export-dot", "--in", path, "--out", str(blocker / "w3.dot")]) == EXIT_USAGE
        assert "cannot write" in capsys.readouterr().err

    def test_catalog_list(self, capsys):
        assert main(["catalog", "list"]) == EXIT_OK
        assert len(capsys.readouterr().out.strip().splitlines()) == 6

    def test_catalog_check(self, capsys):
        assert main(["catalog", "check", "fstar-counterexample", "--json"]) == EXIT_OK
        reports = json.loads(capsys.readouterr().out)
        assert reports[0]["passed"]

    @pytest.mark.parametrize("name", ["lemma23-left", "lemma23-right", "thm31-refutation"])
    def test_catalog_check_by_canonical_name(self, capsys, name):
        assert main(["catalog", "check", name]) == EXIT_OK
        assert f"{name}: PASS" in capsys.readouterr().out

    @pytest.mark.slow
    def test_catalog_check_all(self, capsys):
        assert main(["catalog", "check-all", "--json"]) == EXIT_OK
        reports = json.loads(capsys.readouterr().out)
        assert [r["entry"] for r in reports] == catalog_names()
        assert all(r["passed"] for r in reports)

    def test_catalog_show(self, capsys):
        assert main(["catalog", "show", "thm31-refutation"]) == EXIT_OK
        assert parse_labeled(capsys.readouterr().out).graph.m == 8

    def test_catalog_unknown_entry(self, capsys):
        assert main(["catalog", "check", "nope"]) == EXIT_USAGE
        assert "unknown catalog entry" in capsys.readouterr().err

    def test_catalog_show_needs_name(self, capsys):
        assert main(["catalog", "show"]) == EXIT_USAGE

    def test_unknown_flag(self, capsys):
        assert main(["gen", "--family", "wheel", "--n", "5", "--bogus"]) == EXIT_USAGE
