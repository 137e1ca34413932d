"""CLI: every subcommand end to end, exit codes, and trace output."""
import json

import pytest

from beamkit.cli import main
from beamkit.domains import (
    parse_blocks_instances,
    parse_pancake_instances,
    serialize_pancake_instances,
)

GRAPH = """\
node A h=1 start
node B h=1
node goal h=0 goal
edge A B 1
edge B goal 1
"""

HARD_PANCAKE = serialize_pancake_instances([(9, 7, 5, 3, 1, 2, 4, 6, 8)])


@pytest.fixture
def pancake_file(tmp_path):
    path = tmp_path / "pan.txt"
    path.write_text("2 1 3 4 5\n5 4 3 2 1\n")
    return str(path)


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g.graph"
    path.write_text(GRAPH)
    return str(path)


class TestSolve:
    def test_solves_every_instance(self, pancake_file, capsys):
        code = main(["solve", "--domain", "pancake", "--instance",
                     pancake_file, "--algorithm", "monobeam", "--width", "8"])
        out = capsys.readouterr().out
        assert code == 0
        assert "instance 1: solved" in out and "instance 2: solved" in out

    def test_graph_domain(self, graph_file, capsys):
        code = main(["solve", "--domain", "graph", "--instance", graph_file,
                     "--algorithm", "beam", "--width", "2"])
        assert code == 0
        assert "cost=2" in capsys.readouterr().out

    def test_unsolved_exit_code(self, tmp_path, capsys):
        # fig2-style trap: width 2 beam search dead-ends.
        path = tmp_path / "trap.graph"
        path.write_text(
            "node A h=1 start\nnode B h=1\nnode C h=2\nnode D h=2\n"
            "node E h=1\nnode F h=1\nnode goal h=0 goal\n"
            "edge A B 1\nedge A C 1\nedge B D 1\nedge C E 1\nedge C F 1\n"
            "edge D goal 1\n")
        code = main(["solve", "--domain", "graph", "--instance", str(path),
                     "--algorithm", "beam", "--width", "2"])
        assert code == 2
        assert "unsolved (exhausted)" in capsys.readouterr().out

    def test_resource_limit_exit_code(self, tmp_path, capsys):
        path = tmp_path / "hard.txt"
        path.write_text(HARD_PANCAKE)
        code = main(["solve", "--domain", "pancake", "--instance", str(path),
                     "--algorithm", "beam", "--width", "1",
                     "--node-limit", "3"])
        assert code == 3
        assert "resource-limit" in capsys.readouterr().out

    def test_dedup_and_pruning_overrides(self, pancake_file, capsys):
        code = main(["solve", "--domain", "pancake", "--instance",
                     pancake_file, "--algorithm", "monobeam", "--width", "4",
                     "--no-pruning", "--dedup", "none"])
        assert code == 0

    def test_trace_jsonl(self, pancake_file, tmp_path, capsys):
        trace = tmp_path / "trace.jsonl"
        code = main(["solve", "--domain", "pancake", "--instance",
                     pancake_file, "--algorithm", "monobeam", "--width", "2",
                     "--trace", str(trace)])
        assert code == 0
        records = [json.loads(l) for l in trace.read_text().splitlines()]
        assert records
        assert {"instance", "event", "level", "slot", "key", "f"} <= set(records[0])
        assert {r["instance"] for r in records} == {"1", "2"}

    def test_bad_width(self, pancake_file, capsys):
        assert main(["solve", "--domain", "pancake", "--instance",
                     pancake_file, "--algorithm", "beam", "--width", "0"]) == 1

    def test_malformed_instance_file(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("1 1 2\n")
        assert main(["solve", "--domain", "pancake", "--instance", str(path),
                     "--algorithm", "beam", "--width", "1"]) == 1

    def test_pancake_rejects_tile_cost_models(self, pancake_file):
        assert main(["solve", "--domain", "pancake", "--instance",
                     pancake_file, "--cost-model", "sqrt",
                     "--algorithm", "beam", "--width", "1"]) == 1

    def test_missing_required_flag(self, capsys):
        assert main(["solve", "--width", "1"]) == 1


class TestSweepAndAnalysis:
    def sweep(self, pancake_file, tmp_path, widths="1,2,3,4"):
        out = tmp_path / "rows.csv"
        code = main(["sweep", "--domain", "pancake", "--instance",
                     pancake_file, "--algorithm", "beam",
                     "--widths", widths, "--out", str(out)])
        return code, out

    def test_sweep_writes_rows(self, pancake_file, tmp_path, capsys):
        code, out = self.sweep(pancake_file, tmp_path)
        assert code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 1 + 2 * 4  # header + 2 instances x 4 widths
        assert "wrote 8 rows" in capsys.readouterr().out

    def test_sweep_rejects_bad_widths(self, pancake_file, tmp_path, capsys):
        code, _ = self.sweep(pancake_file, tmp_path, widths="3,2")
        assert code == 1
        code, _ = self.sweep(pancake_file, tmp_path, widths="1,x")
        assert code == 1

    def test_analyze_ill_behaved(self, pancake_file, tmp_path, capsys):
        _, out = self.sweep(pancake_file, tmp_path)
        code = main(["analyze", "ill-behaved", "--in", str(out),
                     "--range", "1:4"])
        assert code == 0
        text = capsys.readouterr().out
        assert "mean ill-behaved fraction" in text

    def test_analyze_empty_range(self, pancake_file, tmp_path, capsys):
        _, out = self.sweep(pancake_file, tmp_path)
        assert main(["analyze", "ill-behaved", "--in", str(out),
                     "--range", "50:60"]) == 1

    def test_plot_data(self, pancake_file, tmp_path, capsys):
        _, out = self.sweep(pancake_file, tmp_path)
        code = main(["plot-data", "--in", str(out),
                     "--out", str(tmp_path / "p"),
                     "--mean-action-cost", "1.0"])
        assert code == 0
        assert (tmp_path / "p-averages.csv").exists()
        assert (tmp_path / "p-scatter.csv").exists()


class TestCheckMonotonic:
    def test_monobeam_clean(self, pancake_file, capsys):
        code = main(["check", "monotonic", "--domain", "pancake",
                     "--instance", pancake_file, "--algorithm", "monobeam",
                     "--widths", "1:6"])
        assert code == 0
        assert "all monotonic" in capsys.readouterr().out

    def test_bad_range(self, pancake_file, capsys):
        assert main(["check", "monotonic", "--domain", "pancake",
                     "--instance", pancake_file, "--algorithm", "monobeam",
                     "--widths", "5"]) == 1


class TestGen:
    def test_gen_pancake_round_trip(self, tmp_path, capsys):
        out = tmp_path / "gen.txt"
        code = main(["gen", "pancake", "--n", "6", "--count", "4",
                     "--seed", "9", "--out", str(out)])
        assert code == 0
        assert len(parse_pancake_instances(out.read_text())) == 4

    def test_gen_blocks_round_trip(self, tmp_path, capsys):
        out = tmp_path / "gen.txt"
        code = main(["gen", "blocks", "--n", "5", "--count", "3",
                     "--seed", "9", "--out", str(out)])
        assert code == 0
        assert len(parse_blocks_instances(out.read_text())) == 3

    def test_gen_rejects_bad_params(self, tmp_path, capsys):
        assert main(["gen", "pancake", "--n", "1", "--count", "1",
                     "--seed", "0", "--out", str(tmp_path / "x")]) == 1


class TestEntryBehavior:
    def test_no_args_shows_usage(self, capsys):
        assert main([]) in (0, 1)  # click prints group help

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 1
