import pandas as pd
import pytest

from src.cli.maxwist_cli import main
from src.generators.graph_generator import gen_named
from src.graph.io import write_graph

PRISM_TEXT = "6 9\n1 1 1 1 1 1\n0 1\n0 2\n0 3\n1 2\n1 4\n2 5\n3 4\n3 5\n4 5\n"


@pytest.fixture
def graph_file(tmp_path):
    """Write a named graph to tmp_path and return its path"""
    def _write(family, n=0):
        path = tmp_path / f"{family}{n or ''}.txt"
        write_graph(gen_named(family, n), path)
        return str(path)
    return _write


class TestSolve:
    """maxwist solve"""

    def test_cubic_k4(self, graph_file, capsys):
        assert main(["solve", "--algo", "cubic", "--input", graph_file("complete", 4)]) == 0
        assert capsys.readouterr().out == "internal 2 total 4 bound 0/1 n 4 m 6 algo cubic\n0 1\n1 2\n2 3\n"

    def test_clawfree_k5(self, graph_file, capsys):
        assert main(["solve", "--algo", "clawfree", "--input", graph_file("complete", 5)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("internal 3 total 5 bound 12/25 n 5 m 10 algo clawfree\n")
        assert out.count("\n") == 5

    def test_exact_prism(self, graph_file, capsys):
        assert main(["solve", "--algo", "exact", "--input", graph_file("prism")]) == 0
        assert capsys.readouterr().out.startswith("internal 4 total 6 ")

    def test_epsilon_runs_wrapper(self, graph_file, capsys):
        assert main(["solve", "--algo", "cubic", "--epsilon", "0.5", "--input", graph_file("prism")]) == 0
        assert capsys.readouterr().out.split("\n")[0].endswith("algo exact")

    def test_output_is_byte_stable(self, graph_file, capsys):
        path = graph_file("prism")
        main(["solve", "--algo", "cubic", "--input", path])
        first = capsys.readouterr().out
        main(["solve", "--algo", "cubic", "--input", path])
        assert capsys.readouterr().out == first

    def test_side_outputs(self, graph_file, tmp_path, capsys):
        out, trace, dot, log = (tmp_path / name for name in ("tree.txt", "run.trace", "tree.dot", "runs.csv"))
        code = main([
            "solve", "--algo", "clawfree", "--input", graph_file("complete", 5),
            "--output", str(out), "--trace", str(trace), "--dot", str(dot), "--log-csv", str(log),
        ])
        assert code == 0
        assert out.read_text(encoding="utf-8").startswith("internal 3")
        assert trace.read_text(encoding="utf-8").startswith("run algo=clawfree")
        assert dot.read_text(encoding="utf-8").startswith("graph T {\n")
        frame = pd.read_csv(log)
        assert list(frame["algo"]) == ["clawfree"]
        assert list(frame["internal_weight"]) == [3]
        assert "📊 Logged" in capsys.readouterr().out

    def test_not_cubic_exits_3(self, graph_file, capsys):
        assert main(["solve", "--algo", "cubic", "--input", graph_file("complete", 5)]) == 3
        assert "error: NotCubic:" in capsys.readouterr().err

    def test_claw_exits_3(self, graph_file, capsys):
        assert main(["solve", "--algo", "clawfree", "--input", graph_file("petersen")]) == 3
        assert "error: NotClawFree:" in capsys.readouterr().err

    def test_oracle_cap_exits_3(self, graph_file, capsys):
        assert main(["solve", "--algo", "exact", "--cap", "4", "--input", graph_file("prism")]) == 3
        assert "ExactSolveTooLarge" in capsys.readouterr().err

    def test_malformed_input_exits_2(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("3 3\n1 1 1\n0 1\n", encoding="utf-8")
        assert main(["solve", "--algo", "cubic", "--input", str(path)]) == 2
        assert "error: GraphFormatError:" in capsys.readouterr().err

    def test_missing_file_exits_2(self, tmp_path):
        assert main(["solve", "--algo", "cubic", "--input", str(tmp_path / "nope.txt")]) == 2

    def test_unknown_flag_exits_2(self, graph_file):
        assert main(["solve", "--algo", "cubic", "--input", graph_file("prism"), "--fast"]) == 2

    def test_bad_epsilon_exits_3(self, graph_file):
        assert main(["solve", "--algo", "cubic", "--epsilon", "0.9", "--input", graph_file("prism")]) == 3


class TestGen:
    def test_prism_golden(self, capsys):
        assert main(["gen", "--family", "prism"]) == 0
        assert capsys.readouterr().out == PRISM_TEXT

    def test_seeded_output_is_reproducible(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        args = ["gen", "--family", "cubic-random", "--n", "20", "--weights", "uniform:9", "--seed", "4"]
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        assert a.read_text(encoding="utf-8") == b.read_text(encoding="utf-8")

    def test_odd_cubic_exits_3(self, capsys):
        assert main(["gen", "--family", "cubic-random", "--n", "7"]) == 3
        assert "InvalidN" in capsys.readouterr().err

    def test_unknown_scheme_exits_3(self):
        assert main(["gen", "--family", "prism", "--weights", "gaussian"]) == 3


class TestVerify:
    """gen -> solve -> verify round trips"""

    @pytest.mark.parametrize(
        "family, n, algo, kind",
        [
            ("cubic-random", 16, "cubic", "cubic"),
            ("line-graph-of-cubic-random", 10, "clawfree", "clawfree"),
            ("line-graph-of-cubic-random", 10, "clawfree-dfs", "clawfree-dfs"),
        ],
    )
    @pytest.mark.parametrize("weights", ["unit", "uniform", "zero-one"])
    def test_round_trip(self, tmp_path, capsys, family, n, algo, kind, weights):
        graph, tree, trace = tmp_path / "g.txt", tmp_path / "t.txt", tmp_path / "run.trace"
        assert main(["gen", "--family", family, "--n", str(n), "--weights", weights, "--seed", "2", "--out", str(graph)]) == 0
        assert main([
            "solve", "--algo", algo, "--input", str(graph), "--output", str(tree), "--trace", str(trace),
        ]) == 0
        capsys.readouterr()
        code = main(["verify", "--input", str(graph), "--tree", str(tree), "--kind", kind, "--trace", str(trace)])
        out = capsys.readouterr().out
        assert code == 0
        assert "bound_satisfied true" in out
        assert "# trace audit" in out

    def test_failing_tree_exits_3(self, graph_file, tmp_path, capsys):
        tree = tmp_path / "star.txt"
        tree.write_text("0 1\n0 2\n0 3\n", encoding="utf-8")
        code = main(["verify", "--input", graph_file("complete", 4), "--tree", str(tree), "--kind", "clawfree"])
        assert code == 3
        out = capsys.readouterr().out
        assert "bound_satisfied false" in out
        assert "violation [ratio]" in out


class TestBench:
    def test_csv_and_slope(self, tmp_path, capsys):
        metrics = tmp_path / "metrics.prom"
        code = main(["bench", "--sizes", "16,32,64", "--seed", "1", "--metrics-out", str(metrics)])
        assert code == 0
        captured = capsys.readouterr()
        lines = captured.out.strip().split("\n")
        assert lines[0] == "n,millis"
        assert [line.split(",")[0] for line in lines[1:]] == ["16", "32", "64"]
        assert "slope" in captured.err
        assert metrics.exists()

    def test_clawfree_bench_reports_line_graph_size(self, capsys):
        assert main(["bench", "--algo", "clawfree", "--sizes", "8"]) == 0
        assert capsys.readouterr().out.strip().split("\n")[1].startswith("12,")

    def test_bad_sizes_exit_2(self):
        assert main(["bench", "--sizes", "a,b"]) == 2


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
