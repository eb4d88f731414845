"""
Tests for the command-line interface.
"""

from unittest.mock import patch

import orjson
import pytest

from axcent.cli import build_parser, main
from axcent.core.graph import load_graph
from axcent.utils.errors import UsageError


def data_lines(text: str):
    return [line.split("\t") for line in text.splitlines() if line and not line.startswith("#")]


@pytest.fixture
def graph_file(tmp_path):
    def write(text: str, name: str = "graph.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


class TestParser:
    """Test argument parsing."""

    def test_usage_errors_raise(self):
        """Test parse errors surface as UsageError instead of exiting."""
        with pytest.raises(UsageError):
            build_parser().parse_args(["compute"])

    def test_no_command(self, capsys):
        """Test running without a command prints help and fails."""
        assert main([]) == 1
        assert "usage" in capsys.readouterr().err


class TestGen:
    """Test graph generation."""

    def test_stdout(self, capsys):
        """Test the edge list of S(3, 3)."""
        assert main(["gen", "-f", "S", "-k", "3", "-p", "3"]) == 0

        g = load_graph(capsys.readouterr().out)
        assert (g.n, g.m) == (6, 9)

    def test_output_file(self, tmp_path):
        """Test writing to a file."""
        out = tmp_path / "d.txt"

        assert main(["gen", "-f", "D-symmetric", "-k", "4", "-p", "5", "-o", str(out)]) == 0
        assert load_graph(out.read_text()).is_symmetric()

    def test_bad_sizes(self, capsys):
        """Test invalid sizes exit with a usage error."""
        assert main(["gen", "-f", "D", "-k", "2", "-p", "5"]) == 1
        assert "k >= 3" in capsys.readouterr().err


class TestScores:
    """Test compute and rank."""

    def test_compute_harmonic(self, capsys, graph_file):
        """Test harmonic scores of S(3, 3) with the parameter echo."""
        path = graph_file("# nodes: 6\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n3 4\n4 5\n5 3\n")

        assert main(["compute", "-m", "harmonic", "-g", path]) == 0
        out = capsys.readouterr().out
        assert out.startswith("# measure: harmonic\n")
        assert "fingerprint=" in out
        assert [float(v) for _, v in data_lines(out)] == pytest.approx([2.0] * 3 + [1.5] * 3)

    def test_generated_input(self, capsys):
        """Test scoring a generated graph without an input file."""
        assert main(["compute", "-m", "degree", "-f", "D", "-k", "3", "-p", "3"]) == 0

        scores = [float(v) for _, v in data_lines(capsys.readouterr().out)]
        assert scores == [3.0, 2.0, 2.0, 2.0, 1.0, 1.0]

    def test_pagerank_with_preference(self, capsys, graph_file):
        """Test PageRank on arc 1 -> 0 with preference (0, 1)."""
        path = graph_file("1 0\n")

        assert main(["compute", "-m", "pagerank", "--alpha", "0.5", "--preference", "0,1", "-g", path]) == 0
        out = capsys.readouterr().out
        assert "# alpha: 0.5" in out
        assert [float(v) for _, v in data_lines(out)] == pytest.approx([0.25, 0.5], abs=1e-11)

    def test_normalize(self, capsys):
        """Test normalized output sums to one."""
        assert main(["compute", "-m", "katz", "--normalize", "-f", "S", "-k", "4", "-p", "4"]) == 0

        out = capsys.readouterr().out
        assert "# normalized: l1" in out
        assert sum(float(v) for _, v in data_lines(out)) == pytest.approx(1.0)

    def test_rank(self, capsys):
        """Test nodes are listed by descending score with id tie-breaks."""
        assert main(["rank", "-m", "degree", "-f", "D", "-k", "3", "-p", "4"]) == 0

        nodes = [int(node) for node, _ in data_lines(capsys.readouterr().out)]
        assert nodes == [0, 1, 2, 3, 4, 5, 6]

    def test_output_file(self, tmp_path):
        """Test writing scores to a file."""
        out = tmp_path / "scores.tsv"

        assert main(["compute", "-m", "salsa", "-f", "S", "-k", "3", "-p", "3", "-o", str(out)]) == 0
        assert len(data_lines(out.read_text())) == 6


class TestExitCodes:
    """Test error reporting."""

    def test_unknown_measure(self, capsys):
        """Test unknown measure ids are usage errors."""
        assert main(["compute", "-m", "eigen", "-f", "S", "-k", "3", "-p", "3"]) == 1
        assert "eigen" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["compute", "-m", "degree", "-k", "3", "-p", "3"],
        ["compute", "-m", "degree", "-f", "S", "-k", "3"],
        ["compute", "-m", "pagerank", "--alpha", "1.5", "-f", "S", "-k", "3", "-p", "3"],
        ["compute", "-m", "pagerank", "--preference", "a,b", "-f", "S", "-k", "3", "-p", "3"],
        ["--log-level", "LOUD", "gen", "-f", "S", "-k", "3", "-p", "3"],
        ["--threads", "0", "gen", "-f", "S", "-k", "3", "-p", "3"],
    ])
    def test_usage_errors(self, argv):
        """Test malformed invocations exit with 1."""
        assert main(argv) == 1

    def test_malformed_graph(self, capsys, graph_file):
        """Test a malformed edge list exits with 2 and names the line."""
        path = graph_file("0 1\n1 x\n")

        assert main(["compute", "-m", "degree", "-g", path]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        """Test unreadable input exits with 2."""
        assert main(["compute", "-m", "degree", "-g", str(tmp_path / "absent.txt")]) == 2

    def test_divergent_katz(self, graph_file):
        """Test an attenuation factor past 1/lambda exits with 3."""
        path = graph_file("0 1\n1 2\n2 0\n")

        assert main(["compute", "-m", "katz", "--beta", "1.0", "-g", path]) == 3

    def test_iteration_cap(self, graph_file):
        """Test a solver hitting its iteration cap exits with 3."""
        path = graph_file("0 1\n")

        assert main(["compute", "-m", "pagerank", "--max-iters", "1", "-g", path]) == 3

    def test_unicode_digits_in_graph(self, capsys, graph_file):
        """Test non-ASCII digits in an edge list exit with 2 instead of a traceback."""
        path = graph_file("0 1\n0 ²\n")

        assert main(["compute", "-m", "degree", "-g", path]) == 2
        assert "line 2" in capsys.readouterr().err

    def test_oversized_header(self, capsys, graph_file, tmp_path):
        """Test a node-count header above the configured limit exits with 2."""
        config = tmp_path / "small.yaml"
        config.write_text("compute:\n  max_nodes: 100\n", encoding="utf-8")
        path = graph_file("# nodes: 101\n0 1\n")

        assert main(["--config", str(config), "compute", "-m", "degree", "-g", path]) == 2
        assert "exceeds the limit" in capsys.readouterr().err

    def test_stray_value_error(self, capsys):
        """Test a ValueError escaping a handler is reported with exit code 2."""
        with patch("axcent.cli.compute", side_effect=ValueError("operands could not be broadcast")):
            assert main(["compute", "-m", "degree", "-f", "S", "-k", "3", "-p", "3"]) == 2
        assert "invalid input: operands could not be broadcast" in capsys.readouterr().err


class TestBenchCommands:
    """Test axioms and watershed."""

    def test_axioms_tsv(self, capsys):
        """Test a single monotonicity check."""
        assert main(["axioms", "-m", "closeness", "-a", "monotonicity", "--trials", "0"]) == 0

        rows = data_lines(capsys.readouterr().out)
        assert rows[0] == ["measure", "axiom", "verdict", "witness"]
        assert rows[1][:3] == ["closeness", "monotonicity", "no"]

    def test_axioms_json(self, capsys):
        """Test JSON verdicts carry their samples."""
        assert main(["axioms", "-m", "degree", "-m", "salsa", "-a", "density", "--format", "json"]) == 0

        verdicts = orjson.loads(capsys.readouterr().out)
        assert [(v["measure"], v["verdict"]) for v in verdicts] == [("degree", "yes"), ("salsa", "yes")]

    def test_watershed(self, capsys):
        """Test the closeness watershed for p = 5."""
        assert main(["watershed", "-m", "closeness", "-p", "5"]) == 0
        assert capsys.readouterr().out.strip() == "6"

    def test_watershed_not_found(self, capsys):
        """Test a capped scan prints none."""
        assert main(["watershed", "-m", "betweenness", "-p", "12", "--k-max", "10"]) == 0
        assert capsys.readouterr().out.strip() == "none"

    def test_watershed_output_file(self, tmp_path):
        """Test the watershed answer can be written to a file."""
        out = tmp_path / "ws.txt"

        assert main(["watershed", "-m", "closeness", "-p", "5", "-o", str(out)]) == 0
        assert out.read_text(encoding="utf-8") == "6\n"


class TestEval:
    """Test retrieval evaluation."""

    def test_synthetic(self, capsys):
        """Test a synthetic corpus ranks relevant documents first under harmonic."""
        assert main(["eval", "--synthetic", "0", "-m", "none", "-m", "harmonic"]) == 0

        out = capsys.readouterr().out
        rows = data_lines(out)
        assert out.startswith("# ties: stable by document id\n")
        assert rows[0] == ["measure", "NDCG@10", "P@10", "null"]
        assert [r[0] for r in rows[1:]] == ["none", "harmonic"]
        assert rows[2][1:3] == ["1.0000", "1.0000"]

    def test_json_summary(self, capsys):
        """Test the JSON summary rows."""
        assert main(["eval", "--synthetic", "1", "-m", "degree", "--inter-host", "--format", "json"]) == 0

        rows = orjson.loads(capsys.readouterr().out)
        assert rows[0]["label"] == "degree"
        assert rows[0]["queries"] == 8

    def test_missing_corpus(self, tmp_path):
        """Test a missing corpus directory exits with 2."""
        assert main(["eval", str(tmp_path / "nope")]) == 2

    def test_source_required(self):
        """Test eval needs a corpus or a synthetic seed."""
        assert main(["eval", "-m", "none"]) == 1
