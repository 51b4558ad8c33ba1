import json
import math

import pytest

from intimate_core.cli import main
from intimate_core.toygraphs import TWO_COMMUNITY_EDGES


@pytest.fixture
def graph_file(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# two communities\n" + "".join(f"{u} {v} {w}\n" for u, v, w in TWO_COMMUNITY_EDGES))
    return p


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestIndex:
    def test_writes_index(self, capsys, tmp_path, graph_file):
        code, _, _ = run(capsys, "index", graph_file, tmp_path / "g.idx")
        assert code == 0
        lines = (tmp_path / "g.idx").read_text().splitlines()
        assert lines[0].startswith("#coreness v1 ")
        assert lines[5] == "5 2"

    def test_missing_graph(self, capsys, tmp_path):
        code, _, err = run(capsys, "index", tmp_path / "nope.txt", tmp_path / "i")
        assert code == 2 and "nope.txt" in err

    def test_bad_graph(self, capsys, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("1 2 -1\n")
        code, _, err = run(capsys, "index", p, tmp_path / "i")
        assert code == 2 and "line 1" in err

    def test_modified_graph_gets_new_hash(self, capsys, tmp_path, graph_file):
        run(capsys, "index", graph_file, tmp_path / "a.idx")
        graph_file.write_text(graph_file.read_text() + "1 12 9\n")
        run(capsys, "index", graph_file, tmp_path / "b.idx")
        ha = (tmp_path / "a.idx").read_text().splitlines()[0]
        hb = (tmp_path / "b.idx").read_text().splitlines()[0]
        assert ha != hb


class TestQuery:
    @pytest.mark.parametrize("strategy", ["tree-mst", "tree-path", "global-icgm", "global-icgs"])
    def test_feasible_json(self, capsys, tmp_path, graph_file, strategy):
        code, out, _ = run(capsys, "query", graph_file, tmp_path / "g.idx",
                           "--q", "8,10", "--k", "3", "--strategy", strategy)
        assert code == 0
        res = json.loads(out)
        assert res["feasible"] is True
        assert res["members"] == [8, 9, 10, 11]
        assert res["weight"] == 13
        assert math.isclose(math.fsum(w for _, _, w in res["edges"]), res["weight"], rel_tol=1e-12)
        assert set(res["stats"]) == {"tree_ms", "expand_ms", "refine_ms", "iterations", "l_max", "sizes", "weights"}

    def test_builds_missing_index(self, capsys, tmp_path, graph_file):
        run(capsys, "query", graph_file, tmp_path / "new.idx", "--q", "8", "--k", "3")
        assert (tmp_path / "new.idx").exists()

    def test_infeasible_exit_1(self, capsys, tmp_path, graph_file):
        code, out, _ = run(capsys, "query", graph_file, tmp_path / "g.idx", "--q", "1,10", "--k", "3")
        assert code == 1
        res = json.loads(out)
        assert res["feasible"] is False and res["reason"] == "disconnected"

    @pytest.mark.parametrize("extra", [
        ["--q", "8", "--k", "0"],
        ["--q", "8", "--k", "3", "--strategy", "magic"],
        ["--q", "8,x", "--k", "3"],
        ["--q", "8,8", "--k", "3"],
        ["--q", "999", "--k", "3"],
        ["--q", "8", "--k", "3", "--epsilon", "2"],
    ])
    def test_usage_errors(self, capsys, tmp_path, graph_file, extra):
        code, _, _ = run(capsys, "query", graph_file, tmp_path / "g.idx", *extra)
        assert code == 2


class TestGen:
    def test_deterministic(self, capsys):
        _, a, _ = run(capsys, "gen", "--nodes", "200", "--model", "powerlaw", "--seed", "3")
        _, b, _ = run(capsys, "gen", "--nodes", "200", "--model", "powerlaw", "--seed", "3")
        assert a == b and a

    def test_complete_graph(self, capsys):
        code, out, _ = run(capsys, "gen", "--nodes", "5", "--model", "gnp", "--p", "1", "--weights", "integer:1:3")
        assert code == 0
        assert len(out.splitlines()) == 10
        assert all(float(l.split()[2]) in (1, 2, 3) for l in out.splitlines())

    def test_bad_weights(self, capsys):
        code, _, _ = run(capsys, "gen", "--nodes", "5", "--weights", "integer:0:1")
        assert code == 2

    def test_out_file_round_trips(self, capsys, tmp_path):
        run(capsys, "gen", "--nodes", "50", "--model", "gnp", "--p", "0.2", "--out", tmp_path / "g.txt")
        code, _, _ = run(capsys, "index", tmp_path / "g.txt", tmp_path / "g.idx")
        assert code == 0


class TestBench:
    def test_csv_and_timings(self, capsys, tmp_path):
        run(capsys, "gen", "--nodes", "150", "--seed", "1", "--out", tmp_path / "g.txt")
        code, _, _ = run(capsys, "bench", tmp_path / "g.txt", tmp_path / "g.idx", "--protocol", "vary-q",
                         "--seed", "4", "--queries", "2", "--out", tmp_path / "b.csv")
        assert code == 0
        rows = (tmp_path / "b.csv").read_text().splitlines()
        assert len(rows) == 2 + 7 * 4 * 2
        timings = (tmp_path / "b.csv.timings.csv").read_text().splitlines()
        assert len(timings) == 1 + 7 * 4 * 2

    def test_bad_strategy(self, capsys, tmp_path, graph_file):
        code, _, _ = run(capsys, "bench", graph_file, tmp_path / "i", "--protocol", "vary-k",
                         "--out", tmp_path / "b.csv", "--strategies", "tree-path,bogus")
        assert code == 2

    def test_missing_graph(self, capsys, tmp_path):
        code, _, _ = run(capsys, "bench", tmp_path / "none", tmp_path / "i", "--protocol", "vary-k",
                         "--out", tmp_path / "b.csv")
        assert code == 2


class TestOracleCommand:
    def test_answer(self, capsys, graph_file):
        code, out, _ = run(capsys, "oracle", graph_file, "--q", "8,10", "--k", "3")
        assert code == 0
        assert json.loads(out) == {"feasible": True, "members": [8, 9, 10, 11], "weight": 13.0}

    def test_no_answer(self, capsys, graph_file):
        code, out, _ = run(capsys, "oracle", graph_file, "--q", "1,10", "--k", "3")
        assert code == 1 and json.loads(out)["feasible"] is False

    def test_budget(self, capsys, graph_file):
        code, _, _ = run(capsys, "oracle", graph_file, "--q", "8", "--k", "3", "--budget", "5")
        assert code == 2
