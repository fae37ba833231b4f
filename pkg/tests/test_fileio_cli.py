import json

import pytest

from conftest import GOLDEN
from levidecomp.cli import main
from levidecomp.fileio import (
    FormatError,
    dumps_decomposition,
    dumps_graph,
    loads_decomposition,
    loads_graph,
    to_dot,
)
from levidecomp.graphs import build_complete, build_levi


class TestFormat:
    def test_graph_round_trip(self):
        lg = build_levi(5, 3)
        g = loads_graph(dumps_graph(lg))
        assert g.labels == lg.graph.labels and g.edges == lg.graph.edges

    def test_plain_graph_round_trip(self):
        k = build_complete(5)
        assert loads_graph(dumps_graph(k)).edges == k.edges

    def test_levi_json_golden(self):
        assert dumps_graph(build_levi(2, 2)) == (GOLDEN / "l1_2_2.json").read_text()

    def test_dot_golden(self):
        assert to_dot(build_levi(3, 2), "L1(3,2)") == (GOLDEN / "l1_3_2.dot").read_text()

    def test_dot_plain(self):
        dot = to_dot(build_complete(3), "K3")
        assert '"1" -- "2";' in dot and "rank=same" not in dot

    def test_decomposition_round_trip(self):
        d = [(0, 2, 1)]
        paths, graph = loads_decomposition(dumps_decomposition(d, build_levi(2, 2)))
        assert paths == d and graph["kind"] == "levi"
        paths, graph = loads_decomposition(dumps_decomposition(d, "g.json"))
        assert graph == "g.json"
        assert loads_decomposition(dumps_decomposition(d))[1] is None

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "{}",
            '{"vertices": [{"id": 1, "label": [1]}], "edges": []}',
            '{"vertices": [{"id": 0, "label": [2, 1]}], "edges": []}',
            '{"vertices": [{"id": 0, "label": [1]}], "edges": [[0, 5]]}',
        ],
    )
    def test_malformed_graphs(self, text):
        with pytest.raises(FormatError):
            loads_graph(text)

    @pytest.mark.parametrize("text", ["[", '{"paths": 3}', '{"paths": [["a"]]}', "{}"])
    def test_malformed_decompositions(self, text):
        with pytest.raises(FormatError):
            loads_decomposition(text)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestCli:
    def test_bounds_example(self, capsys):
        code, out, _ = run(capsys, "bounds", 4, 3)
        assert code == 0
        assert out.splitlines()[0] == "n=10 floor=5 ceil=5 edges=12"

    def test_min_l1m2_example(self, capsys):
        code, out, _ = run(capsys, "decompose", "min-l1m2", 4)
        assert code == 0 and out.splitlines()[0] == "size=2 bound=2"

    def test_certify(self, capsys):
        code, out, _ = run(capsys, "decompose", "min-l1m2", 6, "--certify")
        assert code == 0 and out.splitlines()[-1].endswith("minimal=True")

    def test_walecki(self, capsys):
        code, out, _ = run(capsys, "decompose", "walecki", 6)
        assert code == 0
        assert out.splitlines()[0] == "size=3 bound=3 kind=Even"
        assert out.splitlines()[1:] == (GOLDEN / "k6_walecki.txt").read_text().splitlines()

    def test_gallai_prints_size_bound_and_trace(self, capsys):
        code, out, _ = run(capsys, "decompose", "gallai", 4, 3)
        lines = out.splitlines()
        assert code == 0 and lines[0] == "size=4 bound=5"
        assert lines[1] == "L1(4,3) case=KOddMEven size=4 bound=5"

    @pytest.mark.parametrize("m,k", [(m, k) for m in range(2, 8) for k in range(2, m + 1)])
    def test_round_trip(self, capsys, tmp_path, m, k):
        g, d = tmp_path / "g.json", tmp_path / "d.json"
        assert run(capsys, "gen", "levi", m, k, "--out", g)[0] == 0
        assert run(capsys, "decompose", "gallai", m, k, "--out", d)[0] == 0
        code, out, _ = run(capsys, "verify", g, d)
        assert code == 0 and out.startswith("OK size=")

    def test_outputs_are_byte_identical(self, capsys, tmp_path):
        blobs = []
        for tag in ("a", "b"):
            g, d, dot = (tmp_path / f"{tag}{x}" for x in ("g.json", "d.json", ".dot"))
            run(capsys, "gen", "levi", 6, 3, "--out", g, "--dot", dot)
            _, out, _ = run(capsys, "decompose", "gallai", 6, 3, "--out", d)
            blobs.append((g.read_bytes(), d.read_bytes(), dot.read_bytes(), out))
        assert blobs[0] == blobs[1]

    def test_tampered_decomposition(self, capsys, tmp_path):
        g, d = tmp_path / "g.json", tmp_path / "d.json"
        run(capsys, "gen", "levi", 4, 2, "--out", g)
        run(capsys, "decompose", "min-l1m2", 4, "--out", d)
        obj = json.loads(d.read_text())
        obj["paths"][0] = obj["paths"][0][:-1]
        d.write_text(json.dumps(obj))
        code, out, _ = run(capsys, "verify", g, d)
        lines = out.splitlines()
        assert code == 1
        assert lines[0].startswith("UncoveredEdge") and lines[-1] == "FAIL violations=1"

    def test_decomposition_for_other_graph(self, capsys, tmp_path):
        g, d = tmp_path / "g.json", tmp_path / "d.json"
        run(capsys, "gen", "levi", 4, 3, "--out", g)
        run(capsys, "decompose", "min-l1m2", 4, "--out", d)
        code, out, err = run(capsys, "verify", g, d)
        assert code == 2 and out == "" and "different graph" in err

    def test_malformed_input(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ nope")
        code, out, err = run(capsys, "verify", bad, bad)
        assert code == 2 and out == "" and err.startswith("error:")
        assert run(capsys, "pathnumber", tmp_path / "missing.json")[0] == 2

    @pytest.mark.parametrize(
        "argv",
        [("bounds", 3, 4), ("gen", "levi", 1, 1), ("decompose", "walecki", 1),
         ("decompose", "gallai", 5, 7), ("frobnicate",), ("bounds", "x", 2)],
    )
    def test_domain_and_usage_errors(self, capsys, argv):
        code, out, _ = run(capsys, *argv)
        assert code == 2 and out == ""

    def test_pathnumber(self, capsys, tmp_path):
        g = tmp_path / "k5.json"
        run(capsys, "gen", "complete", 5, "--out", g)
        code, out, _ = run(capsys, "pathnumber", g, "--witness")
        lines = out.splitlines()
        assert code == 0 and lines[0].startswith("pathnumber=3 status=Exact")
        assert len(lines) == 4 and lines[1].startswith("P1: ")

    def test_pathnumber_budget(self, capsys, tmp_path):
        g = tmp_path / "l62.json"
        run(capsys, "gen", "levi", 6, 2, "--out", g)
        code, out, _ = run(capsys, "pathnumber", g, "--budget", 3)
        assert code == 3 and out.startswith("status=BudgetExceeded")

    def test_odd_search_budget(self, capsys):
        code, out, err = run(capsys, "decompose", "gallai", 5, 3, "--max-steps", 1)
        assert code == 3 and "error:" in err

    def test_gen_stdout(self, capsys):
        code, out, _ = run(capsys, "gen", "levi", 2, 2)
        assert code == 0 and out == (GOLDEN / "l1_2_2.json").read_text()
