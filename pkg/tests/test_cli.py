import io
import json
import subprocess
import sys

import pytest

from imbalance.cli import main, parse_arcs, to_dot
from imbalance import OrientedDigraph, imbalance_sequence, multigraph_realize


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_check_feasible():
    assert run("check", "1", "1", "-2") == (0, "FEASIBLE\n")


def test_check_prefix_violation():
    assert run("check", "2", "-2") == (1, "INFEASIBLE: prefix k=1 sum 2 > 1\n")


def test_check_nonzero_sum():
    assert run("check", "1", "1", "-1") == (1, "INFEASIBLE: sum = 1\n")


def test_check_malformed(capsys):
    code, _ = run("check", "1", "x")
    assert code == 2
    assert "not an integer" in capsys.readouterr().err


def test_check_from_file(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("1 1\n-2\n")
    assert run("check", "--file", str(path))[0] == 0
    assert run("check", "--file", str(tmp_path / "missing"))[0] == 2


def test_usage_error():
    assert run("frobnicate")[0] == 2
    assert run("tournament", "x")[0] == 2


def test_realize_plain():
    code, out = run("realize", "1", "1", "-2")
    assert code == 0
    g = parse_arcs(out)
    assert g.arcs == [(0, 2), (1, 2)]
    assert imbalance_sequence(g) == [1, 1, -2]


def test_realize_unsorted_reports_caller_order():
    code, out = run("realize", "-2", "1", "1")
    assert code == 0
    assert "# sorted 1 1 -2" in out
    assert "# sort_perm 1 2 0" in out
    assert imbalance_sequence(parse_arcs(out)) == [-2, 1, 1]


def test_realize_dominance_json():
    code, out = run("realize", "--method", "dominance", "1", "1", "-2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["shifts"]) == 1
    assert doc["imbalances"] == [1, 1, -2]


def test_realize_multigraph():
    code, out = run("realize", "--method", "multigraph", "3", "-3", "--json")
    assert code == 0
    assert json.loads(out)["arcs"] == [[0, 1, 3]]
    assert run("realize", "--method", "multigraph", "3", "-2")[0] == 1


def test_realize_infeasible():
    code, out = run("realize", "2", "-2")
    assert code == 1
    assert out.startswith("INFEASIBLE")


def test_realize_dot(tmp_path):
    path = tmp_path / "g.dot"
    assert run("realize", "1", "1", "-2", "--dot", str(path))[0] == 0
    text = path.read_text()
    assert text == to_dot(OrientedDigraph(3, [(0, 2), (1, 2)]))
    assert '2 [label="-2"];' in text and "0 -> 2;" in text


def test_dot_multigraph():
    text = to_dot(multigraph_realize((2, -1, -1)))
    assert '0 -> 1;' in text and '0 -> 2;' in text


def test_reduce_trace_paper_example():
    code, out = run("reduce", "--trace", "5", "3", "2", "2", "2", "2", "-5", "-5", "-6")
    assert code == 0
    first = out.split("step 2")[0]
    assert "0 1 1 0 0 1 1 1" in first
    assert "3 3 3 2 2 -4 -4 -5" in first


def test_reduce_base_and_infeasible():
    assert run("reduce", "0") == (0, "0\n(empty)\n")
    assert run("reduce", "2", "-2")[0] == 1


def test_tournament(tmp_path):
    code, out = run("tournament", "4", "--dot", str(tmp_path / "t.dot"))
    assert code == 0
    assert "# imbalances 3 1 -1 -3" in out
    assert parse_arcs(out).num_arcs() == 6


def test_imbalance_file(tmp_path):
    path = tmp_path / "g.arcs"
    path.write_text("# two arcs into 2\n0 2\n1 2\n")
    assert run("imbalance", str(path)) == (0, "1 1 -2\n")


def test_imbalance_isolated_vertices(tmp_path):
    path = tmp_path / "g.arcs"
    path.write_text("n 5\n0 2\n")
    assert run("imbalance", str(path)) == (0, "1 0 -1 0 0\n")


@pytest.mark.parametrize(
    "text",
    ["0 1\n1 0\n", "0 0\n", "0 1 2\n", "0 1\nn 3\n", "n 2\n0 5\n", "a b\n"],
)
def test_imbalance_bad_files(tmp_path, text):
    path = tmp_path / "bad.arcs"
    path.write_text(text)
    assert run("imbalance", str(path))[0] == 2


def test_oracle_n():
    code, out = run("oracle", "4")
    assert code == 0
    assert out == "is_feasible agrees with brute force on all 4-vertex zero-sum sequences\n"


def test_oracle_sequence():
    code, out = run("oracle", "1", "1", "-2")
    assert code == 0
    assert out.startswith("REALIZABLE")
    assert run("oracle", "2", "-2") == (1, "NOT REALIZABLE\n")
    assert run("oracle", "--sequence", "0")[0] == 0
    assert run("oracle", "9")[0] == 2


def test_enumerate():
    code, out = run("enumerate", "3")
    assert code == 0
    assert out.splitlines() == ["2 0 -2", "2 -1 -1", "1 1 -2", "1 0 -1", "0 0 0"]
    assert run("enumerate", "7", "--count") == (0, "1111\n")
    assert run("enumerate", "9")[0] == 2


def test_module_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "imbalance", "check", "--file", "-"],
        input="3 -1 -1 -1",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "FEASIBLE\n"


def test_realize_output_is_stable():
    assert run("realize", "2", "0", "-1", "-1") == run("realize", "2", "0", "-1", "-1")
