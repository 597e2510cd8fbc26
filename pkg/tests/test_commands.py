import json

from edgesquare.__main__ import main
from edgesquare.commands import Classify, Gallery, Complex, Homology, Enumerate, EXIT_OK, EXIT_REFUSED
from edgesquare.gallery import q9, q12, cycle_complement
from edgesquare.graph import to_graph6, from_edge_list


def json_lines(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines()]


def test_classify_inline(capsys):
    assert Classify(graph=to_graph6(q9()), oracle=True).run() == EXIT_OK
    row, = json_lines(capsys)
    assert row["buchsbaum_square"] and row["gorenstein_locally_tf"] and not row["cm_square"]
    assert row["gallery_match"]["family"] == "Q9"
    assert row["agreement"] == dict(buchsbaum=True, gorenstein=True)


def test_classify_file_with_malformed_lines(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("A_\nAa\n\nBw\nA?\n")
    assert Classify(input=str(path)).run() == EXIT_REFUSED
    rows = json_lines(capsys)
    assert [r["line"] for r in rows] == [1, 2, 4, 5]
    assert "error" not in rows[0] and "error" not in rows[2]
    assert rows[1]["error"].startswith("Graph6Error")
    assert rows[3]["error"].startswith("IsolatedVertexError")


def test_classify_edge_lists(tmp_path, capsys):
    path = tmp_path / "graphs.txt"
    path.write_text("3 3\n0 1\n1 2\n0 2\n\n2 1\n0 1\n")
    assert Classify(input=str(path), format="edgelist").run() == EXIT_OK
    rows = json_lines(capsys)
    assert [r["graph6"] for r in rows] == ["Bw", "A_"]
    assert [r["cm_square"] for r in rows] == [False, True]


def test_classify_empty_input(tmp_path, capsys):
    path = tmp_path / "empty.g6"
    path.write_text("")
    assert Classify(input=str(path)).run() == EXIT_OK
    assert capsys.readouterr().out == ""


def test_classify_pretty(capsys):
    assert Classify(graph=to_graph6(q12()), pretty=True).run() == EXIT_OK
    out = capsys.readouterr().out
    assert "buchsbaum_square" in out and "Q12" in out


def test_gallery_command(capsys):
    assert Gallery(name="Q9").run() == EXIT_OK
    row, = json_lines(capsys)
    assert row["graph6"] == to_graph6(q9())
    assert row["labels"][:3] == ["a", "b", "c"]
    assert len(row["edge_list"]) == 15
    assert from_edge_list(row["n"], row["edge_list"]) == q9()
    assert Gallery(name="CycleComplement", n=6).run() == EXIT_OK
    assert json_lines(capsys)[0]["name"] == "CycleComplement(6)"


def test_complex_command(capsys):
    assert Complex(graph=to_graph6(q12())).run() == EXIT_OK
    row, = json_lines(capsys)
    assert row["f_vector"] == [12, 45, 66, 33]
    assert row["reduced_euler_characteristic"] == -1
    assert row["pseudomanifold"]


def test_homology_command(capsys):
    assert Homology(graph=to_graph6(cycle_complement(6)), char=32003).run() == EXIT_OK
    row, = json_lines(capsys)
    assert row["betti"] == [0, 0, 1]
    assert row["gorenstein"] and row["cm"] and row["char"] == 32003
    assert len(row["links"]) == 1 + 6 + 6


def test_enumerate_command(capsys):
    assert Enumerate(n=4, count=True).run() == EXIT_OK
    assert json_lines(capsys)[0]["count"] == 11
    assert Enumerate(n=3).run() == EXIT_OK
    assert len(capsys.readouterr().out.split()) == 4


def test_main(capsys):
    assert main("enumerate", "n=4", "no_isolated=True", "count=True") == EXIT_OK
    assert json_lines(capsys)[0]["count"] == 7
    assert main("classify", "bogus=1") == EXIT_REFUSED
    assert main("frobnicate") == EXIT_REFUSED
    assert main("homology", "char=4", "graph=A_") == EXIT_REFUSED
    assert main("verify", "max_n=3", "gallery=False") == EXIT_OK


def test_verify_refuses_sizes_beyond_enumeration():
    assert main("verify", "min_n=10", "max_n=10", "gallery=False") == EXIT_REFUSED
    assert main("verify", "min_n=4", "max_n=3") == EXIT_REFUSED
