import io

import pytest

from conftest import NAMED
from induced_subtrees import (
    EnumerationOptions,
    brute_force_enumerate,
    compute_degeneracy_ordering,
    enumerate_subtrees,
    order_graph,
    parse_edge_list,
    to_edge_text,
    verify_ordering,
)
from induced_subtrees.cli import main
from induced_subtrees.degeneracy import ordering_from_sequence


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.txt"
        path.write_text(to_edge_text(NAMED[name]()))
        return str(path)

    return write


def test_degeneracy(graph_file):
    code, out = run("degeneracy", graph_file("P3"))
    lines = out.splitlines()
    assert code == 0 and lines[0] == "k 1"
    order = tuple(map(int, lines[1].split()))
    assert verify_ordering(NAMED["P3"](), ordering_from_sequence(order, 1))
    assert run("degeneracy", graph_file("K4"))[1].startswith("k 3\n")
    assert run("degeneracy", graph_file("H"))[1].startswith("k 2\n")


def test_enumerate_count(graph_file):
    assert run("enumerate", graph_file("H"), "--mode", "count") == (0, "11\n")
    assert run("enumerate", graph_file("triangle")) == (0, "6\n")
    assert run("enumerate", graph_file("H"), "--include-empty") == (0, "12\n")


def test_enumerate_list_matches_oracle(graph_file):
    for name in ("H", "C5", "star", "K4"):
        code, out = run("enumerate", graph_file(name), "--mode", "list")
        rows = sorted(tuple(map(int, line.split())) for line in out.splitlines())
        assert code == 0 and rows == brute_force_enumerate(NAMED[name]())


def test_enumerate_list_complement(graph_file):
    code, out = run("enumerate", graph_file("H"), "--mode", "list", "--complement")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 11
    complements = sorted(tuple(sorted(set(range(4)) - set(s))) for s in brute_force_enumerate(NAMED["H"]()))
    assert sorted(tuple(map(int, line.split())) for line in lines) == complements
    assert "2" in lines


def test_enumerate_deltas(graph_file):
    code, out = run("enumerate", graph_file("P3"), "--mode", "deltas")
    current, seen = set(), []
    for token in out.split():
        if token == "!":
            seen.append(tuple(sorted(current)))
        elif token[0] == "+":
            current.add(int(token[1:]))
        else:
            current.remove(int(token[1:]))
    assert code == 0 and sorted(seen) == brute_force_enumerate(NAMED["P3"]())
    assert not current


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 1\n")
    code, out = run("enumerate", str(bad))
    assert code == 2 and out == ""
    assert "self-loop" in capsys.readouterr().err
    assert run("degeneracy", str(tmp_path / "missing.txt"))[0] == 2


def test_dedupe_flag(tmp_path):
    f = tmp_path / "dup.txt"
    f.write_text("0 1\n1 0\n1 2\n")
    assert run("enumerate", str(f))[0] == 2
    assert run("enumerate", str(f), "--dedupe") == (0, "6\n")


def test_oracle(graph_file):
    code, out = run("oracle", graph_file("H"), "--what", "degeneracy")
    assert (code, out) == (0, "k 2\n")
    code, out = run("oracle", graph_file("P3"))
    assert out.splitlines() == ["0", "0 1", "0 1 2", "1", "1 2", "2"]


def test_gen_deterministic_and_round_trip():
    a = run("gen", "--n", "60", "--k", "3", "--seed", "5")[1]
    b = run("gen", "--n", "60", "--k", "3", "--seed", "5")[1]
    assert a == b
    g = parse_edge_list(a)
    assert g.n == 60 and to_edge_text(g) == a
    o = compute_degeneracy_ordering(g)
    assert o.k <= 3 and verify_ordering(g, o)


def test_bench_csv():
    code, out = run("bench", "--sizes", "200,400", "--k", "3", "--seed", "1", "--max-solutions", "5000")
    header, *rows = out.splitlines()
    assert code == 0
    assert header.split(",")[:7] == ["n", "m", "k", "N", "iterations", "elapsed_ns", "ns_per_solution"]
    for row in rows:
        fields = dict(zip(header.split(","), row.split(",")))
        n, N, iterations = int(fields["n"]), int(fields["N"]), int(fields["iterations"])
        assert iterations <= 2 * N + n
    # N agrees with count mode on the same generated graph
    gen = run("gen", "--n", "200", "--k", "3", "--seed", "1")[1]
    g = parse_edge_list(gen)
    assert enumerate_subtrees(order_graph(g), None, EnumerationOptions(max_solutions=5000)).N == int(rows[0].split(",")[3])


def test_complement_with_deltas_rejected(graph_file):
    with pytest.raises(SystemExit):
        run("enumerate", graph_file("H"), "--mode", "deltas", "--complement")
