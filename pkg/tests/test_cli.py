"""Command-line behavior: formats, exit codes, pipes, determinism."""

import io
import subprocess
import sys

import pytest

from distcolor.cli import main
from distcolor.coloring import parse_coloring
from distcolor.generators import cycle, path, petersen
from distcolor.graph import parse_graph, render_graph


def run_cli(argv, capsys, monkeypatch=None, stdin_text=None):
    """Run main() in process and return (exit_code, stdout, stderr)."""
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, g, name="graph.col"):
    target = tmp_path / name
    target.write_text(render_graph(g))
    return str(target)


def test_solve_petersen_header(tmp_path, capsys):
    code, out, err = run_cli(["solve", write_graph(tmp_path, petersen())], capsys)
    assert code == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0] == "c branch=special colors=4 certified=1"
    assert len(lines) == 11
    coloring = parse_coloring("\n".join(lines[1:]), 10)
    assert coloring.num_colors() == 4


def test_solve_six_cycle_reroutes_with_notice(tmp_path, capsys):
    code, out, err = run_cli(["solve", write_graph(tmp_path, cycle(6))], capsys)
    assert code == 0
    lines = out.splitlines()
    assert "six-cycle" in lines[0]
    assert lines[1] == "c branch=c6 colors=4 certified=1"
    coloring = parse_coloring("\n".join(lines[2:]), 6)
    assert coloring.values == (1, 2, 3, 1, 2, 4)


def test_solve_reads_stdin(capsys, monkeypatch):
    text = render_graph(path(5))
    code, out, _ = run_cli(["solve", "-"], capsys, monkeypatch, stdin_text=text)
    assert code == 0
    assert out.startswith("c branch=path_or_cycle colors=3 certified=1\n")


def test_solve_out_file(tmp_path, capsys):
    target = tmp_path / "result.txt"
    code, out, _ = run_cli(
        ["solve", write_graph(tmp_path, path(4)), "--out", str(target)], capsys
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("c branch=path_or_cycle")


def test_solve_then_verify_pipe(tmp_path, capsys):
    graph_file = write_graph(tmp_path, petersen())
    _, out, _ = run_cli(["solve", graph_file], capsys)
    coloring_file = tmp_path / "coloring.txt"
    coloring_file.write_text(out)
    code, out, err = run_cli(["verify", graph_file, str(coloring_file)], capsys)
    assert code == 0
    assert out == "distinguishing\n"
    assert err == ""


def test_verify_breakable_coloring_prints_witness(tmp_path, capsys):
    graph_file = write_graph(tmp_path, path(3))
    coloring_file = tmp_path / "coloring.txt"
    coloring_file.write_text("v 1 1\nv 2 2\nv 3 1\n")
    code, out, _ = run_cli(["verify", graph_file, str(coloring_file)], capsys)
    # a verdict either way is a successful verification, so still exit 0
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "not distinguishing; color-preserving witness:"
    assert "1 -> 3" in lines[1:]
    assert "3 -> 1" in lines[1:]


def test_verify_improper_coloring_fails(tmp_path, capsys):
    graph_file = write_graph(tmp_path, path(3))
    coloring_file = tmp_path / "coloring.txt"
    coloring_file.write_text("v 1 1\nv 2 1\nv 3 2\n")
    code, out, err = run_cli(["verify", graph_file, str(coloring_file)], capsys)
    assert code == 1
    assert out == ""
    assert "not proper" in err


def test_exact_values(tmp_path, capsys):
    code, out, _ = run_cli(["exact", write_graph(tmp_path, cycle(5))], capsys)
    assert (code, out) == (0, "3\n")
    code, out, _ = run_cli(["exact", write_graph(tmp_path, cycle(6))], capsys)
    assert (code, out) == (0, "4\n")
    code, out, _ = run_cli(["exact", write_graph(tmp_path, petersen())], capsys)
    assert (code, out) == (0, "4\n")


def test_exact_too_large(tmp_path, capsys):
    code, out, err = run_cli(["exact", write_graph(tmp_path, path(11))], capsys)
    assert code == 1
    assert out == ""
    assert "11 vertices" in err


def test_color2(tmp_path, capsys):
    code, out, _ = run_cli(["color2", write_graph(tmp_path, path(3))], capsys)
    assert code == 0
    lines = out.splitlines()
    # three distinct colors from the palette {1..4}; the header counts distinct
    assert lines[0] == "c colors=3 certified=1"
    assert parse_coloring("\n".join(lines[1:]), 3).values == (4, 1, 2)


def test_listcolor(tmp_path, capsys):
    graph_file = write_graph(tmp_path, path(3))
    lists_file = tmp_path / "lists.txt"
    lists_file.write_text("l 1 5 6 7\nl 2 5 6 7\nl 3 5 6 7\n")
    code, out, _ = run_cli(["listcolor", graph_file, str(lists_file)], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("c colors=")
    assert lines[0].endswith("certified=1")
    coloring = parse_coloring("\n".join(lines[1:]), 3)
    assert set(coloring.values) <= {5, 6, 7}


def test_gen_named_graph_round_trip(capsys):
    code, out, _ = run_cli(["gen", "petersen"], capsys)
    assert code == 0
    g = parse_graph(out)
    assert (g.n, g.m) == (10, 15)
    assert g == petersen()


def test_gen_accepts_underscore_kind(capsys):
    code, out, _ = run_cli(
        ["gen", "random_girth5", "--n", "12", "--d", "3", "--seed", "7"], capsys
    )
    assert code == 0
    g = parse_graph(out)
    assert g.n == 12
    assert g.max_degree() <= 3


def test_gen_solve_deterministic(capsys):
    argv = ["gen", "random-girth5", "--n", "15", "--d", "4", "--seed", "3"]
    _, first, _ = run_cli(argv, capsys)
    _, second, _ = run_cli(argv, capsys)
    assert first == second


def test_gen_unknown_kind(capsys):
    code, out, err = run_cli(["gen", "nope"], capsys)
    assert code == 1
    assert "unknown graph kind 'nope'" in err


def test_gen_missing_size(capsys):
    code, _, err = run_cli(["gen", "path"], capsys)
    assert code == 1
    assert "needs n" in err


def test_unknown_subcommand_exits_one(capsys):
    code, _, err = run_cli(["frobnicate"], capsys)
    assert code == 1
    assert "error" in err


def test_missing_file_exits_one(capsys):
    code, _, err = run_cli(["solve", "/no/such/file.col"], capsys)
    assert code == 1
    assert err.startswith("distcolor:")


def test_malformed_graph_exits_one(capsys, monkeypatch):
    text = "p edge 3 3\ne 1 2\ne 2 3\n"
    code, _, err = run_cli(["solve", "-"], capsys, monkeypatch, stdin_text=text)
    assert code == 1
    assert "promises 3 edges, found 2" in err


def test_girth_precondition_exits_one(capsys, monkeypatch):
    triangle = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
    code, _, err = run_cli(["solve", "-"], capsys, monkeypatch, stdin_text=triangle)
    assert code == 1
    assert "girth" in err


def test_corpus_small_count(capsys):
    code, out, _ = run_cli(["corpus", "--count", "50"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7
    for number, line in enumerate(lines, start=1):
        assert line.startswith(f"criterion {number} ")
        assert "PASS" in line


def test_module_entry_point(tmp_path):
    graph_file = write_graph(tmp_path, cycle(5))
    result = subprocess.run(
        [sys.executable, "-m", "distcolor", "exact", graph_file],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout == "3\n"
