"""Command-line interface: verbs, formats, determinism, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from qng.cli import main, parse_bound_expr, parse_family
from qng.enumeration import canonical_form
from qng.graph import (
    complete,
    complete_bipartite,
    cycle,
    cartesian_product,
    disjoint_union,
    h_graph,
    join,
    path,
    star,
    to_graph6,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_family_atoms():
    assert parse_family("K6") == complete(6)
    assert parse_family("K3,3") == complete_bipartite(3, 3)
    assert parse_family("P5") == path(5)
    assert parse_family("C6") == cycle(6)
    assert parse_family("star 6") == star(6)
    assert parse_family("H 2 1 1") == h_graph(2, 1, 1)
    assert parse_family("4K1").n == 4 and parse_family("4K1").m == 0


def test_parse_family_compound():
    assert parse_family("join(K2;E3)") == join(complete(2), parse_family("E3"))
    assert parse_family("union(K2;4K1)") == disjoint_union(complete(2), parse_family("4K1"))
    assert parse_family("cp(K3;K2)") == cartesian_product(complete(3), complete(2))
    assert parse_family("join(union(K2;K2);3K1)").n == 7
    with pytest.raises(ValueError):
        parse_family("wat(K2)")


def test_parse_bound_expr():
    assert parse_bound_expr("2n-5", 6) == 7
    assert parse_bound_expr("n-2", 6) == 4
    assert parse_bound_expr("7", 6) == 7
    assert parse_bound_expr("3n-4", 5) == 11
    with pytest.raises(ValueError):
        parse_bound_expr("x+1", 6)


def test_check_verb_json(capsys):
    code, out, _ = run_cli(capsys, "check", "--thm", "1.3",
                           "--graph6", to_graph6(cycle(4)), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "equality-certified"
    assert payload["family"] == "C_4"
    assert payload["certified"] is True


def test_check_verb_family_input(capsys):
    code, out, _ = run_cli(capsys, "check", "--thm", "1.4", "--family", "join(union(K2;K2);3K1)")
    assert code == 0
    assert "equality-certified" in out and "(2K_2)∇(3K_1)" in out


def test_scan_verb_interval_counts(capsys):
    code, out, _ = run_cli(capsys, "scan", "--n", "5", "--filter", "connected",
                           "--predicate", "sum-open-interval 5 6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["equality"]) == 8


def test_scan_determinism_under_jobs(capsys):
    base = run_cli(capsys, "scan", "--n", "5", "--filter", "connected",
                   "--thm", "1.2", "--format", "json")
    parallel = run_cli(capsys, "scan", "--n", "5", "--filter", "connected",
                       "--thm", "1.2", "--format", "json", "--jobs", "2")
    assert base == parallel


def test_scan_csv_and_range(capsys):
    code, out, _ = run_cli(capsys, "scan", "--n-range", "4..5", "--filter", "all",
                           "--thm", "1.2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,kind,graph6"
    assert any(line.startswith("4,equality,") for line in out.splitlines()[1:])


def test_scan_external_input(tmp_path, capsys):
    stream = tmp_path / "graphs.g6"
    stream.write_text("\n".join(to_graph6(g) for g in (cycle(6), complete(6))) + "\n")
    code, out, _ = run_cli(capsys, "scan", "--n", "6", "--filter", "connected",
                           "--thm", "problem1.2", "--input", str(stream), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == 2
    assert payload["equality"] == [canonical_form(cycle(6)).graph6]


def test_proof_check_verb(capsys):
    code, out, _ = run_cli(capsys, "proof-check", "--thm", "1.5", "--n-range", "8..12")
    assert code == 0
    assert out.count("pass") == 5
    code, out, _ = run_cli(capsys, "proof-check", "--thm", "1.2", "--n", "6")
    assert code == 0


def test_spectrum_verb(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--family", "K4", "--kind", "Q", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["eigenvalues"] == pytest.approx([6, 2, 2, 2])


def test_enumerate_verb(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--n", "4", "--filter", "connected")
    assert code == 0
    assert len(out.strip().splitlines()) == 6


def test_report_verb(capsys):
    code, out, _ = run_cli(capsys, "report", "--family", "C6", "--format", "csv")
    assert code == 0
    header = out.splitlines()[0]
    assert header == "graph6,bound,lhs,rhs,verdict,family"
    assert "thm-1.2" in out and "regular-bound" in out


def test_scan_violation_exit_code(capsys):
    # an intentionally false bound: every connected order-4 graph violates sum <= 0
    code, out, _ = run_cli(capsys, "scan", "--n", "4", "--filter", "connected",
                           "--predicate", "sum-le 0", "--format", "json")
    assert code == 2
    assert json.loads(out)["violations"]


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "check", "--thm", "1.3", "--graph6", "notgraph6!!")
    assert code == 1 and "error" in err
    code, _, err = run_cli(capsys, "check", "--thm", "1.3")
    assert code == 1
    code, _, err = run_cli(capsys, "scan", "--n", "5")
    assert code == 1


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "result.json"
    code, out, _ = run_cli(capsys, "check", "--thm", "1.3", "--family", "C4",
                           "--format", "json", "--output", str(out_path))
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["verdict"] == "equality-certified"


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qng.cli", "check", "--thm", "1.2", "--family", "star 6"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "equality-certified" in proc.stdout
