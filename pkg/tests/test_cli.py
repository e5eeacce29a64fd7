import csv
import json

import pytest

from steiner_tsp import generators, io
from steiner_tsp.cli import main
from steiner_tsp.report import validate_report


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_solve_petersen_json(workdir, capsys):
    assert main(["gen", "named", "petersen", "-o", "p.txt"]) == 0
    assert main(["solve", "p.txt", "--oracle", "--json", "out.json", "--lower-bound-alpha", "1/4"]) == 0
    out = json.loads((workdir / "out.json").read_text())
    assert validate_report(out) == []
    steiner = out["results"][0]
    assert steiner["algorithm"] == "steiner"
    assert out["opt"] <= steiner["achieved"] <= 13
    assert out["corollary"]["threshold"] == "8/5"
    assert "case" in capsys.readouterr().out


def test_solve_with_planted_tree(workdir):
    assert main(["gen", "planted", "--n", "200", "--extra", "10", "--seed", "4", "-o", "pl.txt"]) == 0
    assert (workdir / "pl.tree").exists()
    assert main(["solve", "pl.txt", "--tree", "pl.tree", "--json", "r.json"]) == 0
    r = json.loads((workdir / "r.json").read_text())
    assert r["results"][0]["certificate"]["tree_strategy"] == "given"
    assert r["results"][0]["achieved"] <= 4 * 200 // 3


def test_solve_proven_absent(workdir, capsys):
    io.write_graph("k.txt", generators.complete_bipartite(2, 5))
    assert main(["solve", "k.txt", "--json", "-"]) == 0
    out = capsys.readouterr().out
    assert "proven" in out
    payload = json.loads(out[out.index("{"):])
    assert payload["results"][0]["certificate"]["proven_absent"] is True


@pytest.mark.parametrize(
    "content, code",
    [("3 x\n", 2), ("3 2\n0 1\n1 2\n", 3)],
)
def test_exit_codes(workdir, content, code):
    (workdir / "g.txt").write_text(content)
    assert main(["solve", "g.txt"]) == code


def test_oracle_too_large_exits_4(workdir):
    io.write_graph("c.txt", generators.cycle(30))
    assert main(["solve", "c.txt", "--oracle"]) == 4


def test_bad_tree_exits_3(workdir):
    io.write_graph("c.txt", generators.cycle(6))
    (workdir / "c.tree").write_text("6 5 tree\n0 1\n1 2\n2 3\n3 4\n0 3\n")
    assert main(["solve", "c.txt", "--tree", "c.tree"]) == 3


def test_analyze(workdir, capsys):
    io.write_graph("p.txt", generators.petersen())
    assert main(["analyze", "p.txt", "--subset", "0 2 4 6", "--json", "a.json"]) == 0
    a = json.loads((workdir / "a.json").read_text())
    assert a["kappa"] == 3
    assert a["subset"]["predicates"]["fournier"] is True
    assert a["dfs_circulation"]["total_cost"] <= a["dfs_circulation"]["k"]


def test_bench_parallel_matches_serial(workdir, monkeypatch, capsys):
    assert main(["gen", "suite", "s", "--count", "8", "--max-n", "9", "--seed", "3"]) == 0
    assert main(["bench", "s", "--oracle", "--csv", "serial.csv"]) == 0
    monkeypatch.setenv("STEINER_TSP_THREADS", "3")
    assert main(["bench", "s", "--oracle", "--csv", "par.csv"]) == 0
    strip = lambda rows: [{k: v for k, v in r.items() if k != "wall_time"} for r in rows]
    serial = list(csv.DictReader(open("serial.csv")))
    par = list(csv.DictReader(open("par.csv")))
    assert strip(serial) == strip(par)
    assert len(serial) >= 16
    assert all(r["bound_ok"] == "True" for r in serial)
    assert all(int(r["opt"]) <= int(r["achieved"]) for r in serial)


def test_gen_to_stdout(capsys):
    assert main(["gen", "random", "--n", "6", "--m", "8", "--seed", "1"]) == 0
    n, edges, _ = io.parse_edge_list(capsys.readouterr().out)
    assert n == 6 and len(edges) == 8


def test_module_entry_point():
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "steiner_tsp", "gen", "named", "cycle:5"], capture_output=True, text=True)
    assert r.returncode == 0 and "5 5" in r.stdout.splitlines()


def test_solve_theta_with_path_tree(workdir):
    io.write_graph("theta6.txt", generators.theta(6, 3))
    (workdir / "theta6.tree").write_text("6 5 tree\n0 1\n1 2\n2 3\n3 4\n4 5\n")
    assert main(["solve", "theta6.txt", "--tree", "theta6.tree", "--json", "t.json"]) == 0
    cert = json.loads((workdir / "t.json").read_text())["results"][0]["certificate"]
    assert cert["case"] == "tree_matching"
    assert cert["achieved"] == 6


def test_analyze_kbip_right_side_all_false(workdir):
    io.write_graph("k.txt", generators.complete_bipartite(2, 3))
    assert main(["analyze", "k.txt", "--subset", "2 3 4", "--json", "a.json"]) == 0
    flags = json.loads((workdir / "a.json").read_text())["subset"]["predicates"]
    assert flags == {"dirac": False, "shi": False, "fournier": False}


def test_analyze_cycle_certificate(workdir):
    io.write_graph("c.txt", generators.cycle(9))
    assert main(["analyze", "c.txt", "--json", "a.json"]) == 0
    c = json.loads((workdir / "a.json").read_text())["dfs_circulation"]
    assert (c["total_cost"], c["k"], c["bound_num"], c["bound_den"]) == (0, 1, 38, 3)
