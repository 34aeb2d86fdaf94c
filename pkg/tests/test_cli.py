import json

import pytest

from bchromatic.cli import bench_size, main, parse_seeds
from bchromatic.graph import has_c4, parse_dimacs


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c4free_68(tmp_path, capsys):
    path = tmp_path / "g.dimacs"
    assert run(capsys, "gen", "68", "4", "--c4free", "--seed", "7", "-o", str(path))[0] == 0
    return path


def test_gen_c4free(c4free_68):
    g = parse_dimacs(c4free_68.read_text())
    assert g.n == 68 and g.m == 136 and not has_c4(g)
    stats = json.loads((c4free_68.parent / "g.dimacs.json").read_text())
    assert stats["has_c4"] is False and stats["girth"] != 4 and stats["d"] == 4


def test_gen_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "104", "4", "--seed", "3")
    assert code == 0
    g = parse_dimacs(out)
    assert g.n == 104 and g.m == 208


def test_gen_infeasible(capsys):
    assert run(capsys, "gen", "5", "3", "--seed", "1")[0] == 2
    assert run(capsys, "gen", "10", "4", "--c4free", "--seed", "1")[0] == 2


def test_gen_requires_seed(capsys):
    assert run(capsys, "gen", "10", "3")[0] == 2


def test_solve_success(capsys, c4free_68):
    code, out, _ = run(capsys, "solve", str(c4free_68), "--mode", "c4free")
    report = json.loads(out)
    assert code == 0 and report["outcome"] == "success"
    assert len(report["dominants"]) == 5
    assert report["verdict"]["is_b_coloring"]
    assert report["command"] == ["solve", str(c4free_68), "--mode", "c4free"]


def test_solve_warns_on_c4(capsys):
    _, out, err = run(capsys, "solve", "named:complete_bipartite(4,4)", "--mode", "c4free")
    assert "4-cycle" in err
    assert json.loads(out)["graph"]["has_c4"] is True


def test_solve_complete_graph(capsys):
    code, out, _ = run(capsys, "solve", "named:complete(5)")
    assert code == 0 and json.loads(out)["outcome"] == "success"


def test_solve_failure_and_repro(capsys, tmp_path):
    snap = tmp_path / "snap.json"
    code, out, _ = run(capsys, "solve", "named:petersen", "--snapshot", str(snap))
    assert code == 1 and json.loads(out)["outcome"] == "failure"
    code, out, _ = run(capsys, "repro", str(snap))
    assert code == 1 and json.loads(out)["reproduced"] is True


def test_solve_usage_errors(capsys, tmp_path):
    assert run(capsys, "solve", "named:cycle(4)", "--mode", "c4free")[0] == 2
    assert run(capsys, "solve", str(tmp_path / "missing"))[0] == 2
    bad = tmp_path / "bad.dimacs"
    bad.write_text("p edge 2 1\ne 1 5\n")
    assert run(capsys, "solve", str(bad))[0] == 2
    path = tmp_path / "star.dimacs"
    path.write_text("p edge 3 2\ne 1 2\ne 1 3\n")
    assert run(capsys, "solve", str(path))[0] == 2


def test_exact_petersen(capsys):
    code, out, _ = run(capsys, "exact", "named:petersen")
    report = json.loads(out)
    assert code == 0 and report["b"] == 3 and report["witness_verified"]


def test_exact_budget(capsys):
    assert run(capsys, "exact", "named:petersen", "--budget", "5")[0] == 1


def test_verify(capsys, tmp_path):
    good = tmp_path / "good.json"
    good.write_text("[1, 1, 1, 2, 2, 2]")
    code, out, _ = run(capsys, "verify", "named:complete_bipartite(3,3)", str(good), "2")
    assert code == 0 and json.loads(out)["is_b_coloring"]
    bad = tmp_path / "bad.txt"
    bad.write_text("0:1\n1:1\n2:1\n3:1\n4:2\n5:2\n")
    code, out, _ = run(capsys, "verify", "named:complete_bipartite(3,3)", str(bad), "2")
    assert code == 1 and not json.loads(out)["proper"]
    junk = tmp_path / "junk"
    junk.write_text("[1, 2")
    assert run(capsys, "verify", "named:complete_bipartite(3,3)", str(junk), "2")[0] == 2


def test_parse_seeds_and_sizes():
    assert parse_seeds(["1-3", "7", "9,10"]) == [1, 2, 3, 7, 9, 10]
    assert parse_seeds([]) == []
    assert bench_size(4, 1.0, "c4free") == 68
    assert bench_size(5, 1.0, "general") == 210
    assert (bench_size(3, 0.5, "c4free") * 3) % 2 == 0


def test_bench_rows(capsys, tmp_path):
    out_path = tmp_path / "b.csv"
    code, out, _ = run(capsys, "bench", "--d", "4", "--seeds", "1-3", "-o", str(out_path))
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "d,n,seed,mode,strategy,success,rotations,ms"
    assert len(lines) == 4 and all(line.split(",")[5] == "1" for line in lines[1:])
    assert out_path.read_text() == out


def test_bench_empty_seeds(capsys):
    code, out, _ = run(capsys, "bench", "--d", "4", "--seeds")
    assert code == 0 and out == "d,n,seed,mode,strategy,success,rotations,ms\n"


def test_bench_workers_match_serial(capsys):
    _, serial, _ = run(capsys, "bench", "--d", "4", "--seeds", "1", "2", "--mode", "general")
    _, pooled, _ = run(capsys, "bench", "--d", "4", "--seeds", "1", "2", "--mode", "general", "--workers", "2")
    strip = lambda text: [line.rsplit(",", 1)[0] for line in text.splitlines()]
    assert strip(serial) == strip(pooled)


def test_bench_rejects_matching_in_general(capsys):
    assert run(capsys, "bench", "--d", "4", "--seeds", "1", "--mode", "general", "--strategy", "matching")[0] == 2


def test_bench_sweep_around_bounds(capsys):
    _, out, _ = run(capsys, "bench", "--d", "4", "--n-multipliers", "0.5", "1", "2", "--seeds", "1-20")
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 60
    at_or_above = [r.split(",") for r in rows if int(r.split(",")[1]) >= 68]
    assert len(at_or_above) == 40 and all(r[5] == "1" for r in at_or_above)
    _, out, _ = run(capsys, "bench", "--d", "4", "--seeds", "1-20", "--mode", "general")
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 20 and all(r.split(",")[1] == "104" and r.split(",")[5] == "1" for r in rows)
