"""End-to-end checks of the ddlab command line tool."""

import json
import os
import subprocess

import pytest

BIN = os.environ.get("DDLAB_BIN")

pytestmark = pytest.mark.skipif(not BIN, reason="DDLAB_BIN not set")


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def write_points(path, points):
    path.write_text(json.dumps({"points": points}))


def test_gen_distances_quadruples(tmp_path):
    s = tmp_path / "s.json"
    p = tmp_path / "p.json"
    run("--seed", "3", "--out", str(s), "gen", "circle", "--n", "6")
    run("--seed", "4", "--out", str(p), "gen", "plane", "--n", "5")

    csv = run("distances", "--s", str(s), "--p", str(p))
    lines = csv.strip().splitlines()
    assert lines[0] == "sq_distance,multiplicity"
    assert sum(int(row.rsplit(",", 1)[1]) for row in lines[1:]) == 30

    out = json.loads(run("quadruples", "--s", str(s), "--p", str(p), "--check-oracle"))
    assert out["oracle_ok"]
    assert out["q"] == out["oracle"]


def test_incidence_identity(tmp_path):
    s = tmp_path / "s.json"
    p = tmp_path / "p.json"
    write_points(s, [["1", "0"], ["0", "1"], ["3/5", "4/5"]])
    write_points(p, [["2", "0"], ["7/5", "1/5"]])
    out = json.loads(run("incidence", "--s", str(s), "--p", str(p), "--check-identity"))
    assert out["incidences"] == 4
    assert out["identity_ok"]


def test_exact_mode_rejects_floats(tmp_path):
    s = tmp_path / "s.json"
    s.write_text(json.dumps({"points": [[0.5, "1"]]}))
    p = tmp_path / "p.json"
    write_points(p, [["2", "0"]])
    proc = subprocess.run(
        [BIN, "distances", "--s", str(s), "--p", str(p)], capture_output=True, text=True
    )
    assert proc.returncode == 1
    assert "exact mode" in proc.stderr


def test_curves_build_and_gcd(tmp_path):
    f1 = tmp_path / "f1.json"
    f2 = tmp_path / "f2.json"
    run("--out", str(f1), "curves", "build", "--p", "2,0", "--q", "7/5,1/5", "--reduced")
    run("--out", str(f2), "curves", "build", "--p", "4,0", "--q", "14/5,2/5", "--reduced")
    out = json.loads(run("curves", "gcd", "--f", str(f1), "--g", str(f2)))
    assert out["common_component"] is False
    same = json.loads(run("curves", "gcd", "--f", str(f1), "--g", str(f1)))
    assert same["common_component"] is True


def test_r4_commands(tmp_path):
    out = json.loads(run("r4", "pair-intersect", "--pq", "2,0;7/5,1/5", "--pq2", "4,0;14/5,2/5"))
    assert out["result"] == "count"
    assert out["count"] == 0

    flat = tmp_path / "flat.json"
    flat.write_text(
        json.dumps(
            {
                "hyperplanes": [
                    {"normal": ["0", "1", "0", "0"], "offset": "4/5"},
                    {"normal": ["2", "0", "-7/5", "-1/5"], "offset": "1"},
                ]
            }
        )
    )
    out = json.loads(run("r4", "flat-intersect", "--pq", "2,0;7/5,1/5", "--flat", str(flat)))
    assert out["count"] == 2
    assert len(out["witnesses"]) == 2

    run("--seed", "9", "r4", "verify", "--trials", "40")


def test_concentric_commands(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "r1": "1",
                "r2": "3/2",
                "s_params": ["0", "1/3", "3", "-1/7"],
                "p_params": ["1/5", "2/5", "5/3", "4", "-2/9"],
            }
        )
    )
    out = json.loads(run("concentric", "report", "--cfg", str(cfg)))
    assert out["chain_ok"]

    out = json.loads(run("concentric", "counterexample", "--n", "64", "--scale", "3"))
    assert out["delta"] <= 64
    out = json.loads(run("concentric", "counterexample", "--n", "4", "--scale", "2"))
    assert out["delta"] == 3


def test_experiment_sweep_deterministic(tmp_path):
    cfg = tmp_path / "exp.json"
    out_csv = tmp_path / "report.csv"
    cfg.write_text(
        json.dumps(
            {
                "generator": "random",
                "sizes": [4, 8],
                "seed": 5,
                "mode": "exact",
                "out": str(out_csv),
                "epsilon": 0.01,
            }
        )
    )
    run("experiment", "--config", str(cfg))
    first = out_csv.read_text()
    run("experiment", "--config", str(cfg))
    assert out_csv.read_text() == first
    assert first.splitlines()[0] == "s_size,p_size,delta,bound,ratio,energy_lower_bound,q,q_offdiag,diagonal"
    assert len(first.splitlines()) == 5
