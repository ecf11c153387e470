import csv
import json
import subprocess
import sys

import numpy as np
import pytest

import digraphlets as dg
from digraphlets.cli import main


@pytest.fixture
def cycle_file(tmp_path):
    path = tmp_path / "cycle.edgelist"
    path.write_text("0 1\n1 2\n2 0\n")
    return path


@pytest.fixture
def random_file(tmp_path):
    g = dg.random_digraph(25, 0.3, seed=17)
    path = tmp_path / "g.edgelist"
    dg.save_edge_list(g, path)
    return path


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_census_golden(cycle_file, tmp_path, capsys):
    out = tmp_path / "out"
    assert main(["census", str(cycle_file), "--out", str(out)]) == 0
    rows = _read_csv(out / "signature.csv")
    assert rows[0] == ["vertex", *dg.SIGNATURE_COLUMNS]
    expect = ["1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "2", "0", "0", "0", "0", "0"]
    assert rows[1] == ["0", *expect]
    assert rows[2] == ["1", *expect]
    assert rows[3] == ["2", *expect]
    assert "signature.csv" in capsys.readouterr().out


def test_census_raw_and_oracle_check(random_file, tmp_path):
    out = tmp_path / "o"
    code = main(["census", str(random_file), "--out", str(out),
                 "--raw", "--oracle-check"])
    assert code == 0
    rows = _read_csv(out / "raw_census.csv")
    assert len(rows[0]) == 40  # vertex column + 39 quantities
    assert len(rows) == 26


def test_census_normalized(cycle_file, tmp_path):
    out = tmp_path / "n"
    assert main(["census", str(cycle_file), "--out", str(out), "--normalized"]) == 0
    rows = _read_csv(out / "signature.csv")
    assert rows[1][1] == "0.5"


def test_census_json_format(cycle_file, tmp_path):
    out = tmp_path / "j"
    assert main(["census", str(cycle_file), "--out", str(out),
                 "--format", "json"]) == 0
    data = json.loads((out / "signature.json").read_text())
    assert data["columns"] == list(dg.SIGNATURE_COLUMNS)
    assert data["index"] == ["0", "1", "2"]
    assert data["values"][0][10] == 2


def test_gcm_outputs(random_file, tmp_path):
    out = tmp_path / "g"
    assert main(["gcm", str(random_file), "--out", str(out), "--theta", "0.6"]) == 0
    rows = _read_csv(out / "gcm.csv")
    assert rows[0] == ["class", *dg.SIGNATURE_COLUMNS]
    values = np.array([[float(c) for c in r[1:]] for r in rows[1:]])
    assert values.shape == (16, 16)
    assert np.allclose(values, values.T)
    assert np.allclose(np.diag(values), 1.0)
    mask = np.array([[int(c) for c in r[1:]] for r in _read_csv(out / "gcm_mask.csv")[1:]])
    assert set(np.unique(mask)) <= {-1, 0, 1}
    assert (out / "gcm_heatmap.svg").read_text().startswith("<svg")


def test_gcm_spearman_and_normalized(random_file, tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["gcm", str(random_file), "--out", str(out1)]) == 0
    assert main(["gcm", str(random_file), "--out", str(out2),
                 "--spearman", "--normalized"]) == 0
    assert (out1 / "gcm.csv").read_text() != (out2 / "gcm.csv").read_text()


def _make_cohort(tmp_path, copies=6):
    g = dg.random_digraph(20, 0.4, seed=5)
    d = tmp_path / "subjects"
    d.mkdir()
    for s in range(copies):
        dg.save_edge_list(dg.randomize_directions(g, seed=s), d / f"s{s:02d}.edgelist")
    return d


def test_cohort_identical_copies(tmp_path):
    d = tmp_path / "same"
    d.mkdir()
    g = dg.random_digraph(18, 0.5, seed=2)
    for k in range(10):
        dg.save_edge_list(g, d / f"c{k}.edgelist")
    out = tmp_path / "out"
    assert main(["cohort", str(d), "--out", str(out)]) == 0
    rows = _read_csv(out / "cohort_pos.csv")
    pct = {float(c) for r in rows[1:] for c in r[1:]}
    assert pct <= {0.0, 100.0}
    meta = json.loads((out / "cohort_meta.json").read_text())
    assert meta["count"] == 10
    assert meta["files"] == [f"c{k}.edgelist" for k in range(10)]


def test_cohort_worker_determinism(tmp_path, monkeypatch):
    d = _make_cohort(tmp_path)
    out1, out8 = tmp_path / "w1", tmp_path / "w8"
    monkeypatch.setenv("DIGRAPHLETS_WORKERS", "1")
    assert main(["cohort", str(d), "--out", str(out1)]) == 0
    monkeypatch.setenv("DIGRAPHLETS_WORKERS", "8")
    assert main(["cohort", str(d), "--out", str(out8)]) == 0
    for name in ("cohort_pos.csv", "cohort_neg.csv", "cohort_heatmap.svg",
                 "cohort_meta.json"):
        assert (out1 / name).read_bytes() == (out8 / name).read_bytes()


def test_cohort_bad_member_is_named(tmp_path, capsys):
    d = _make_cohort(tmp_path, copies=3)
    (d / "broken.edgelist").write_text("x y z\n")
    assert main(["cohort", str(d), "--out", str(tmp_path / "x")]) == 2
    assert "broken.edgelist" in capsys.readouterr().err


def test_cohort_env_validation(tmp_path, monkeypatch):
    d = _make_cohort(tmp_path, copies=2)
    monkeypatch.setenv("DIGRAPHLETS_WORKERS", "zero")
    assert main(["cohort", str(d), "--out", str(tmp_path / "x")]) == 2


def test_randomize_deterministic(random_file, tmp_path):
    out1, out2 = tmp_path / "r1", tmp_path / "r2"
    assert main(["randomize", str(random_file), "--seed", "9", "--out", str(out1)]) == 0
    assert main(["randomize", str(random_file), "--seed", "9", "--out", str(out2)]) == 0
    b1 = (out1 / "randomized.edgelist").read_bytes()
    assert b1 == (out2 / "randomized.edgelist").read_bytes()
    shuffled = dg.load_edge_list(out1 / "randomized.edgelist")
    original = dg.load_edge_list(random_file)
    assert np.array_equal(
        shuffled.connected_pairs()[0], original.connected_pairs()[0]
    )


def test_commands_compose(random_file, tmp_path):
    # randomize output feeds census; census output feeds cluster
    r, c, k = tmp_path / "r", tmp_path / "c", tmp_path / "k"
    assert main(["randomize", str(random_file), "--out", str(r)]) == 0
    assert main(["census", str(r / "randomized.edgelist"), "--out", str(c)]) == 0
    assert main(["cluster", str(c / "signature.csv"), "--out", str(k)]) == 0
    assert (k / "dendrogram.newick").read_text().rstrip("\n").endswith(";")


def test_prune_command(tmp_path):
    n = 20
    w = np.full((n, n), 1.0)
    np.fill_diagonal(w, 0.0)
    path = tmp_path / "w.csv"
    path.write_text("\n".join(",".join(f"{x:g}" for x in row) for row in w) + "\n")
    out = tmp_path / "p"
    assert main(["prune", str(path), "--out", str(out)]) == 0
    meta = json.loads((out / "prune_meta.json").read_text())
    assert meta["threshold"] == 0.0
    assert meta["arcs"] == n * (n - 1)
    assert meta["largest_component_fraction"] == 1.0
    pruned = dg.load_edge_list(out / "pruned.edgelist")
    assert pruned.n == n


def test_prune_unprunable_exits_2(tmp_path):
    w = np.zeros((20, 20))
    w[:5, :5] = 1.0
    np.fill_diagonal(w, 0.0)
    path = tmp_path / "w.csv"
    path.write_text("\n".join(",".join(f"{x:g}" for x in row) for row in w) + "\n")
    assert main(["prune", str(path), "--out", str(tmp_path / "x")]) == 2


def test_cluster_pipes_from_census(random_file, tmp_path):
    out = tmp_path / "c"
    assert main(["census", str(random_file), "--out", str(out)]) == 0
    assert main(["cluster", str(out / "signature.csv"), "--out", str(out)]) == 0
    newick = (out / "dendrogram.newick").read_text()
    assert newick.rstrip().endswith(";")
    order = (out / "leaf_order.txt").read_text().split()
    assert sorted(order, key=int) == [str(i) for i in range(25)]


def test_cluster_planted_groups_contiguous(tmp_path):
    rows = ["vertex," + ",".join(dg.SIGNATURE_COLUMNS)]
    rng = np.random.default_rng(1)
    for i in range(12):
        base = (i // 4) * 50.0
        vals = base + rng.uniform(0, 0.1, 16)
        rows.append(f"v{i}," + ",".join(f"{x:.4f}" for x in vals))
    path = tmp_path / "sig.csv"
    path.write_text("\n".join(rows) + "\n")
    out = tmp_path / "out"
    assert main(["cluster", str(path), "--out", str(out)]) == 0
    order = (out / "leaf_order.txt").read_text().split()
    groups = [int(v[1:]) // 4 for v in order]
    for g in range(3):
        where = [k for k, x in enumerate(groups) if x == g]
        assert where == list(range(min(where), max(where) + 1))


def test_oracle_command(cycle_file, tmp_path):
    out = tmp_path / "o"
    assert main(["oracle", str(cycle_file), "--out", str(out)]) == 0
    rows = _read_csv(out / "oracle_census.csv")
    assert len(rows) == 4 and len(rows[0]) == 40


def test_oracle_cap_exit(random_file, tmp_path):
    assert main(["oracle", str(random_file), "--cap", "10",
                 "--out", str(tmp_path / "x")]) == 2


def test_exit_codes(tmp_path, capsys):
    assert main(["census", str(tmp_path / "missing.edgelist")]) == 2
    assert "missing.edgelist" in capsys.readouterr().err
    empty = tmp_path / "empty.edgelist"
    empty.write_text("")
    assert main(["census", str(empty), "--out", str(tmp_path / "x")]) == 2
    assert "empty.edgelist" in capsys.readouterr().err
    assert main(["nonsense"]) == 1
    assert main([]) == 1
    assert main(["gcm", "whatever", "--theta", "2"]) == 1
    assert main(["census"]) == 1


def test_version_and_help():
    assert main(["--version"]) == 0
    assert main(["--help"]) == 0
    assert main(["census", "--help"]) == 0


def test_module_entry_point(cycle_file, tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "digraphlets", "census", str(cycle_file),
         "--out", str(tmp_path / "m")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert (tmp_path / "m" / "signature.csv").exists()
