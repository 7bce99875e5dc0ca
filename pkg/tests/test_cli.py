import csv
import io
import json

import pytest

from thyme.cli import main
from thyme.counting import CountOverflowError

from conftest import E1_PAIRS

E1_TSV = "".join(f"{t}\t{','.join(map(str, sorted(s)))}\n" for s, t in E1_PAIRS)


@pytest.fixture
def e1_file(tmp_path):
    p = tmp_path / "e1.tsv"
    p.write_text(E1_TSV)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def count_column(text):
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["motif_id", "count"] and len(rows) == 97
    return [int(r[1]) for r in rows[1:]]


@pytest.mark.parametrize("algo", ["bruteforce", "dp", "thyme", "thyme-plus"])
def test_count_e1(capsys, e1_file, algo):
    code, out, _ = run(capsys, "count", "--algo", algo, "--delta", "3", "--input", e1_file)
    assert code == 0 and sum(count_column(out)) == 4


def test_count_outputs_identical_across_algorithms(capsys, e1_file, tmp_path):
    outs = []
    for algo in ("dp", "thyme-plus"):
        dest = tmp_path / f"{algo}.csv"
        assert main(["count", "--algo", algo, "--delta", "3", "-i", e1_file, "-o", str(dest)]) == 0
        outs.append(dest.read_bytes())
    assert outs[0] == outs[1]


def test_count_json(capsys, e1_file):
    code, out, _ = run(capsys, "count", "--delta", "3", "-i", e1_file, "--json", "--seed", "2")
    doc = json.loads(out)
    assert code == 0 and sum(doc["counts"].values()) == 4
    assert {"dataset", "delta", "algorithm", "wall_time_ms", "peak_projected_nodes", "seed"} <= set(doc)


def test_trio_input(capsys, tmp_path):
    (tmp_path / "x-nverts.txt").write_text("2\n2\n2\n")
    (tmp_path / "x-simplices.txt").write_text("1\n2\n2\n3\n1\n2\n")
    (tmp_path / "x-times.txt").write_text("1\n2\n3\n")
    code, out, _ = run(capsys, "count", "--delta", "5", "-i", str(tmp_path / "x"), "--format", "trio")
    assert code == 0 and sum(count_column(out)) == 1


def test_motif_table(capsys):
    code, out, _ = run(capsys, "motif-table")
    assert code == 0 and len(out.strip().splitlines()) == 97


def test_randomize_deterministic(capsys, e1_file):
    for mode in ("shuffle", "hypercl"):
        _, a, _ = run(capsys, "randomize", "--mode", mode, "--seed", "4", "-i", e1_file)
        _, b, _ = run(capsys, "randomize", "--mode", mode, "--seed", "4", "-i", e1_file)
        assert a == b and len(a.splitlines()) == 5


def test_profile_and_similarity(capsys, e1_file, tmp_path):
    paths = []
    for seed in (1, 2):
        p = tmp_path / f"p{seed}.json"
        assert main(["profile", "-i", e1_file, "--delta", "3", "--replicas", "2", "--seed", str(seed), "-o", str(p)]) == 0
        doc = json.loads(p.read_text())
        assert len(doc["profile"]) == 96 and doc["replicas"] == 2 and len(doc["seeds"]) == 2
        paths.append(str(p))
    code, out, _ = run(capsys, "similarity", *paths)
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 3 and float(rows[1][1]) == pytest.approx(1.0)


def test_similarity_rejects_bad_profile(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"profile": [1.0, 2.0]}))
    assert run(capsys, "similarity", str(p))[0] == 1


@pytest.mark.parametrize("fset, width", [("thm96", 96), ("thm26", 26), ("shm26", 26)])
def test_features(capsys, e1_file, fset, width):
    code, out, _ = run(capsys, "features", "--set", fset, "--delta", "3", "-i", e1_file)
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6 and all(len(r) == width for r in rows)
    if fset == "thm96":
        assert rows[0][:3] == ["1", "2", "3"]
        assert sum(int(x) for x in rows[2]) == 3


def test_predict(capsys, tmp_path):
    from thyme.io import write_tsv
    from thyme.synthetic import local_repetition_corpus

    p = tmp_path / "g.tsv"
    write_tsv(local_repetition_corpus(0, n_edges=300, n_sets=30, n_nodes=50), p)
    code, out, _ = run(capsys, "predict", "-i", str(p), "--delta", "10", "--epochs", "50")
    reports = json.loads(out)
    assert code == 0 and [r["feature_set"] for r in reports] == ["thm96", "thm26", "shm26"]


@pytest.mark.parametrize(
    "what, expect",
    [("repetition", "repetitions,node_sets\n1,3\n2,1\n"), ("locality", None), ("valid-fraction", None)],
)
def test_stats(capsys, e1_file, what, expect):
    code, out, _ = run(capsys, "stats", "--what", what, "--delta", "3", "-i", e1_file)
    assert code == 0
    if expect:
        assert out == expect
    elif what == "locality":
        assert json.loads(out)["mean_interval"] == 2
    else:
        assert json.loads(out)["valid_static_fraction"] == 0.5


def test_bench(capsys, e1_file):
    code, out, _ = run(capsys, "bench", "-i", e1_file, "--deltas", "1,3", "--algos", "thyme,thyme-plus",
                       "--backends", "python")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 4
    assert {r["total_instances"] for r in rows if r["delta"] == "3"} == {"4"}
    assert all(int(r["peak_memory_bytes"]) > 0 for r in rows)


def test_usage_errors(capsys, e1_file):
    assert run(capsys, "count", "--bogus")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "count", "--algo", "nope", "--delta", "1", "-i", e1_file)[0] == 1
    assert run(capsys, "bench", "-i", e1_file, "--algos", "nope", "--backends", "python")[0] == 1


def test_data_errors(capsys, tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("x\t1,2\n")
    code, _, err = run(capsys, "count", "--delta", "1", "-i", str(bad))
    assert code == 2 and "bad.tsv:1" in err
    assert run(capsys, "count", "--delta", "1", "-i", str(tmp_path / "missing.tsv"))[0] == 2
    assert run(capsys, "count", "--delta", "-1", "-i", str(bad))[0] == 2


def test_overflow_exit_code(capsys, e1_file, monkeypatch):
    import thyme.cli

    def boom(*a, **k):
        raise CountOverflowError("motif count exceeds 64 bits")

    monkeypatch.setattr(thyme.cli, "count_motifs", boom)
    code, _, err = run(capsys, "count", "--delta", "3", "-i", e1_file)
    assert code == 3 and "64 bits" in err


def test_seed_from_environment(capsys, tmp_path, monkeypatch):
    p = tmp_path / "ties.tsv"
    p.write_text("".join(f"1\t{k},{k + 1}\n" for k in range(6)))
    monkeypatch.setenv("THYME_SEED", "5")
    _, env_out, _ = run(capsys, "randomize", "--mode", "shuffle", "-i", str(p))
    _, flag_out, _ = run(capsys, "randomize", "--mode", "shuffle", "-i", str(p), "--seed", "5")
    assert env_out == flag_out
