"""Compare compiled and pure-Python counting kernels on the same inputs.

    python3 benchmarks/bench_backends.py --edges 2000 --deltas 50,200
"""
import argparse
import csv
import sys
import time

from thyme.counting import ALGORITHMS, compiled_available, count_motifs
from thyme.synthetic import local_repetition_corpus, random_hypergraph


def timed(T, delta, algo, backend, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        res = count_motifs(T, delta, algo, backend)
        best = min(best, time.perf_counter() - t0)
    return best, res.total


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--edges", type=int, default=2000)
    ap.add_argument("--deltas", default="50,200")
    ap.add_argument("--algos", default="dp,thyme,thyme-plus")
    ap.add_argument("--corpus", choices=("local", "uniform"), default="local")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    if not compiled_available():
        sys.exit("compiled kernels are not built; reinstall with Cython available")
    if args.corpus == "local":
        T = local_repetition_corpus(args.seed, n_edges=args.edges, n_sets=max(10, args.edges // 100))
    else:
        T = random_hypergraph(args.seed, n_edges=args.edges, n_nodes=max(20, args.edges // 10))
    T.index

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["algorithm", "delta", "python_s", "compiled_s", "speedup", "total"])
    for delta in (int(d) for d in args.deltas.split(",")):
        for algo in args.algos.split(","):
            assert algo in ALGORITHMS, algo
            py, total_py = timed(T, delta, algo, "python", args.repeats)
            c, total_c = timed(T, delta, algo, "compiled", args.repeats)
            assert total_py == total_c, (algo, delta, total_py, total_c)
            w.writerow([algo, delta, f"{py:.4f}", f"{c:.4f}", f"{py / max(c, 1e-9):.1f}", total_c])


if __name__ == "__main__":
    main()
