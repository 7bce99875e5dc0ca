"""Command-line interface: ``thyme <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 count overflow.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import tracemalloc
from contextlib import contextmanager
from pathlib import Path

from thyme import analysis, features, randomization
from thyme.counting import ALGORITHMS, CountOverflowError, compiled_available, count_motifs
from thyme.io import (
    ParseError,
    counts_json,
    default_seed,
    read_hypergraph,
    write_counts_csv,
    write_matrix_csv,
    write_tsv,
)
from thyme.motifs import write_motif_table
from thyme.randomization import GenerationError
from thyme.synthetic import local_repetition_corpus

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_OVERFLOW = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _csv_list(text, cast=str):
    return [cast(x) for x in text.split(",") if x.strip()]


def _load(args):
    return read_hypergraph(args.input, args.format, args.seed)


def _delta(T, args):
    # windows are given in the dataset's original time units
    return T.scale_delta(args.delta)


def cmd_count(args):
    T = _load(args)
    result = count_motifs(T, _delta(T, args), args.algo, args.backend)
    result.delta = args.delta
    with _output(args.out) as fh:
        if args.json or (args.out and str(args.out).endswith(".json")):
            fh.write(counts_json(result, args.input, args.seed) + "\n")
        else:
            write_counts_csv(result.counts, fh)


def cmd_motif_table(args):
    with _output(args.out) as fh:
        write_motif_table(fh)


def cmd_randomize(args):
    T = _load(args)
    if args.mode == "shuffle":
        R = randomization.shuffle_timestamps(T, args.seed)
    else:
        R = randomization.randomize_temporal(T, args.seed)
    with _output(args.out) as fh:
        write_tsv(R, fh)


def cmd_profile(args):
    T = _load(args)
    doc = analysis.profile(T, _delta(T, args), args.replicas, args.epsilon, args.seed,
                           args.algo, args.backend)
    doc["delta"] = args.delta
    doc = {"dataset": str(args.input), **doc}
    with _output(args.out) as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def cmd_similarity(args):
    names, profiles = [], []
    for path in args.profiles:
        with open(path) as fh:
            doc = json.load(fh)
        cp = doc["profile"] if isinstance(doc, dict) else doc
        if len(cp) != 96:
            raise UsageError(f"{path}: expected 96 profile entries, found {len(cp)}")
        names.append(doc.get("dataset", Path(path).stem) if isinstance(doc, dict) else Path(path).stem)
        profiles.append(cp)
    S = analysis.similarity_matrix(profiles)
    with _output(args.out) as fh:
        write_matrix_csv(S, names, fh, row_labels=names)


def cmd_features(args):
    T = _load(args)
    delta = _delta(T, args)
    if args.set == "shm26":
        F = features.static_incident_counts(T, args.backend)
        header = [f"static_{c}" for c in range(1, 27)]
    else:
        F = features.incident_counts(T, delta, args.backend)
        cols = list(range(96))
        if args.set == "thm26":
            cols = features.select_top_variance(F, 26)
            F = F[:, cols]
        header = [str(c + 1) for c in cols]
    with _output(args.out) as fh:
        write_matrix_csv(F, header, fh)


def cmd_predict(args):
    T = _load(args)
    reports = features.run_prediction(T, args.delta, args.seed, _csv_list(args.sets),
                                      args.epochs, args.lr, args.backend)
    with _output(args.out) as fh:
        json.dump(reports, fh, indent=2)
        fh.write("\n")


def cmd_stats(args):
    T = _load(args)
    with _output(args.out) as fh:
        if args.what == "repetition":
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["repetitions", "node_sets"])
            for rep, n in analysis.repetition_distribution(T).items():
                w.writerow([rep, n])
        elif args.what == "locality":
            value = analysis.locality_intervals(T, args.n)
            if value is not None:
                value /= T.time_scale
            json.dump({"N": args.n, "mean_interval": value}, fh)
            fh.write("\n")
        else:
            value = analysis.valid_static_fraction(T, _delta(T, args))
            json.dump({"delta": args.delta, "valid_static_fraction": value}, fh)
            fh.write("\n")


def _bench_cell(T, algo, delta, backend):
    tracemalloc.start()
    try:
        result = count_motifs(T, delta, algo, backend)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    return result, peak


def cmd_bench(args):
    if args.input:
        T = _load(args)
        name = str(args.input)
    else:
        T = local_repetition_corpus(args.seed, n_edges=args.synthetic)
        name = f"synthetic-{args.synthetic}"
    backends = _csv_list(args.backends)
    if "compiled" in backends and not compiled_available():
        raise UsageError("compiled kernels are not built")
    T.index
    with _output(args.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["dataset", "algorithm", "backend", "delta", "seconds", "peak_memory_bytes",
                    "peak_projected_nodes", "peak_projected_edges", "total_instances"])
        for delta in _csv_list(args.deltas, int):
            for algo in _csv_list(args.algos):
                if algo not in ALGORITHMS:
                    raise UsageError(f"unknown algorithm {algo!r}")
                for backend in backends:
                    result, peak = _bench_cell(T, algo, T.scale_delta(delta), backend)
                    w.writerow([name, algo, result.backend, delta, f"{result.seconds:.6f}", peak,
                                result.stats.get("peak_nodes", ""), result.stats.get("peak_edges", ""),
                                result.total])
                    fh.flush()


def build_parser():
    p = _Parser(prog="thyme", description="Exact counting of temporal hypergraph motifs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def data_args(sp, required=True):
        sp.add_argument("--input", "-i", required=required, help="TSV file or trio prefix")
        sp.add_argument("--format", choices=("tsv", "trio"), default="tsv")
        sp.add_argument("--seed", type=int, default=default_seed(),
                        help="seed for tie-breaking and randomization (default: $THYME_SEED or 0)")
        sp.add_argument("--out", "-o", default=None)

    def backend_arg(sp):
        sp.add_argument("--backend", choices=("compiled", "python"), default=None)

    sp = sub.add_parser("count", help="count motif instances")
    data_args(sp)
    sp.add_argument("--algo", choices=ALGORITHMS, default="thyme-plus")
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--json", action="store_true", help="JSON output with run metadata")
    backend_arg(sp)
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("motif-table", help="write the 96-motif table as CSV")
    sp.add_argument("--out", "-o", default=None)
    sp.set_defaults(func=cmd_motif_table)

    sp = sub.add_parser("randomize", help="write a randomized copy of a hypergraph")
    data_args(sp)
    sp.add_argument("--mode", choices=("shuffle", "hypercl"), default="hypercl")
    sp.set_defaults(func=cmd_randomize)

    sp = sub.add_parser("profile", help="characteristic profile against randomized copies")
    data_args(sp)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--replicas", type=int, default=analysis.DEFAULT_REPLICAS)
    sp.add_argument("--epsilon", type=float, default=analysis.DEFAULT_EPSILON)
    sp.add_argument("--algo", choices=ALGORITHMS, default="thyme-plus")
    backend_arg(sp)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("similarity", help="Pearson matrix between profile JSON files")
    sp.add_argument("profiles", nargs="+")
    sp.add_argument("--out", "-o", default=None)
    sp.set_defaults(func=cmd_similarity)

    sp = sub.add_parser("features", help="per-hyperedge motif features as CSV")
    data_args(sp)
    sp.add_argument("--set", choices=features.FEATURE_SETS, default="thm96")
    sp.add_argument("--delta", type=int, default=0)
    backend_arg(sp)
    sp.set_defaults(func=cmd_features)

    sp = sub.add_parser("predict", help="hyperedge prediction with motif features")
    data_args(sp)
    sp.add_argument("--delta", type=int, required=True)
    sp.add_argument("--sets", default=",".join(features.FEATURE_SETS))
    sp.add_argument("--epochs", type=int, default=500)
    sp.add_argument("--lr", type=float, default=0.1)
    backend_arg(sp)
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("stats", help="repetition, locality and valid-static-fraction statistics")
    data_args(sp)
    sp.add_argument("--what", choices=("repetition", "locality", "valid-fraction"), required=True)
    sp.add_argument("--n", type=int, default=2, help="run length for --what locality")
    sp.add_argument("--delta", type=int, default=0, help="window for --what valid-fraction")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("bench", help="runtime and peak-memory table")
    data_args(sp, required=False)
    sp.add_argument("--synthetic", type=int, default=50_000,
                    help="size of the synthetic corpus used when --input is absent")
    sp.add_argument("--algos", default="dp,thyme,thyme-plus")
    sp.add_argument("--deltas", default="100,1000")
    sp.add_argument("--backends", default="compiled" if compiled_available() else "python")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        args.func(args)
    except UsageError as exc:
        print(f"thyme: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CountOverflowError as exc:
        print(f"thyme: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (ParseError, GenerationError, OSError, ValueError) as exc:
        print(f"thyme: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
