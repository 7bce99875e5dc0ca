"""Dataset readers and writers.

Two input layouts are supported:

* TSV: one hyperedge per line, ``<timestamp>\\t<node>,<node>,...``; lines
  starting with ``#`` are comments.
* trio: three files ``<prefix>-nverts.txt``, ``<prefix>-simplices.txt`` and
  ``<prefix>-times.txt`` with one integer per line.

Node labels are remapped to ``0 .. n-1`` in order of first appearance.
Hyperedges sharing a timestamp are put in a seeded random order and
re-indexed (see :func:`break_ties`).
"""
from __future__ import annotations

import csv
import json
import os
from pathlib import Path

import numpy as np

from thyme.hypergraph import TemporalHyperedge, TemporalHypergraph
from thyme.motifs import N_MOTIFS


class ParseError(ValueError):
    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)
        self.path = path
        self.line = line


def default_seed() -> int:
    return int(os.environ.get("THYME_SEED", "0"))


def _parse_int(token: str, path, line) -> int:
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", path, line) from None


def tie_break_order(timestamps, seed=None):
    """Order and re-indexed timestamps resolving equal-timestamp groups.

    ``timestamps`` must be sorted ascending.  Returns ``(order, new_times,
    scale, slack)``: ``order`` permutes positions within every group of
    equal timestamps, and ``new_times[p] = t * scale + offset`` where the
    offset is the rank inside the group.  With ``scale = 2g - 1`` and
    ``slack = g - 1`` for the largest group size ``g``, a pair with original
    gap ``d`` satisfies ``d <= delta`` exactly when its new gap is at most
    ``delta * scale + slack``.
    """
    ts = np.asarray(timestamps, dtype=np.int64)
    n = len(ts)
    if n and np.any(np.diff(ts) < 0):
        raise ValueError("timestamps must be sorted before breaking ties")
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    order = np.arange(n)
    if n == 0:
        return order, ts.copy(), 1, 0
    bounds = np.flatnonzero(np.diff(ts)) + 1
    starts = np.concatenate(([0], bounds))
    ends = np.concatenate((bounds, [n]))
    largest = int((ends - starts).max())
    scale = 2 * largest - 1
    new_times = np.empty(n, dtype=np.int64)
    for a, b in zip(starts, ends):
        if b - a > 1:
            order[a:b] = a + rng.permutation(b - a)
        new_times[a:b] = ts[a] * scale + np.arange(b - a)
    return order, new_times, scale, largest - 1


def break_ties(pairs, seed=None, node_count=None) -> TemporalHypergraph:
    """Build a hypergraph from ``(nodes, timestamp)`` pairs sorted by timestamp."""
    pairs = list(pairs)
    order, new_times, scale, slack = tie_break_order([t for _, t in pairs], seed)
    edges = tuple(TemporalHyperedge(frozenset(pairs[o][0]), int(t)) for o, t in zip(order, new_times))
    if node_count is None:
        node_count = 1 + max((max(e.nodes) for e in edges), default=-1)
    return TemporalHypergraph(node_count, edges, time_scale=scale, time_slack=slack)


def _normalize(raw, seed):
    """Relabel nodes by first appearance, sort by time, break ties."""
    labels = {}
    pairs = []
    for t, members in raw:
        ids = []
        for label in members:
            k = labels.get(label)
            if k is None:
                k = labels[label] = len(labels)
            ids.append(k)
        pairs.append((frozenset(ids), t))
    pairs.sort(key=lambda p: p[1])  # stable: file order inside a timestamp
    return break_ties(pairs, seed, node_count=len(labels))


def parse_tsv(path, seed=None) -> TemporalHypergraph:
    raw = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError("expected '<timestamp>\\t<node>,<node>,...'", path, lineno)
            t = _parse_int(parts[0], path, lineno)
            members = [tok.strip() for tok in parts[1].split(",")]
            if not parts[1].strip() or any(not m for m in members):
                raise ParseError("empty node list or empty node label", path, lineno)
            raw.append((t, members))
    return _normalize(raw, seed)


def write_tsv(T: TemporalHypergraph, path_or_file):
    if hasattr(path_or_file, "write"):
        for e in T.edges:
            path_or_file.write(f"{e.timestamp}\t{','.join(str(v) for v in sorted(e.nodes))}\n")
        return
    with open(path_or_file, "w", encoding="utf-8", newline="\n") as fh:
        write_tsv(T, fh)


def _read_ints(path):
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.strip():
                out.append(_parse_int(line, path, lineno))
    return out


def trio_paths(prefix):
    prefix = str(prefix)
    return tuple(Path(f"{prefix}-{part}.txt") for part in ("nverts", "simplices", "times"))


def parse_trio(prefix, seed=None) -> TemporalHypergraph:
    nverts_path, simplices_path, times_path = trio_paths(prefix)
    for p in (nverts_path, simplices_path, times_path):
        if not p.exists():
            raise ParseError("file not found", p)
    nverts = _read_ints(nverts_path)
    simplices = _read_ints(simplices_path)
    times = _read_ints(times_path)
    if len(times) != len(nverts):
        raise ParseError(
            f"{len(times)} timestamps for {len(nverts)} hyperedges listed in {nverts_path}", times_path
        )
    if sum(nverts) != len(simplices):
        raise ParseError(
            f"{len(simplices)} node entries but {nverts_path} declares {sum(nverts)}", simplices_path
        )
    raw = []
    pos = 0
    for k, (size, t) in enumerate(zip(nverts, times), 1):
        if size <= 0:
            raise ParseError("hyperedge with no nodes", nverts_path, k)
        raw.append((t, simplices[pos:pos + size]))
        pos += size
    return _normalize(raw, seed)


def write_trio(T: TemporalHypergraph, prefix):
    nverts_path, simplices_path, times_path = trio_paths(prefix)
    with open(nverts_path, "w") as fn, open(simplices_path, "w") as fs, open(times_path, "w") as ft:
        for e in T.edges:
            nodes = sorted(e.nodes)
            fn.write(f"{len(nodes)}\n")
            fs.writelines(f"{v}\n" for v in nodes)
            ft.write(f"{e.timestamp}\n")


def read_hypergraph(path, fmt="tsv", seed=None) -> TemporalHypergraph:
    if fmt == "tsv":
        return parse_tsv(path, seed)
    if fmt == "trio":
        return parse_trio(path, seed)
    raise ValueError(f"unknown format {fmt!r}")


def write_counts_csv(counts, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["motif_id", "count"])
    for m in range(N_MOTIFS):
        w.writerow([m + 1, int(counts[m])])


def counts_json(result, dataset, seed=None) -> str:
    doc = {
        "dataset": str(dataset),
        "delta": result.delta,
        "seed": seed,
        "algorithm": result.algorithm,
        "backend": result.backend,
        "wall_time_ms": round(result.seconds * 1000.0, 3),
        "peak_projected_nodes": result.stats.get("peak_nodes"),
        "peak_projected_edges": result.stats.get("peak_edges"),
        "counts": {str(m + 1): int(c) for m, c in enumerate(result.counts)},
    }
    return json.dumps(doc, indent=2)


def write_matrix_csv(matrix, header, fh, row_labels=None):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(([""] if row_labels is not None else []) + list(header))
    for r, row in enumerate(matrix):
        values = [repr(float(x)) if isinstance(x, float) else int(x) for x in row.tolist()]
        w.writerow(([row_labels[r]] if row_labels is not None else []) + values)
