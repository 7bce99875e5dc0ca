"""Null models: HyperCL structure randomization and timestamp shuffling.

All generators take an integer seed and use numpy's PCG64 generator, so the
same seed and input give the same output.
"""
from __future__ import annotations

from collections import Counter

import numpy as np

from thyme.hypergraph import TemporalHyperedge, TemporalHypergraph


class GenerationError(ValueError):
    pass


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def hypercl(degrees, sizes, seed) -> list:
    """Random hyperedges with the given sizes; members drawn in proportion to degree.

    Members of one hyperedge are distinct.  Small hyperedges are drawn by
    rejecting repeats; hyperedges covering more than half of the usable
    nodes are drawn with weighted sampling without replacement.
    """
    rng = _rng(seed)
    degrees = np.asarray(degrees, dtype=np.float64)
    sizes = [int(s) for s in sizes]
    if np.any(degrees < 0):
        raise GenerationError("degrees must be non-negative")
    if int(degrees.sum()) != sum(sizes):
        raise GenerationError(f"degree sum {int(degrees.sum())} != size sum {sum(sizes)}")
    support = int(np.count_nonzero(degrees))
    if sizes and (min(sizes) < 1 or max(sizes) > support):
        raise GenerationError(f"hyperedge sizes must lie in 1..{support} (nodes with positive degree)")
    if not sizes:
        return []
    cdf = np.cumsum(degrees)
    total = cdf[-1]
    p = degrees / total

    edges = []
    for s in sizes:
        if 2 * s > support:
            members = rng.choice(len(degrees), size=s, replace=False, p=p)
            edges.append(frozenset(int(v) for v in members))
            continue
        members = set()
        while len(members) < s:
            draws = np.searchsorted(cdf, rng.random(s - len(members)) * total, side="right")
            members.update(int(v) for v in draws)
        edges.append(frozenset(members))
    return edges


def _assemble(node_sets, timestamps, node_count):
    order = np.argsort(timestamps, kind="stable")
    return TemporalHypergraph(
        node_count,
        tuple(TemporalHyperedge(node_sets[k], int(timestamps[k])) for k in order),
    )


def shuffle_timestamps(T: TemporalHypergraph, seed) -> TemporalHypergraph:
    """Randomly reassign the timestamps among the hyperedges, keeping all node-sets."""
    rng = _rng(seed)
    times = T.timestamps
    shuffled = times[rng.permutation(len(times))]
    out = _assemble([e.nodes for e in T.edges], shuffled, T.node_count)
    return TemporalHypergraph(out.node_count, out.edges, T.time_scale, T.time_slack)


def temporal_degrees(T: TemporalHypergraph) -> np.ndarray:
    deg = np.zeros(T.node_count, dtype=np.int64)
    for e in T.edges:
        for v in e.nodes:
            deg[v] += 1
    return deg


def randomize_temporal(T: TemporalHypergraph, seed) -> TemporalHypergraph:
    """HyperCL node-sets matched to T's degrees and sizes, with T's timestamps shuffled onto them."""
    rng = _rng(seed)
    sizes = [len(e.nodes) for e in T.edges]
    node_sets = hypercl(temporal_degrees(T), sizes, rng)
    times = T.timestamps[rng.permutation(len(T))]
    out = _assemble(node_sets, times, T.node_count)
    return TemporalHypergraph(out.node_count, out.edges, T.time_scale, T.time_slack)


def size_multiset(T) -> Counter:
    return Counter(len(e.nodes) for e in T.edges)
