"""Synthetic temporal hypergraphs for tests, profiles and benchmarks."""
from __future__ import annotations

import numpy as np

from thyme.hypergraph import TemporalHyperedge, TemporalHypergraph


def random_hypergraph(seed, n_edges=50, n_nodes=20, max_size=5, time_span=None) -> TemporalHypergraph:
    """Independent uniform hyperedges on distinct random timestamps."""
    rng = np.random.default_rng(seed)
    span = time_span if time_span is not None else 4 * n_edges + 1
    span = max(span, n_edges)
    times = np.sort(rng.choice(np.arange(1, span + 1), size=n_edges, replace=False))
    edges = []
    for t in times:
        size = int(rng.integers(1, min(max_size, n_nodes) + 1))
        nodes = rng.choice(n_nodes, size=size, replace=False)
        edges.append(TemporalHyperedge(frozenset(int(v) for v in nodes), int(t)))
    return TemporalHypergraph(n_nodes, tuple(edges))


def _distinct_sets(rng, n_sets, n_nodes, min_size, max_size, community_size):
    seen = set()
    sets = []
    n_comm = max(1, n_nodes // community_size)
    while len(sets) < n_sets:
        size = int(rng.integers(min_size, max_size + 1))
        c = int(rng.integers(n_comm))
        lo = c * community_size
        pool = np.arange(lo, min(lo + community_size, n_nodes))
        if len(pool) < size:
            pool = np.arange(n_nodes)
        s = frozenset(int(v) for v in rng.choice(pool, size=size, replace=False))
        if s not in seen:
            seen.add(s)
            sets.append(s)
    return sets


def local_repetition_corpus(
    seed,
    n_edges=50_000,
    n_sets=500,
    n_nodes=600,
    min_size=2,
    max_size=4,
    community_size=12,
    pool_size=20,
    p_local=0.95,
    p_drift=0.01,
    mean_gap=1.0,
) -> TemporalHypergraph:
    """Hyperedges repeated from a small, slowly drifting pool of recent node-sets.

    At each step a node-set is taken from the active pool with probability
    ``p_local`` (otherwise uniformly from all ``n_sets``), and with
    probability ``p_drift`` one pool slot is replaced.  This gives heavy
    repetition and temporal locality.  Gaps between timestamps are
    ``1 + Poisson(mean_gap - 1)``.
    """
    rng = np.random.default_rng(seed)
    sets = _distinct_sets(rng, n_sets, n_nodes, min_size, max_size, community_size)
    pool = rng.choice(n_sets, size=pool_size, replace=False)
    local = rng.random(n_edges) < p_local
    slot = rng.integers(pool_size, size=n_edges)
    anywhere = rng.integers(n_sets, size=n_edges)
    drift = rng.random(n_edges) < p_drift
    drift_slot = rng.integers(pool_size, size=n_edges)
    drift_set = rng.integers(n_sets, size=n_edges)
    gaps = 1 + rng.poisson(max(mean_gap - 1.0, 0.0), size=n_edges)
    times = np.cumsum(gaps)

    edges = []
    for k in range(n_edges):
        s = pool[slot[k]] if local[k] else anywhere[k]
        edges.append(TemporalHyperedge(sets[s], int(times[k])))
        if drift[k]:
            pool[drift_slot[k]] = drift_set[k]
    return TemporalHypergraph(n_nodes, tuple(edges))
