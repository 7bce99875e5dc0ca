"""Statistics built on motif counts: significance, characteristic profiles,
repetition and temporal-locality measurements, and the share of static
triples that a time window can actually induce."""
from __future__ import annotations

from collections import Counter, defaultdict

import numpy as np

from thyme.counting import count_motifs, enumerate_triples_containing, ProjectedGraphQ
from thyme.counting._pyimpl import static_triples
from thyme.hypergraph import induce_static
from thyme.motifs import MOTIF_TABLE, PAIR_O1, PAIR_O2, PAIR_O3
from thyme.randomization import randomize_temporal

DEFAULT_EPSILON = 4.0
DEFAULT_REPLICAS = 5


def significance(real, rand_mean, epsilon=DEFAULT_EPSILON) -> np.ndarray:
    real = np.asarray(real, dtype=np.float64)
    rand_mean = np.asarray(rand_mean, dtype=np.float64)
    if np.any(rand_mean < 0):
        raise ValueError("random-model counts must be non-negative")
    return (real - rand_mean) / (real + rand_mean + epsilon)


def characteristic_profile(sig) -> np.ndarray:
    sig = np.asarray(sig, dtype=np.float64)
    norm = np.linalg.norm(sig)
    if norm == 0:
        return np.zeros_like(sig)
    return sig / norm


def cp_similarity(a, b) -> float:
    """Pearson correlation of two profiles; NaN when either is constant."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    da = a - a.mean()
    db = b - b.mean()
    denom = np.sqrt((da @ da) * (db @ db))
    if denom == 0:
        return float("nan")
    return float(np.clip((da @ db) / denom, -1.0, 1.0))


def similarity_matrix(profiles) -> np.ndarray:
    profiles = list(profiles)
    n = len(profiles)
    out = np.empty((n, n))
    for i in range(n):
        for j in range(i, n):
            out[i, j] = out[j, i] = cp_similarity(profiles[i], profiles[j])
    return out


def null_model_counts(T, delta, replicas=DEFAULT_REPLICAS, seed=0, algorithm="thyme-plus", backend=None):
    """Mean motif counts over ``replicas`` randomized copies of T, and the seeds used."""
    seeds = [int(s) for s in np.random.SeedSequence(seed).generate_state(replicas)]
    total = np.zeros(96, dtype=np.float64)
    for s in seeds:
        total += count_motifs(randomize_temporal(T, s), delta, algorithm, backend).counts
    return total / max(replicas, 1), seeds


def profile(T, delta, replicas=DEFAULT_REPLICAS, epsilon=DEFAULT_EPSILON, seed=0,
            algorithm="thyme-plus", backend=None) -> dict:
    real = count_motifs(T, delta, algorithm, backend).counts
    rand_mean, seeds = null_model_counts(T, delta, replicas, seed, algorithm, backend)
    cp = characteristic_profile(significance(real, rand_mean, epsilon))
    return {
        "delta": delta,
        "replicas": replicas,
        "epsilon": epsilon,
        "seeds": seeds,
        "real_counts": [int(c) for c in real],
        "random_mean_counts": rand_mean.tolist(),
        "profile": cp.tolist(),
    }


def repetition_distribution(T) -> dict:
    """Histogram: number of repetitions -> number of distinct node-sets."""
    per_set = Counter(e.nodes for e in T.edges)
    return dict(sorted(Counter(per_set.values()).items()))


def locality_intervals(T, N: int):
    """Mean time spanned by N consecutive occurrences of the same node-set.

    Runs slide over each node-set's occurrence list.  Returns ``None`` when
    no node-set occurs N times.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    occurrences = defaultdict(list)
    for e in T.edges:
        occurrences[e.nodes].append(e.timestamp)
    total = 0
    runs = 0
    for ts in occurrences.values():
        for a in range(len(ts) - N + 1):
            total += ts[a + N - 1] - ts[a]
            runs += 1
    if runs == 0:
        return None
    return total / runs


def valid_static_fraction(T, delta):
    """Share of connected static triples induced by at least one valid instance.

    ``None`` when the static hypergraph has no connected triple.
    """
    if delta < 0:
        raise ValueError("delta must be non-negative")
    G = induce_static(T)
    n_static = sum(1 for _ in static_triples(G.adjacency))
    if n_static == 0:
        return None
    ids = T.index.static_id
    induced = set()
    Q = ProjectedGraphQ()
    times = T.timestamps.tolist()
    ws = 0
    for i, e in enumerate(T.edges):
        Q.insert(e.nodes, times[i])
        while times[ws] + delta < times[i]:
            Q.remove(T.edges[ws].nodes, times[ws])
            ws += 1
        # any window triple of distinct sets containing e_i's set is realised with e_i last
        for u, v in enumerate_triples_containing(Q.adjacency, e.nodes):
            induced.add(frozenset((ids[e.nodes], ids[u], ids[v])))
    return len(induced) / n_static


def pair_order_counts(counts) -> list:
    """Counts of the nine pair-inducing motifs grouped by overlap structure.

    One dict per structure with the O1/O2/O3 counts and their shares.
    """
    counts = np.asarray(counts)
    groups = {}
    for e in MOTIF_TABLE.entries:
        if e.duplication_class in (PAIR_O1, PAIR_O2, PAIR_O3):
            groups.setdefault(e.pair_structure, {})[e.duplication_class] = e.motif_id
    out = []
    for structure, ids in groups.items():
        row = {"structure": structure}
        total = sum(int(counts[ids[o] - 1]) for o in (PAIR_O1, PAIR_O2, PAIR_O3))
        for o in (PAIR_O1, PAIR_O2, PAIR_O3):
            c = int(counts[ids[o] - 1])
            row[o] = {"motif_id": ids[o], "count": c, "ratio": c / total if total else None}
        out.append(row)
    return out
