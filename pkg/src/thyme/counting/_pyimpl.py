"""Pure-Python counting kernels.

Same contracts as the compiled ``_kernels`` module; used when the extension
is unavailable or when ``THYME_BACKEND=python``.  Each kernel returns a list
of 97 counts (index 0 unused) and a dict of window statistics.
"""
from __future__ import annotations

from thyme.counting.projected import (
    ProjectedGraphP,
    ProjectedGraphQ,
    count_ordered_timestamp_pairs,
    enumerate_triples_containing,
)
from thyme.counting.sequence import SequenceCounter
from thyme.motifs import MOTIF_TABLE, N_MOTIFS, N_STATIC, region_pattern


class _Classifier:
    """Motif lookup memoised on the static ids of the three hyperedges."""

    def __init__(self, static_sets):
        self.sets = static_sets
        self.cache = {}

    def __call__(self, a, b, c):
        key = (a, b, c)
        m = self.cache.get(key)
        if m is None:
            m = MOTIF_TABLE.pattern_to_id[region_pattern(self.sets[a], self.sets[b], self.sets[c])]
            self.cache[key] = m
        return m


def thyme(T, delta, observer=None, incident=None):
    idx = T.index
    times = idx.times.tolist()
    sid = idx.static_of.tolist()
    h = _Classifier(idx.static_sets)
    M = [0] * (N_MOTIFS + 1)
    P = ProjectedGraphP([e.nodes for e in T.edges])
    peak_nodes = peak_edges = 0
    ws = 0
    for i in range(len(times)):
        P.insert(i)
        while times[ws] + delta < times[i]:
            P.remove(ws)
            ws += 1
        peak_nodes = max(peak_nodes, len(P.adjacency))
        peak_edges = max(peak_edges, P.n_edges)
        if observer is not None:
            observer(i, P)
        for u, v in enumerate_triples_containing(P.adjacency, i):
            if u > v:
                u, v = v, u
            m = h(sid[u], sid[v], sid[i])
            M[m] += 1
            if incident is not None:
                incident[u][m] += 1
                incident[v][m] += 1
                incident[i][m] += 1
    return M, {"peak_nodes": peak_nodes, "peak_edges": peak_edges}


def _comb2(n: int) -> int:
    return n * (n - 1) // 2


def thyme_plus(T, delta, observer=None):
    idx = T.index
    times = idx.times.tolist()
    sid = idx.static_of.tolist()
    sets = idx.static_sets
    h = _Classifier(sets)
    M = [0] * (N_MOTIFS + 1)
    Q = ProjectedGraphQ()
    peak_nodes = peak_edges = 0
    ws = 0
    for i in range(len(times)):
        s = sets[sid[i]]
        Q.insert(s, times[i])
        while times[ws] + delta < times[i]:
            Q.remove(sets[sid[ws]], times[ws])
            ws += 1
        peak_nodes = max(peak_nodes, len(Q.adjacency))
        peak_edges = max(peak_edges, Q.n_edges)
        if observer is not None:
            observer(i, Q)

        si = sid[i]
        ids = idx.static_id
        for ej, ek in enumerate_triples_containing(Q.adjacency, s):
            lt, gt = count_ordered_timestamp_pairs(list(Q.times[ej]), list(Q.times[ek]))
            j, k = ids[ej], ids[ek]
            if lt:
                M[h(j, k, si)] += lt
            if gt:
                M[h(k, j, si)] += gt

        earlier = list(Q.times[s])[:-1]  # drop t_i, always the newest
        for ej in Q.adjacency[s]:
            tj = list(Q.times[ej])
            j = ids[ej]
            lt, gt = count_ordered_timestamp_pairs(earlier, tj)
            if lt:
                M[h(si, j, si)] += lt
            if gt:
                M[h(j, si, si)] += gt
            if len(tj) > 1:
                M[h(j, j, si)] += _comb2(len(tj))
        if len(earlier) > 1:
            M[h(si, si, si)] += _comb2(len(earlier))
    return M, {"peak_nodes": peak_nodes, "peak_edges": peak_edges}


def static_triples(adjacency):
    """Every connected triple of a static overlap graph exactly once, as ``(x, u, v)``.

    A triple is produced while visiting its largest member ``x``.
    """
    for x in range(len(adjacency)):
        for u, v in enumerate_triples_containing(adjacency, x, keep=lambda y, x=x: y < x):
            yield x, u, v


def _occurrence_lists(idx):
    occ, ptr = idx.occ.tolist(), idx.occ_ptr.tolist()
    return [occ[ptr[s]:ptr[s + 1]] for s in range(idx.n_static)]


def _merged_occurrences(occurrences, group):
    seq = []
    for label, s in enumerate(group):
        seq.extend((i, label) for i in occurrences[s])
    seq.sort()
    return seq


def _window_sequences(occurrences, group, delta, times):
    C = SequenceCounter()
    seq = _merged_occurrences(occurrences, group)
    ws = 0
    for i, label in seq:
        while times[seq[ws][0]] + delta < times[i]:
            C.decrement(seq[ws][1])
            ws += 1
        C.increment(label)
    return C


def dp(T, delta):
    idx = T.index
    times = idx.times.tolist()
    h = _Classifier(idx.static_sets)
    M = [0] * (N_MOTIFS + 1)
    ptr, flat = idx.static_adjacency()
    adjacency = [set(flat[ptr[s]:ptr[s + 1]].tolist()) for s in range(idx.n_static)]
    occurrences = _occurrence_lists(idx)

    def credit(group):
        C = _window_sequences(occurrences, group, delta, times)
        size = len(group)
        for key, n in C.triples.items():
            # only sequences that use every member of the group
            if n and len(set(key)) == size:
                M[h(group[key[0]], group[key[1]], group[key[2]])] += n

    n_triples = 0
    for x, u, v in static_triples(adjacency):
        credit((x, u, v))
        n_triples += 1
    for x in range(idx.n_static):
        for u in adjacency[x]:
            if u < x:
                credit((x, u))
        credit((x,))
    return M, {"static_triples": n_triples}


def static_classes(T):
    idx = T.index
    sets = idx.static_sets
    ptr, flat = idx.static_adjacency()
    adjacency = [set(flat[ptr[s]:ptr[s + 1]].tolist()) for s in range(idx.n_static)]
    out = [[0] * N_STATIC for _ in range(idx.n_static)]
    orbits = MOTIF_TABLE.static_orbits
    for x, u, v in static_triples(adjacency):
        cls = orbits[region_pattern(sets[x], sets[u], sets[v])] - 1
        out[x][cls] += 1
        out[u][cls] += 1
        out[v][cls] += 1
    return out
