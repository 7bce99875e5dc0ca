"""Temporal and static hypergraph containers."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


@dataclass(frozen=True)
class TemporalHyperedge:
    nodes: frozenset
    timestamp: int

    def __post_init__(self):
        nodes = frozenset(self.nodes)
        if not nodes:
            raise ValueError("a hyperedge needs at least one node")
        if isinstance(self.timestamp, bool) or not isinstance(self.timestamp, (int, np.integer)):
            raise TypeError(f"timestamp must be an integer, got {self.timestamp!r}")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "timestamp", int(self.timestamp))


@dataclass(frozen=True)
class TemporalHypergraph:
    """Time-ordered hyperedges over nodes ``0 .. node_count - 1``.

    ``time_scale`` and ``time_slack`` record how timestamps were re-indexed to
    break ties (see :func:`thyme.io.break_ties`); use :meth:`scale_delta` to
    express a window given in original units.
    """

    node_count: int
    edges: tuple
    time_scale: int = field(default=1, compare=False)
    time_slack: int = field(default=0, compare=False)

    def __post_init__(self):
        edges = tuple(
            e if isinstance(e, TemporalHyperedge) else TemporalHyperedge(*e) for e in self.edges
        )
        object.__setattr__(self, "edges", edges)
        prev = None
        for e in edges:
            if prev is not None and e.timestamp <= prev:
                raise ValueError("timestamps must be strictly increasing")
            prev = e.timestamp
            for v in e.nodes:
                if not 0 <= v < self.node_count:
                    raise ValueError(f"node {v} outside 0..{self.node_count - 1}")

    @classmethod
    def from_pairs(cls, pairs: Iterable, node_count: int | None = None):
        """Build from ``(nodes, timestamp)`` pairs already sorted by time."""
        edges = tuple(TemporalHyperedge(frozenset(n), t) for n, t in pairs)
        if node_count is None:
            node_count = 1 + max((max(e.nodes) for e in edges), default=-1)
        return cls(node_count, edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    @property
    def timestamps(self) -> np.ndarray:
        return np.fromiter((e.timestamp for e in self.edges), dtype=np.int64, count=len(self.edges))

    def scale_delta(self, delta: int) -> int:
        return delta * self.time_scale + self.time_slack

    @cached_property
    def index(self) -> "EdgeIndex":
        return EdgeIndex(self)


def _csr(groups: Sequence[Sequence[int]]):
    ptr = np.zeros(len(groups) + 1, dtype=np.int64)
    ptr[1:] = np.cumsum([len(g) for g in groups])
    flat = np.fromiter((x for g in groups for x in g), dtype=np.int32, count=int(ptr[-1]))
    return ptr, flat


class EdgeIndex:
    """Flat integer arrays describing a temporal hypergraph.

    Everything the compiled kernels need: node lists per temporal and
    static hyperedge, the static id of each temporal hyperedge, occurrence
    lists per static hyperedge and incidence lists per node.  All lists are
    sorted ascending.
    """

    def __init__(self, T: TemporalHypergraph):
        self.n_nodes = T.node_count
        self.n_edges = len(T)
        self.times = T.timestamps

        static_id = {}
        static_sets = []
        static_of = np.empty(self.n_edges, dtype=np.int32)
        for i, e in enumerate(T.edges):
            s = static_id.get(e.nodes)
            if s is None:
                s = static_id[e.nodes] = len(static_sets)
                static_sets.append(e.nodes)
            static_of[i] = s
        self.static_sets = static_sets
        self.static_id = static_id
        self.static_of = static_of
        self.n_static = len(static_sets)

        self.edge_ptr, self.edge_nodes = _csr([sorted(e.nodes) for e in T.edges])
        self.static_ptr, self.static_nodes = _csr([sorted(s) for s in static_sets])

        occ = [[] for _ in range(self.n_static)]
        node_t = [[] for _ in range(self.n_nodes)]
        for i, e in enumerate(T.edges):
            occ[static_of[i]].append(i)
            for v in e.nodes:
                node_t[v].append(i)
        node_s = [[] for _ in range(self.n_nodes)]
        for s, nodes in enumerate(static_sets):
            for v in nodes:
                node_s[v].append(s)
        self.occ_ptr, self.occ = _csr(occ)
        self.node_tptr, self.node_tinc = _csr(node_t)
        self.node_sptr, self.node_sinc = _csr(node_s)

    def static_adjacency(self):
        """CSR adjacency of the static overlap graph (sorted neighbour ids)."""
        nbrs = [set() for _ in range(self.n_static)]
        for v in range(self.n_nodes):
            group = self.node_sinc[self.node_sptr[v]:self.node_sptr[v + 1]].tolist()
            for s in group:
                nbrs[s].update(group)
        for s in range(self.n_static):
            nbrs[s].discard(s)
        return _csr([sorted(n) for n in nbrs])


@dataclass(frozen=True)
class StaticHypergraph:
    """Distinct node-sets of a temporal hypergraph.

    ``adjacency[a]`` holds the indices of edges sharing a node with edge ``a``.
    """

    node_count: int
    edges: tuple
    multiplicity: dict
    adjacency: tuple

    @property
    def overlap_pairs(self) -> set:
        return {(a, b) for a, nb in enumerate(self.adjacency) for b in nb if a < b}

    def __len__(self):
        return len(self.edges)


def induce_static(T: TemporalHypergraph) -> StaticHypergraph:
    idx = T.index
    mult = {s: int(idx.occ_ptr[k + 1] - idx.occ_ptr[k]) for k, s in enumerate(idx.static_sets)}
    ptr, flat = idx.static_adjacency()
    adjacency = tuple(frozenset(flat[ptr[s]:ptr[s + 1]].tolist()) for s in range(idx.n_static))
    return StaticHypergraph(T.node_count, tuple(idx.static_sets), mult, adjacency)
