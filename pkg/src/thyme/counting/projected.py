"""Sliding-window projected graphs and the enumeration helpers built on them."""
from __future__ import annotations

from collections import defaultdict, deque
from typing import Callable, Iterator, Mapping, Sequence


class ProjectedGraphP:
    """One graph node per temporal hyperedge in the window; edges join overlaps."""

    def __init__(self, node_sets: Sequence[frozenset]):
        self._sets = node_sets
        self._holders = defaultdict(set)  # hypergraph node -> window edges containing it
        self.adjacency: dict = {}
        self.n_edges = 0

    @property
    def nodes(self):
        return self.adjacency.keys()

    def insert(self, i: int):
        nbrs = set()
        for v in self._sets[i]:
            nbrs |= self._holders[v]
            self._holders[v].add(i)
        self.adjacency[i] = nbrs
        for u in nbrs:
            self.adjacency[u].add(i)
        self.n_edges += len(nbrs)

    def remove(self, i: int):
        nbrs = self.adjacency.pop(i)
        for u in nbrs:
            self.adjacency[u].discard(i)
        for v in self._sets[i]:
            self._holders[v].discard(i)
        self.n_edges -= len(nbrs)


class ProjectedGraphQ:
    """One graph node per distinct node-set in the window.

    ``times[s]`` lists, oldest first, the timestamps of the window's temporal
    hyperedges whose node-set is ``s``.
    """

    def __init__(self):
        self._holders = defaultdict(set)
        self.adjacency: dict = {}
        self.times: dict = {}
        self.n_edges = 0

    @property
    def nodes(self):
        return self.adjacency.keys()

    def insert(self, node_set: frozenset, t: int):
        if node_set not in self.adjacency:
            nbrs = set()
            for v in node_set:
                nbrs |= self._holders[v]
                self._holders[v].add(node_set)
            self.adjacency[node_set] = nbrs
            for u in nbrs:
                self.adjacency[u].add(node_set)
            self.n_edges += len(nbrs)
            self.times[node_set] = deque()
        self.times[node_set].append(t)

    def remove(self, node_set: frozenset, t: int):
        stamps = self.times[node_set]
        if stamps[0] != t:
            raise ValueError("window expiry must remove the oldest timestamp")
        stamps.popleft()
        if stamps:
            return
        del self.times[node_set]
        nbrs = self.adjacency.pop(node_set)
        for u in nbrs:
            self.adjacency[u].discard(node_set)
        for v in node_set:
            self._holders[v].discard(node_set)
        self.n_edges -= len(nbrs)


def enumerate_triples_containing(
    adjacency: Mapping, x, keep: Callable | None = None
) -> Iterator[tuple]:
    """Yield ``(u, v)`` once for every connected triple ``{x, u, v}``.

    Either both ``u`` and ``v`` neighbour ``x``, or ``v`` is reached through
    ``u`` and is not itself a neighbour of ``x``.  ``keep`` optionally
    restricts which graph nodes may take part.
    """
    near = adjacency[x]
    if keep is not None:
        near = {u for u in near if keep(u)}
    ordered = list(near)
    for a, u in enumerate(ordered):
        for v in ordered[a + 1:]:
            yield u, v
    for u in ordered:
        for v in adjacency[u]:
            if v != x and v not in near and (keep is None or keep(v)):
                yield u, v


def count_ordered_timestamp_pairs(a: Sequence[int], b: Sequence[int]) -> tuple:
    """Return ``(lt, gt)``: pairs ``(t, t')`` from ``a x b`` with ``t < t'`` / ``t > t'``.

    Both inputs must be sorted ascending and share no timestamp.
    """
    lt = 0
    j = 0
    nb = len(b)
    # for each t in a, count the elements of b that come after it
    for t in a:
        while j < nb and b[j] < t:
            j += 1
        if j < nb and b[j] == t:
            raise ValueError(f"timestamp {t} appears in both inputs")
        lt += nb - j
    return lt, len(a) * nb - lt
