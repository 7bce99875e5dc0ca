"""Windowed counts of ordered label sequences (length up to three)."""
from __future__ import annotations

from collections import defaultdict

MAX_LEN = 3


class SequenceCounter:
    """Counts of subsequences of the labels currently inside a time window.

    ``self[(a,)]`` is the number of in-window occurrences of ``a``,
    ``self[(a, b)]`` the number of in-window pairs with ``a`` before ``b``,
    and ``self[(a, b, c)]`` accumulates every ordered triple seen while all
    three members were in the window.  Labels must be pushed in time order
    and popped oldest first.
    """

    def __init__(self):
        self.singles = defaultdict(int)
        self.pairs = defaultdict(int)
        self.triples = defaultdict(int)

    def __getitem__(self, key):
        key = tuple(key)
        if len(key) == 1:
            return self.singles.get(key[0], 0)
        if len(key) == 2:
            return self.pairs.get(key, 0)
        if len(key) == 3:
            return self.triples.get(key, 0)
        raise KeyError(key)

    def increment(self, label):
        # extend longer prefixes first so the new label is not paired with itself
        triples, pairs = self.triples, self.pairs
        for (a, b), n in pairs.items():
            if n:
                triples[(a, b, label)] += n
        for a, n in list(self.singles.items()):
            if n:
                pairs[(a, label)] += n
        self.singles[label] += 1

    def decrement(self, label):
        singles = self.singles
        singles[label] -= 1
        assert singles[label] >= 0, f"label {label!r} popped more often than pushed"
        # the popped occurrence precedes everything still in the window
        for b, n in singles.items():
            if n:
                key = (label, b)
                self.pairs[key] -= n
                assert self.pairs[key] >= 0, f"negative count for {key!r}"

    def nonzero(self) -> dict:
        out = {(a,): n for a, n in self.singles.items() if n}
        out.update((k, n) for k, n in self.pairs.items() if n)
        out.update((k, n) for k, n in self.triples.items() if n)
        return out
