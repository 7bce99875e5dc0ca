"""Cubic-time reference counter, used as the oracle for the fast algorithms."""
from __future__ import annotations

import numpy as np

from thyme.motifs import MOTIF_TABLE, N_MOTIFS


def _mask(nodes) -> int:
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


def _regions(a: int, b: int, c: int) -> int:
    # direct set algebra on bitmasks, region r -> bit r-1
    parts = (a & ~b & ~c, b & ~c & ~a, c & ~a & ~b, a & b & ~c, b & c & ~a, c & a & ~b, a & b & c)
    code = 0
    for r, part in enumerate(parts):
        if part:
            code |= 1 << r
    return code


def _connected(a: int, b: int, c: int) -> bool:
    return bool(a & b) + bool(b & c) + bool(c & a) >= 2


def iter_instances(T, delta: int):
    """Yield ``(i, j, k, motif_id)`` for every valid instance, ``i < j < k``."""
    masks = [_mask(e.nodes) for e in T.edges]
    times = [e.timestamp for e in T.edges]
    lookup = MOTIF_TABLE.pattern_to_id
    n = len(masks)
    for i in range(n):
        a = masks[i]
        k = i + 2
        while k < n and times[k] - times[i] <= delta:
            c = masks[k]
            for j in range(i + 1, k):
                b = masks[j]
                if _connected(a, b, c):
                    yield i, j, k, lookup[_regions(a, b, c)]
            k += 1


def count_brute_force(T, delta: int) -> np.ndarray:
    if delta < 0:
        raise ValueError("delta must be non-negative")
    counts = [0] * (N_MOTIFS + 1)
    for *_, m in iter_instances(T, delta):
        counts[m] += 1
    return np.array(counts[1:], dtype=np.uint64)
