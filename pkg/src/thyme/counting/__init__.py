"""Exact motif counters.

Four interchangeable algorithms produce the same 96-entry count vector
(index ``m - 1`` holds motif ``m``):

``bruteforce``  every index triple, cubic time (oracle)
``dp``          windowed sequence counting per static triple, pair and single
``thyme``       instance enumeration on the projected graph of temporal hyperedges
``thyme-plus``  enumeration on the projected graph of distinct node-sets with
                timestamp combinatorics for duplicated hyperedges

``dp``, ``thyme`` and ``thyme-plus`` run on the compiled kernels when the
extension is built, otherwise on the pure-Python implementation.  Set
``THYME_BACKEND=python`` to force the latter.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from thyme.counting import _pyimpl
from thyme.counting.bruteforce import count_brute_force, iter_instances
from thyme.counting.projected import (
    ProjectedGraphP,
    ProjectedGraphQ,
    count_ordered_timestamp_pairs,
    enumerate_triples_containing,
)
from thyme.counting.sequence import SequenceCounter
from thyme.motifs import MOTIF_TABLE, N_MOTIFS

try:
    from thyme.counting import _kernels
except ImportError:  # extension not built
    _kernels = None

ALGORITHMS = ("bruteforce", "dp", "thyme", "thyme-plus")
_U64_MAX = 2**64 - 1


class CountOverflowError(OverflowError):
    pass


def compiled_available() -> bool:
    return _kernels is not None


def default_backend() -> str:
    forced = os.environ.get("THYME_BACKEND", "").strip().lower()
    if forced in ("python", "compiled"):
        return forced
    return "compiled" if _kernels is not None else "python"


def _resolve(backend):
    backend = backend or default_backend()
    if backend not in ("python", "compiled"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "compiled" and _kernels is None:
        raise RuntimeError("compiled kernels are not available; reinstall with a C compiler")
    return backend


def _check_delta(delta):
    if delta < 0:
        raise ValueError("delta must be non-negative")


def _to_vector(M) -> np.ndarray:
    if isinstance(M, np.ndarray):
        return M[1:].astype(np.uint64)
    if max(M) > _U64_MAX:
        raise CountOverflowError("motif count exceeds 64 bits")
    return np.array(M[1:], dtype=np.uint64)


def _lookup():
    return np.ascontiguousarray(MOTIF_TABLE.id_lookup, dtype=np.int32)


def _run(algorithm, T, delta, backend):
    _check_delta(delta)
    if algorithm == "bruteforce":
        return count_brute_force(T, delta), {}
    backend = _resolve(backend)
    try:
        if algorithm == "thyme":
            if backend == "compiled":
                M, stats = _kernels.thyme(T.index, delta, _lookup())
            else:
                M, stats = _pyimpl.thyme(T, delta)
        elif algorithm == "thyme-plus":
            if backend == "compiled":
                M, stats = _kernels.thyme_plus(T.index, delta, _lookup())
            else:
                M, stats = _pyimpl.thyme_plus(T, delta)
        elif algorithm == "dp":
            if backend == "compiled":
                ptr, adj = T.index.static_adjacency()
                M, stats = _kernels.dp(T.index, delta, _lookup(), ptr, adj)
            else:
                M, stats = _pyimpl.dp(T, delta)
        else:
            raise ValueError(f"unknown algorithm {algorithm!r}")
    except OverflowError as exc:
        raise CountOverflowError(str(exc)) from exc
    return _to_vector(M), stats


def count_dp(T, delta, backend=None) -> np.ndarray:
    return _run("dp", T, delta, backend)[0]


def count_thyme(T, delta, backend=None) -> np.ndarray:
    return _run("thyme", T, delta, backend)[0]


def count_thyme_plus(T, delta, backend=None) -> np.ndarray:
    return _run("thyme-plus", T, delta, backend)[0]


@dataclass
class CountResult:
    algorithm: str
    delta: int
    counts: np.ndarray
    seconds: float
    backend: str
    stats: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def count_motifs(T, delta, algorithm="thyme-plus", backend=None) -> CountResult:
    """Run one algorithm and record wall time and projected-graph sizes."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")
    used = "python" if algorithm == "bruteforce" else _resolve(backend)
    T.index  # build the flat arrays outside the timed region
    start = time.perf_counter()
    counts, stats = _run(algorithm, T, delta, used)
    return CountResult(algorithm, delta, counts, time.perf_counter() - start, used, stats)


def incident_counts(T, delta, backend=None) -> np.ndarray:
    """Per-hyperedge motif participation, shape ``(len(T), 96)``."""
    _check_delta(delta)
    backend = _resolve(backend)
    if backend == "compiled":
        out = np.zeros((len(T), N_MOTIFS), dtype=np.int64)
        _kernels.thyme(T.index, delta, _lookup(), out)
        return out
    rows = [[0] * (N_MOTIFS + 1) for _ in range(len(T))]
    _pyimpl.thyme(T, delta, incident=rows)
    return np.array([r[1:] for r in rows], dtype=np.int64).reshape(len(T), N_MOTIFS)


def static_class_counts(T, backend=None) -> np.ndarray:
    """Connected static triples per distinct node-set and static class, shape ``(n_static, 26)``."""
    backend = _resolve(backend)
    idx = T.index
    if backend == "compiled":
        lut = np.zeros(128, dtype=np.int32)
        for code, cls in MOTIF_TABLE.static_orbits.items():
            lut[code] = cls
        ptr, adj = idx.static_adjacency()
        return _kernels.static_classes(idx, lut, ptr, adj)
    return _pyimpl.static_classes(T)


__all__ = [
    "ALGORITHMS",
    "CountOverflowError",
    "CountResult",
    "ProjectedGraphP",
    "ProjectedGraphQ",
    "SequenceCounter",
    "static_class_counts",
    "compiled_available",
    "count_brute_force",
    "count_dp",
    "count_motifs",
    "count_ordered_timestamp_pairs",
    "count_thyme",
    "count_thyme_plus",
    "default_backend",
    "enumerate_triples_containing",
    "incident_counts",
    "iter_instances",
]
