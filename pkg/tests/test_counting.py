import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from thyme.counting import (
    CountOverflowError,
    _pyimpl,
    _to_vector,
    count_brute_force,
    count_dp,
    count_motifs,
    count_thyme,
    count_thyme_plus,
    incident_counts,
    iter_instances,
)
from thyme.hypergraph import TemporalHypergraph
from thyme.motifs import MOTIF_TABLE
from thyme.synthetic import random_hypergraph

from conftest import E1_DELTA

FAST = {"dp": count_dp, "thyme": count_thyme, "thyme-plus": count_thyme_plus}


def hypergraphs(max_edges=25, max_node=7):
    edge = st.tuples(st.frozensets(st.integers(0, max_node), min_size=1, max_size=4), st.integers(1, 4))

    def build(items):
        t, pairs = 0, []
        for nodes, gap in items:
            t += gap
            pairs.append((nodes, t))
        return TemporalHypergraph.from_pairs(pairs, node_count=max_node + 1)

    return st.lists(edge, max_size=max_edges).map(build)


def shifted(T, offset, factor=1):
    return TemporalHypergraph.from_pairs(
        [(e.nodes, e.timestamp * factor + offset) for e in T.edges], node_count=T.node_count
    )


# -- worked example -------------------------------------------------------


def test_e1_instances(e1):
    # region codes worked out by hand for the four valid triples
    by_code = MOTIF_TABLE.pattern_to_id
    expect = [(1, 2, 3, by_code[98]), (1, 2, 4, by_code[29]), (2, 3, 4, by_code[46]), (3, 4, 5, by_code[50])]
    found = [(i + 1, j + 1, k + 1, m) for i, j, k, m in iter_instances(e1, E1_DELTA)]
    assert sorted(found) == expect
    assert [m for *_, m in expect] == [95, 6, 15, 19]


@pytest.mark.parametrize("algo", list(FAST))
def test_e1_all_algorithms(e1, algo, backend):
    expect = count_brute_force(e1, E1_DELTA)
    assert expect.sum() == 4 and expect[95 - 1] == 1
    assert np.array_equal(FAST[algo](e1, E1_DELTA, backend=backend), expect)


def test_e1_window_after_last_arrival(e1):
    seen = {}
    _pyimpl.thyme(e1, E1_DELTA, observer=lambda i, P: seen.__setitem__(i, set(P.adjacency)))
    # e1 and e2 have expired; e3 (t=3) stays because 3 + 3 < 6 is false,
    # and it must, since (e3, e4, e5) is a valid instance
    assert seen[4] == {2, 3, 4}
    assert seen[3] == {0, 1, 2, 3}


def test_e1_q_state_after_third_arrival(e1):
    seen = {}

    def snap(i, Q):
        seen[i] = ({s for s in Q.adjacency}, {s: list(ts) for s, ts in Q.times.items()})

    _pyimpl.thyme_plus(e1, E1_DELTA, observer=snap)
    nodes, times = seen[2]
    assert nodes == {frozenset({1, 2}), frozenset({2, 3})}
    assert times[frozenset({1, 2})] == [1, 3]


def test_e1_incident_rows(e1, backend):
    F = incident_counts(e1, E1_DELTA, backend)
    assert F.shape == (5, 96)
    assert F[1].sum() == 3 and F[4].sum() == 1
    assert np.array_equal(F.sum(axis=0), 3 * count_brute_force(e1, E1_DELTA).astype(np.int64))


# -- small hand cases ------------------------------------------------------


@pytest.mark.parametrize("algo", ["bruteforce"] + list(FAST))
def test_empty_and_zero_delta(algo, backend):
    empty = TemporalHypergraph(0, ())
    assert count_motifs(empty, 5, algo, backend).total == 0
    T = random_hypergraph(1, n_edges=30, n_nodes=6)
    assert count_motifs(T, 0, algo, backend).total == 0


def test_repeated_single_set_dp(backend):
    T = TemporalHypergraph.from_pairs([({1}, 1), ({1}, 2), ({1}, 3)])
    assert count_dp(T, 2, backend=backend)[95] == 1


def test_disjoint_edges_thyme(backend):
    T = TemporalHypergraph.from_pairs([({1}, 1), ({2}, 2), ({3}, 3)])
    assert count_thyme(T, 5, backend=backend).sum() == 0


@pytest.mark.parametrize("k", [3, 4, 7, 12])
def test_copies_closed_form(k, backend):
    T = TemporalHypergraph.from_pairs([({1, 2}, t) for t in range(1, k + 1)])
    counts = count_thyme_plus(T, k, backend=backend)
    assert counts[95] == math.comb(k, 3) == counts.sum()


def test_negative_delta_rejected():
    T = random_hypergraph(0, n_edges=5)
    for f in (count_brute_force, count_dp, count_thyme, count_thyme_plus):
        with pytest.raises(ValueError):
            f(T, -1)


def test_overflow_detected():
    with pytest.raises(CountOverflowError):
        _to_vector([0] + [2**64] + [0] * 95)
    assert _to_vector([0] + [2**64 - 1] + [0] * 95)[0] == 2**64 - 1


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        count_motifs(random_hypergraph(0, n_edges=5), 1, "nope")


# -- oracle equivalence ----------------------------------------------------


@pytest.mark.parametrize("seed", range(40))
def test_matches_bruteforce_random(seed, backend):
    rng = np.random.default_rng(seed)
    T = random_hypergraph(
        seed, n_edges=int(rng.integers(5, 70)), n_nodes=int(rng.integers(3, 20)),
        max_size=int(rng.integers(1, 6)),
    )
    span = int(T.timestamps[-1] - T.timestamps[0])
    for delta in (0, 1, int(np.median(np.diff(T.timestamps))), span):
        expect = count_brute_force(T, delta)
        for algo, f in FAST.items():
            assert np.array_equal(f(T, delta, backend=backend), expect), (algo, delta)


def test_backends_agree_on_local_corpus():
    pytest.importorskip("thyme.counting._kernels")
    from thyme.synthetic import local_repetition_corpus

    T = local_repetition_corpus(2, n_edges=800, n_sets=30, n_nodes=60)
    for algo, f in FAST.items():
        assert np.array_equal(f(T, 40, backend="python"), f(T, 40, backend="compiled")), algo


# -- properties ------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(hypergraphs(), st.integers(0, 15), st.integers(-50, 50))
def test_shift_invariance(T, delta, offset):
    base = count_thyme_plus(T, delta)
    assert np.array_equal(count_thyme_plus(shifted(T, offset), delta), base)
    assert np.array_equal(count_dp(shifted(T, offset), delta), count_dp(T, delta))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(), st.integers(0, 15), st.integers(1, 5))
def test_scale_invariance(T, delta, c):
    assert np.array_equal(count_thyme(shifted(T, 0, c), delta * c), count_thyme(T, delta))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(), st.integers(0, 15), st.integers(0, 10))
def test_delta_monotone(T, delta, extra):
    small = count_thyme_plus(T, delta).astype(np.int64)
    large = count_thyme_plus(T, delta + extra).astype(np.int64)
    assert np.all(large >= small)


@settings(max_examples=60, deadline=None)
@given(hypergraphs(), st.integers(0, 15))
def test_incident_column_sums(T, delta):
    F = incident_counts(T, delta)
    assert np.array_equal(F.sum(axis=0), 3 * count_brute_force(T, delta).astype(np.int64))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(), st.integers(0, 15))
def test_window_content_after_every_arrival(T, delta):
    times = T.timestamps.tolist()

    def window(i):
        return [j for j in range(i + 1) if times[i] - delta <= times[j]]

    def check_p(i, P):
        assert sorted(P.adjacency) == window(i)
        for j in P.adjacency:
            assert P.adjacency[j] == {k for k in P.adjacency if k != j and T.edges[j].nodes & T.edges[k].nodes}

    def check_q(i, Q):
        expect = {}
        for j in window(i):
            expect.setdefault(T.edges[j].nodes, []).append(times[j])
        assert {s: list(ts) for s, ts in Q.times.items() if ts} == expect
        assert set(Q.adjacency) == set(expect)

    _pyimpl.thyme(T, delta, observer=check_p)
    _pyimpl.thyme_plus(T, delta, observer=check_q)
