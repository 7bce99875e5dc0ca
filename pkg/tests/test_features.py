import numpy as np
import pytest

from thyme.counting import count_brute_force
from thyme.features import (
    LogisticRegression,
    TrainingError,
    build_prediction_dataset,
    run_prediction,
    select_top_variance,
    static_incident_counts,
    train_eval_logreg,
)
from thyme.motifs import classify_static
from thyme.synthetic import local_repetition_corpus, random_hypergraph


def test_select_top_variance_ties_lower_index():
    F = np.array([[0, 1, 0, 5], [0, 3, 2, 5], [0, 1, 0, 5], [0, 3, 2, 5]])
    assert select_top_variance(F, 2) == [1, 2]
    assert select_top_variance(F, 4) == [1, 2, 0, 3]
    with pytest.raises(ValueError):
        select_top_variance(F, 5)


def test_static_counts_e1(e1):
    S = static_incident_counts(e1)
    assert S.shape == (5, 26)
    # each of the 4 distinct sets lies in 3 of the 4 connected static triples
    assert S.sum(axis=1).tolist() == [3, 3, 3, 3, 3]
    assert np.array_equal(S[0], S[2])  # duplicates share a row
    cls = classify_static({1, 2}, {2, 3}, {3, 4})
    assert S[3, cls - 1] >= 1


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(40, 6))
    y = (rng.random(40) < 0.5).astype(float)
    params = rng.normal(size=7)
    g = LogisticRegression.gradient(params, X, y)
    h = 1e-6
    num = np.array([
        (LogisticRegression.loss(params + h * e, X, y) - LogisticRegression.loss(params - h * e, X, y)) / (2 * h)
        for e in np.eye(7)
    ])
    assert np.max(np.abs(g - num) / np.maximum(np.abs(num), 1e-8)) < 1e-5


def separable(seed, n=400, d=5):
    rng = np.random.default_rng(seed)
    w = rng.normal(size=d)
    X = rng.normal(size=(n, d))
    margin = X @ w
    keep = np.abs(margin) > 0.2
    return X[keep], (margin[keep] > 0).astype(int)


def test_separable_accuracy():
    X, y = separable(1)
    cut = int(0.8 * len(y))
    acc = train_eval_logreg((X[:cut], y[:cut]), (X[cut:], y[cut:]))
    assert acc >= 0.95


def test_loss_decreases():
    X, y = separable(2)
    model = LogisticRegression(epochs=200, learning_rate=0.1).fit(X, y)
    assert all(b <= a + 1e-12 for a, b in zip(model.history, model.history[1:]))


def test_single_class_rejected():
    X = np.ones((4, 2))
    with pytest.raises(TrainingError):
        LogisticRegression().fit(X, np.ones(4))


def test_prediction_dataset_shape():
    T = local_repetition_corpus(0, n_edges=400, n_sets=40, n_nodes=60)
    data = build_prediction_dataset(T, 20, seed=3)
    H = data.hypergraph
    assert len(H) == 800 and data.labels.sum() == 400
    assert np.all(np.diff(H.timestamps) > 0)
    assert data.n_train == 640
    X96 = data.features("thm96")
    assert X96.shape == (800, 96)
    assert np.array_equal(X96.sum(axis=0), 3 * count_brute_force(H, data.delta).astype(np.int64))
    assert data.features("thm26").shape == (800, 26)
    assert data.features("shm26").shape == (800, 26)
    with pytest.raises(ValueError):
        data.features("nope")


def test_run_prediction_reports():
    T = local_repetition_corpus(1, n_edges=400, n_sets=40, n_nodes=60)
    reports = run_prediction(T, 20, seed=0, epochs=100)
    assert [r["feature_set"] for r in reports] == ["thm96", "thm26", "shm26"]
    for r in reports:
        assert set(r) == {"feature_set", "accuracy", "train_size", "test_size", "seed"}
        assert 0 <= r["accuracy"] <= 1 and r["train_size"] == 640 and r["test_size"] == 160
    assert reports == run_prediction(T, 20, seed=0, epochs=100)
