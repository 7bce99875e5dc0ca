"""Per-hyperedge motif features and the hyperedge-prediction experiment."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from thyme.counting import incident_counts, static_class_counts
from thyme.hypergraph import TemporalHyperedge, TemporalHypergraph
from thyme.io import tie_break_order
from thyme.motifs import N_STATIC
from thyme.randomization import hypercl, temporal_degrees

FEATURE_SETS = ("thm96", "thm26", "shm26")
TRAIN_FRACTION = 0.8


class TrainingError(ValueError):
    pass


def select_top_variance(F, k: int) -> list:
    """Indices of the k columns with largest variance; ties go to the lower index."""
    F = np.asarray(F, dtype=np.float64)
    if k > F.shape[1]:
        raise ValueError(f"cannot select {k} of {F.shape[1]} columns")
    var = F.var(axis=0) if len(F) else np.zeros(F.shape[1])
    order = sorted(range(F.shape[1]), key=lambda c: (-var[c], c))
    return order[:k]


def static_incident_counts(T: TemporalHypergraph, backend=None) -> np.ndarray:
    """Connected static triples containing each hyperedge's node-set, per static class.

    Temporal information is ignored: duplicated hyperedges share a row.
    """
    per_static = np.asarray(static_class_counts(T, backend), dtype=np.int64).reshape(-1, N_STATIC)
    return per_static[T.index.static_of]


@dataclass
class PredictionDataset:
    hypergraph: TemporalHypergraph  # real and fake hyperedges merged
    labels: np.ndarray  # 1 real, 0 fake, aligned with hypergraph.edges
    n_train: int
    delta: int  # window in the merged hypergraph's time units
    seed: int

    def features(self, feature_set: str, backend=None) -> np.ndarray:
        if feature_set == "shm26":
            return static_incident_counts(self.hypergraph, backend)
        F = incident_counts(self.hypergraph, self.delta, backend)
        if feature_set == "thm96":
            return F
        if feature_set == "thm26":
            return F[:, select_top_variance(F[: self.n_train], 26)]
        raise ValueError(f"unknown feature set {feature_set!r}")

    def split(self, feature_set: str, backend=None):
        X = self.features(feature_set, backend).astype(np.float64)
        y = self.labels
        return (X[: self.n_train], y[: self.n_train]), (X[self.n_train:], y[self.n_train:])


def build_prediction_dataset(T: TemporalHypergraph, delta: int, seed: int) -> PredictionDataset:
    """Merge T with as many HyperCL fakes and split 8:2 in time order.

    Fake timestamps are uniform integers over T's time range; equal
    timestamps are ordered at random and re-indexed, and ``delta`` is
    converted to the merged time units.
    """
    rng = np.random.default_rng(seed)
    sizes = [len(e.nodes) for e in T.edges]
    fakes = hypercl(temporal_degrees(T), sizes, rng)
    times = T.timestamps
    lo, hi = (int(times.min()), int(times.max())) if len(times) else (0, 0)
    fake_times = rng.integers(lo, hi + 1, size=len(fakes))

    node_sets = [e.nodes for e in T.edges] + fakes
    all_times = np.concatenate([times, fake_times]).astype(np.int64)
    labels = np.concatenate([np.ones(len(T), dtype=np.int64), np.zeros(len(fakes), dtype=np.int64)])
    by_time = np.argsort(all_times, kind="stable")
    order, new_times, scale, slack = tie_break_order(all_times[by_time], int(rng.integers(2**63)))
    pick = by_time[order]
    merged = TemporalHypergraph(
        T.node_count,
        tuple(TemporalHyperedge(node_sets[k], int(t)) for k, t in zip(pick, new_times)),
        time_scale=scale,
        time_slack=slack,
    )
    n_train = int(TRAIN_FRACTION * len(pick))
    merged_delta = merged.scale_delta(T.scale_delta(delta))
    return PredictionDataset(merged, labels[pick], n_train, merged_delta, seed)


def _sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * z))


class LogisticRegression:
    """Binary logistic regression trained by full-batch gradient descent.

    Features are standardized with the training mean and standard deviation
    (constant columns are left centred, unscaled).
    """

    def __init__(self, epochs=500, learning_rate=0.1):
        self.epochs = epochs
        self.learning_rate = learning_rate
        self.mean = None
        self.scale = None
        self.weights = None
        self.history = []

    def _standardize(self, X):
        return (X - self.mean) / self.scale

    @staticmethod
    def loss(params, X, y):
        w, b = params[:-1], params[-1]
        z = X @ w + b
        # log(1 + exp(z)) - y z, written to avoid overflow
        return float(np.mean(np.logaddexp(0.0, z) - y * z))

    @staticmethod
    def gradient(params, X, y):
        w, b = params[:-1], params[-1]
        r = _sigmoid(X @ w + b) - y
        return np.concatenate([X.T @ r, [r.sum()]]) / len(y)

    def fit(self, X, y):
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        if len(np.unique(y)) < 2:
            raise TrainingError("training labels contain a single class")
        self.mean = X.mean(axis=0)
        std = X.std(axis=0)
        self.scale = np.where(std > 0, std, 1.0)
        Z = self._standardize(X)
        params = np.zeros(X.shape[1] + 1)
        self.history = [self.loss(params, Z, y)]
        for _ in range(self.epochs):
            params -= self.learning_rate * self.gradient(params, Z, y)
            self.history.append(self.loss(params, Z, y))
        self.weights = params
        return self

    def predict_proba(self, X):
        Z = self._standardize(np.asarray(X, dtype=np.float64))
        return _sigmoid(Z @ self.weights[:-1] + self.weights[-1])

    def predict(self, X):
        return (self.predict_proba(X) >= 0.5).astype(np.int64)


def train_eval_logreg(train, test, epochs=500, learning_rate=0.1) -> float:
    (X_train, y_train), (X_test, y_test) = train, test
    if len(y_train) == 0 or len(y_test) == 0:
        raise TrainingError("train and test sets must be non-empty")
    model = LogisticRegression(epochs, learning_rate).fit(X_train, y_train)
    return float(np.mean(model.predict(X_test) == np.asarray(y_test)))


def run_prediction(T, delta, seed, feature_sets=FEATURE_SETS, epochs=500, learning_rate=0.1,
                   backend=None) -> list:
    data = build_prediction_dataset(T, delta, seed)
    reports = []
    for name in feature_sets:
        train, test = data.split(name, backend)
        reports.append(
            {
                "feature_set": name,
                "accuracy": train_eval_logreg(train, test, epochs, learning_rate),
                "train_size": len(train[1]),
                "test_size": len(test[1]),
                "seed": seed,
            }
        )
    return reports
