"""Thin scikit-learn style wrappers over the pure functions.

The estimators hold configuration only; ``fit`` validates the input and
records how many graphs were seen, and ``transform`` maps each graph to a
row of numbers (or, for :class:`TriangleHeuristic`, to an improved graph).
They compose with :class:`sklearn.pipeline.Pipeline` and support
``get_params``/``set_params``/``clone``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from splitfuse.exceptions import InvalidInputError
from splitfuse.heuristic import triangle_greedy
from splitfuse.orbit import oracle_min_stats
from splitfuse.planner import STRATEGIES, make_plan
from splitfuse.validation import check_graphs


class _GraphTransformer(TransformerMixin, BaseEstimator):
    def fit(self, X, y=None):
        self.n_graphs_seen_ = len(check_graphs(X))
        return self

    def _graphs(self, X):
        check_is_fitted(self, "n_graphs_seen_")
        return check_graphs(X)


class PlanResources(_GraphTransformer):
    """Resource summary of a preparation strategy.

    Parameters
    ----------
    strategy : str
        One of ``naive``, ``heuristic``, ``splitfuse``, ``generalized``,
        ``generalized+heuristic``.
    compress : bool
        Drop empty layers from split-fuse plans before counting depth.

    ``transform`` returns an ``(n_graphs, 4)`` integer array with columns
    CZ count, time steps, qubits and auxiliary qubits.
    """

    feature_names = ("cz", "depth", "qubits", "aux")

    def __init__(self, strategy: str = "splitfuse", compress: bool = False):
        self.strategy = strategy
        self.compress = compress

    def fit(self, X, y=None):
        if self.strategy not in STRATEGIES:
            raise InvalidInputError(f"unknown strategy {self.strategy!r}")
        return super().fit(X, y)

    def plan(self, g):
        """Full plan for one graph."""
        return make_plan(check_graphs(g)[0], self.strategy, compress=self.compress)

    def transform(self, X):
        rows = [make_plan(g, self.strategy, compress=self.compress).summary.as_tuple() for g in self._graphs(X)]
        return np.array(rows, dtype=np.int64).reshape(len(rows), 4)

    def get_feature_names_out(self, input_features=None):
        return np.array(self.feature_names, dtype=object)


class OrbitStatistics(_GraphTransformer):
    """Exact LC-orbit size, minimum edge count and minimum maximum degree.

    ``transform`` returns an ``(n_graphs, 3)`` integer array. The orbit is
    enumerated, so this is practical only for small graphs.
    """

    feature_names = ("orbit_size", "min_edges", "min_max_degree")

    def __init__(self, max_size: int = 100_000):
        self.max_size = max_size

    def transform(self, X):
        rows = []
        for g in self._graphs(X):
            r = oracle_min_stats(g, self.max_size)
            rows.append((r.orbit_size, r.min_edges, r.min_max_degree))
        return np.array(rows, dtype=np.int64).reshape(len(rows), 3)

    def get_feature_names_out(self, input_features=None):
        return np.array(self.feature_names, dtype=object)


class TriangleHeuristic(_GraphTransformer):
    """Replace each graph by its greedy edge-reduced LC representative."""

    def __init__(self, iterate: bool = False):
        self.iterate = iterate

    def transform(self, X):
        return [triangle_greedy(g, iterate=self.iterate).improved for g in self._graphs(X)]
