"""scikit-learn compatible wrappers.

Each sample is one graph; ``X`` is any iterable of graph-like objects
accepted by :func:`effdom.validation.check_graphs`. The estimators learn
nothing from data, so ``fit`` only validates input and records its size.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .eds import eds_brute_force, eds_via_square
from .formats import emit_graph6
from .graph import square
from .patterns import PAPER_CLASS, _degree_masks, find_induced, resolve_patterns
from .validation import check_graphs


class _StatelessGraphEstimator(BaseEstimator):
    def fit(self, X, y=None):
        self.n_graphs_seen_ = len(check_graphs(X))
        return self

    def _check(self, X):
        check_is_fitted(self, "n_graphs_seen_")
        return check_graphs(X)


class GraphSquarer(TransformerMixin, _StatelessGraphEstimator):
    """Replace each graph by its square.

    Parameters
    ----------
    output : {"graph", "graph6"}, default="graph"
        Return :class:`Graph` objects or graph6 strings.
    """

    def __init__(self, output="graph"):
        self.output = output

    def transform(self, X):
        if self.output not in ("graph", "graph6"):
            raise ValueError(f"output must be 'graph' or 'graph6', got {self.output!r}")
        squares = [square(g) for g in self._check(X)]
        if self.output == "graph6":
            return [emit_graph6(h) for h in squares]
        return squares


class PatternFreeClassifier(TransformerMixin, _StatelessGraphEstimator):
    """Membership in the class of graphs with no induced copy of ``forbid``.

    ``transform`` gives one 0/1 column per pattern (1 = the pattern occurs);
    ``predict`` is True for graphs free of all of them.
    """

    def __init__(self, forbid=PAPER_CLASS):
        self.forbid = forbid

    def transform(self, X):
        patterns = resolve_patterns(self.forbid)
        out = np.zeros((0, len(patterns)), dtype=np.int8)
        rows = []
        for g in self._check(X):
            index = _degree_masks(g)
            rows.append([find_induced(g, p, index) is not None for p in patterns])
        return np.asarray(rows, dtype=np.int8) if rows else out

    def predict(self, X):
        return ~self.transform(X).any(axis=1)

    def get_feature_names_out(self, input_features=None):
        return np.asarray([f"contains_{p.name}" for p in resolve_patterns(self.forbid)], dtype=object)


class EfficientDominationSolver(_StatelessGraphEstimator):
    """Decide efficient-dominating-set existence for each graph.

    Parameters
    ----------
    method : {"square", "brute"}, default="square"
        ``"square"`` solves maximum-weight independent set on the square with
        weights ``deg + 1``; ``"brute"`` runs an exact cover search (n <= 24).
    """

    def __init__(self, method="square"):
        self.method = method

    def solve(self, X):
        if self.method == "square":
            decide = eds_via_square
        elif self.method == "brute":
            decide = eds_brute_force
        else:
            raise ValueError(f"method must be 'square' or 'brute', got {self.method!r}")
        return [decide(g) for g in self._check(X)]

    def predict(self, X):
        return np.asarray([r.exists for r in self.solve(X)], dtype=bool)

    def fit_predict(self, X, y=None):
        return self.fit(X).predict(X)
