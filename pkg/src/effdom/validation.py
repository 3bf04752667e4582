"""Input coercion so estimators accept graphs in the forms people already hold."""

from __future__ import annotations

import numpy as np

from .formats import parse_graph
from .graph import Graph, GraphError, from_edge_list


def check_graph(g) -> Graph:
    """Coerce one graph-like object to :class:`Graph`.

    Accepted: ``Graph``; a ``networkx.Graph`` (nodes relabeled by sorted
    order); a graph6 or edge-list string, or graph6 bytes; a square symmetric
    0/1 adjacency matrix with zero diagonal.
    """
    if isinstance(g, Graph):
        return g
    if isinstance(g, bytes):
        g = g.decode("ascii")
    if isinstance(g, str):
        return parse_graph(g)
    if hasattr(g, "nodes") and hasattr(g, "edges"):
        if g.is_directed() or g.is_multigraph():
            raise GraphError("only simple undirected graphs are supported")
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return from_edge_list(len(nodes), [(index[u], index[v]) for u, v in g.edges()])
    a = np.asarray(g)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise GraphError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.isin(a, (0, 1)).all():
        raise GraphError("adjacency matrix entries must be 0 or 1")
    if (a != a.T).any():
        raise GraphError("adjacency matrix must be symmetric")
    if np.diag(a).any():
        raise GraphError("adjacency matrix must have a zero diagonal")
    rows, cols = np.nonzero(np.triu(a, 1))
    return from_edge_list(a.shape[0], list(zip(rows.tolist(), cols.tolist())))


def check_graphs(X) -> list[Graph]:
    """Coerce a collection of graphs; a lone graph is treated as a batch of one."""
    if isinstance(X, (Graph, str, bytes)) or hasattr(X, "nodes"):
        return [check_graph(X)]
    if isinstance(X, np.ndarray) and X.ndim == 2:
        return [check_graph(X)]
    return [check_graph(g) for g in X]
