"""Input coercion for the estimator layer and the CLI."""

from __future__ import annotations

from collections.abc import Mapping

import numpy as np

from splitfuse.exceptions import InvalidInputError, PreconditionError
from splitfuse.graph import Graph


def check_graph(g, connected: bool = False) -> Graph:
    """Coerce ``g`` to a :class:`Graph`.

    Accepts a :class:`Graph`, a mapping in the graph JSON layout
    (``num_vertices`` and ``edges``) or a square symmetric 0/1 adjacency
    array with an empty diagonal.

    Parameters
    ----------
    g : Graph, dict or array-like
    connected : bool
        Also require the graph to be connected (and non-empty).
    """
    if isinstance(g, Graph):
        out = g
    elif isinstance(g, Mapping):
        out = Graph.from_dict(dict(g))
    else:
        try:
            arr = np.asarray(g)
        except (TypeError, ValueError) as exc:
            raise InvalidInputError(f"cannot interpret {type(g).__name__} as a graph") from exc
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.dtype == object:
            raise InvalidInputError(f"adjacency must be a square array, got shape {arr.shape}")
        if not np.isin(arr, (0, 1)).all():
            raise InvalidInputError("adjacency entries must be 0 or 1")
        out = Graph.from_adjacency(arr.astype(bool))
    if connected and (out.num_vertices == 0 or not out.is_connected()):
        raise PreconditionError("graph must be connected and non-empty")
    return out


def check_graphs(X, connected: bool = False) -> list[Graph]:
    """Coerce a single graph or a sequence of graphs to a list of :class:`Graph`."""
    if isinstance(X, (Graph, Mapping)) or (isinstance(X, np.ndarray) and X.ndim == 2):
        return [check_graph(X, connected)]
    try:
        items = list(X)
    except TypeError as exc:
        raise InvalidInputError(f"expected a graph or a sequence of graphs, got {type(X).__name__}") from exc
    return [check_graph(g, connected) for g in items]
