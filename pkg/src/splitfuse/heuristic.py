"""Greedy edge reduction by local complements at triangle vertices."""

from __future__ import annotations

from dataclasses import dataclass

from splitfuse.graph import Graph, LcSequence, _lc_rows, iter_bits, record_sequence


def enumerate_triangle_vertices(g: Graph) -> list[int]:
    """Vertices lying on at least one triangle, ascending.

    Each edge ``{u, v}`` whose endpoints share a neighbour marks both
    endpoints; every triangle marks all three of its vertices this way.
    """
    rows = g.rows
    hit = 0
    for u, nu in enumerate(rows):
        for v in iter_bits(nu >> (u + 1)):
            v += u + 1
            if nu & rows[v]:
                hit |= (1 << u) | (1 << v)
    return list(iter_bits(hit))


@dataclass(frozen=True)
class HeuristicResult:
    """Outcome of :func:`triangle_greedy`.

    ``sequence`` replays on the input graph to give ``improved``; its
    recorded neighbourhoods are those at acceptance time.
    """

    improved: Graph
    sequence: LcSequence
    edges_before: int
    edges_after: int

    @property
    def neighborhoods(self) -> list[tuple[int, ...]]:
        return [h[0] for h in self.sequence.neighborhoods]

    def to_dict(self) -> dict:
        return {
            "improved": self.improved.to_dict(),
            "sequence": self.sequence.vertices(),
            "neighborhoods": [list(h) for h in self.neighborhoods],
            "edges_before": self.edges_before,
            "edges_after": self.edges_after,
        }


def _lc_edge_delta(rows, v: int) -> int:
    """Change in edge count caused by complementing around ``v``."""
    nb = rows[v]
    d = nb.bit_count()
    inside = sum((rows[u] & nb).bit_count() for u in iter_bits(nb)) // 2
    return d * (d - 1) // 2 - 2 * inside


def triangle_greedy(g: Graph, iterate: bool = False) -> HeuristicResult:
    """Single greedy pass of local complements over the triangle vertices of ``g``.

    The candidate list is computed once on the input. Each candidate ``v`` is
    complemented in the current graph if that strictly lowers the edge
    count. A candidate may have left every triangle by the time it is
    visited; it is still tried.

    Parameters
    ----------
    g : Graph
        Input graph.
    iterate : bool
        Repeat passes, recomputing the candidates on the current graph,
        until a pass accepts nothing.
    """
    rows = list(g.rows)
    accepted: list[int] = []
    candidates = enumerate_triangle_vertices(g)
    while True:
        before = len(accepted)
        for v in candidates:
            if _lc_edge_delta(rows, v) < 0:
                _lc_rows(rows, v)
                accepted.append(v)
        if not iterate or len(accepted) == before:
            break
        candidates = enumerate_triangle_vertices(Graph._trusted(tuple(rows)))
    improved, seq = record_sequence(g, accepted)
    return HeuristicResult(improved, seq, g.num_edges, improved.num_edges)
