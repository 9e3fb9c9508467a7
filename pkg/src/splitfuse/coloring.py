"""Proper edge colorings used to schedule commuting CZ gates into layers.

General graphs are colored with at most ``max_degree + 1`` colors by the
Misra-Gries fan-rotation method. Bipartite graphs take the alternating-path
method instead, which needs only ``max_degree`` colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from splitfuse.graph import Graph


@dataclass(frozen=True)
class EdgeColoring:
    """Color per edge, keyed by ``(u, v)`` with ``u < v``; colors are ``0..num_colors-1``."""

    colors: dict[tuple[int, int], int]
    num_colors: int

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.num_colors)]
        for e, c in sorted(self.colors.items()):
            out[c].append(e)
        return out

    def is_proper(self) -> bool:
        seen = set()
        for (u, v), c in self.colors.items():
            if (u, c) in seen or (v, c) in seen:
                return False
            seen.add((u, c))
            seen.add((v, c))
        return True


class _State:
    """Per-vertex maps color -> other endpoint."""

    def __init__(self, n: int):
        self.at: list[dict[int, int]] = [{} for _ in range(n)]

    def free(self, x: int, limit: int) -> int:
        used = self.at[x]
        return next(c for c in range(limit) if c not in used)

    def color_of(self, u: int, w: int) -> int | None:
        for c, y in self.at[u].items():
            if y == w:
                return c
        return None

    def set(self, a: int, b: int, c: int) -> None:
        self.at[a][c] = b
        self.at[b][c] = a

    def unset(self, a: int, b: int, c: int) -> None:
        del self.at[a][c]
        del self.at[b][c]

    def flip_path(self, start: int, c: int, d: int) -> None:
        """Swap colors ``c`` and ``d`` on the alternating path leaving ``start`` by ``d``."""
        path, cur, col = [], start, d
        while col in self.at[cur]:
            nxt = self.at[cur][col]
            path.append((cur, nxt, col))
            cur, col = nxt, (c if col == d else d)
        for a, b, col in path:
            self.unset(a, b, col)
        for a, b, col in path:
            self.set(a, b, c if col == d else d)


def _bipartite_sides(g: Graph) -> list[int] | None:
    side = [-1] * g.num_vertices
    for s in range(g.num_vertices):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def _color_bipartite(g: Graph, st: _State, limit: int) -> None:
    for u, v in g.edges():
        c = st.free(u, limit)
        d = st.free(v, limit)
        if c != d and c in st.at[v]:
            # the c/d path from v cannot reach u in a bipartite graph
            st.flip_path(v, d, c)
        st.set(u, v, c)


def _color_misra_gries(g: Graph, st: _State, limit: int) -> None:
    for u, v in g.edges():
        fan = [v]
        in_fan = {v}
        grown = True
        while grown:
            grown = False
            for c, w in sorted(st.at[u].items()):
                if w not in in_fan and c not in st.at[fan[-1]]:
                    fan.append(w)
                    in_fan.add(w)
                    grown = True
                    break
        c = st.free(u, limit)
        d = st.free(fan[-1], limit)
        if c != d:
            st.flip_path(u, c, d)
        # longest prefix that is still a fan, stopping where d is free
        w_idx = 0
        for i, x in enumerate(fan):
            if i > 0:
                ci = st.color_of(u, x)
                if ci is None or ci in st.at[fan[i - 1]]:
                    break
            if d not in st.at[x]:
                w_idx = i
                break
        shifted = [st.color_of(u, fan[j + 1]) for j in range(w_idx)]
        for j in range(1, w_idx + 1):
            st.unset(u, fan[j], shifted[j - 1])
        for j in range(w_idx):
            st.set(u, fan[j], shifted[j])
        st.set(u, fan[w_idx], d)


def edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most ``max_degree + 1`` colors."""
    st = _State(g.num_vertices)
    delta = g.max_degree
    if _bipartite_sides(g) is not None:
        _color_bipartite(g, st, max(delta, 1))
    else:
        _color_misra_gries(g, st, delta + 1)
    raw = {}
    for u in range(g.num_vertices):
        for c, w in st.at[u].items():
            if u < w:
                raw[(u, w)] = c
    # renumber the used colors consecutively
    used = {c: i for i, c in enumerate(sorted(set(raw.values())))}
    return EdgeColoring({e: used[c] for e, c in sorted(raw.items())}, len(used))
