"""Simple labeled graphs and the rewrite rules used on graph states.

Adjacency is held as one Python ``int`` bitset per vertex, so a local
complement is a handful of XORs with the neighbourhood mask. Every rewrite
returns a new :class:`Graph`; inputs are never mutated.
"""

from __future__ import annotations

import json
from numbers import Integral
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from splitfuse.exceptions import InvalidInputError, PreconditionError

__all__ = [
    "Graph",
    "LcStep",
    "LcSequence",
    "MeasurementOutcome",
    "FusionResult",
    "GraphStats",
    "iter_bits",
    "local_complement",
    "edge_pivot",
    "apply_sequence",
    "record_sequence",
    "delete_vertex",
    "induced_subgraph",
    "disjoint_union",
    "measure_pauli",
    "fuse_type2",
    "fuse_type2_within",
    "fuse_type1",
    "graph_stats",
    "read_graph_json",
    "write_graph_json",
    "read_edge_list",
    "write_edge_list",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``.

    Parameters
    ----------
    num_vertices : int
        Number of vertices.
    edges : iterable of (int, int)
        Undirected edges. Self-loops and duplicates are rejected.
    """

    __slots__ = ("_rows", "_hash")

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if num_vertices < 0:
            raise InvalidInputError(f"num_vertices must be >= 0, got {num_vertices}")
        rows = [0] * num_vertices
        for e in edges:
            if len(e) != 2:
                raise InvalidInputError(f"edge {tuple(e)} must have two endpoints")
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for {num_vertices} vertices")
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise InvalidInputError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build a graph directly from adjacency bitsets (validated)."""
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        full = (1 << n) - 1
        for u, r in enumerate(rows):
            if r & ~full or r >> u & 1:
                raise InvalidInputError(f"row {u} has out-of-range bits or a self-loop")
            for w in iter_bits(r):
                if not rows[w] >> u & 1:
                    raise InvalidInputError(f"adjacency not symmetric at ({u}, {w})")
        return cls._trusted(rows)

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> "Graph":
        g = cls.__new__(cls)
        g._rows = rows
        g._hash = None
        return g

    @classmethod
    def from_adjacency(cls, matrix) -> "Graph":
        """Build a graph from a square 0/1 adjacency matrix (nested lists or array)."""
        n = len(matrix)
        rows = []
        for u in range(n):
            if len(matrix[u]) != n:
                raise InvalidInputError("adjacency matrix must be square")
            r = 0
            for v in range(n):
                if matrix[u][v]:
                    r |= 1 << v
            rows.append(r)
        return cls.from_rows(rows)

    # -- basic queries -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitsets, one per vertex."""
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def vertices(self) -> range:
        return range(len(self._rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u, r in enumerate(self._rows):
            for v in iter_bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_connected(self) -> bool:
        n = len(self._rows)
        if n == 0:
            return True
        return self.component_mask(0) == (1 << n) - 1

    def component_mask(self, v: int) -> int:
        """Bitset of the vertices in the connected component of ``v``."""
        seen = 1 << v
        frontier = seen
        rows = self._rows
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= rows[u]
            frontier = nxt & ~seen
            seen |= nxt
        return seen

    def key(self) -> int:
        """Canonical encoding of the labeled graph: the upper-triangular adjacency bits.

        Bit ``offset(u) + (v - u - 1)`` is set iff ``{u, v}`` is an edge, where
        rows are packed in order ``u = 0, 1, ...``.
        """
        n = len(self._rows)
        k = 0
        shift = 0
        for u, r in enumerate(self._rows):
            width = n - u - 1
            k |= (r >> (u + 1)) << shift
            shift += width
        return k

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({len(self._rows)}, {self.edges()})"

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {"num_vertices": len(self._rows), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        try:
            n = int(data["num_vertices"])
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed graph JSON: {exc}") from exc
        for e in edges:
            if len(e) != 2:
                raise InvalidInputError(f"edge {e!r} must have two endpoints")
        return cls(n, edges)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, Integral) or isinstance(v, bool) or not 0 <= v < g.num_vertices:
        raise InvalidInputError(f"vertex {v!r} not in graph with {g.num_vertices} vertices")


# -- local complement and friends -----------------------------------------


def _lc_rows(rows: list[int], v: int) -> None:
    nb = rows[v]
    for u in iter_bits(nb):
        rows[u] ^= nb & ~(1 << u)


def local_complement(g: Graph, v: int) -> Graph:
    """Complement the edges inside the neighbourhood of ``v``."""
    _check_vertex(g, v)
    rows = list(g.rows)
    _lc_rows(rows, v)
    return Graph._trusted(tuple(rows))


def edge_pivot(g: Graph, u: int, v: int) -> Graph:
    """Edge pivot along ``{u, v}``: local complements at ``u``, ``v``, ``u``."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise PreconditionError(f"edge pivot needs an edge, ({u}, {v}) is not one")
    rows = list(g.rows)
    _lc_rows(rows, u)
    _lc_rows(rows, v)
    _lc_rows(rows, u)
    return Graph._trusted(tuple(rows))


@dataclass(frozen=True)
class LcStep:
    """A single local complement (``kind="lc"``) or edge pivot (``kind="pivot"``)."""

    kind: str
    vertices: tuple[int, ...]

    def __post_init__(self):
        if self.kind == "lc" and len(self.vertices) != 1:
            raise InvalidInputError("lc step takes one vertex")
        if self.kind == "pivot" and len(self.vertices) != 2:
            raise InvalidInputError("pivot step takes two vertices")
        if self.kind not in ("lc", "pivot"):
            raise InvalidInputError(f"unknown step kind {self.kind!r}")

    @classmethod
    def lc(cls, v: int) -> "LcStep":
        return cls("lc", (v,))

    @classmethod
    def pivot(cls, u: int, v: int) -> "LcStep":
        return cls("pivot", (u, v))

    def elementary(self) -> tuple[int, ...]:
        """The vertices of the underlying local complements, in application order."""
        if self.kind == "lc":
            return self.vertices
        u, v = self.vertices
        return (u, v, u)


@dataclass(frozen=True)
class LcSequence:
    """Ordered LC steps plus the neighbourhood of every elementary local complement.

    ``neighborhoods[i]`` holds one tuple of vertices per elementary local
    complement of ``steps[i]`` (one for ``lc``, three for ``pivot``), taken in
    the graph the complement was applied to.
    """

    steps: tuple[LcStep, ...] = ()
    neighborhoods: tuple[tuple[tuple[int, ...], ...], ...] = field(default=())

    def __len__(self) -> int:
        return len(self.steps)

    def vertices(self) -> list[int]:
        """Flattened elementary local-complement vertices."""
        return [v for s in self.steps for v in s.elementary()]

    def inverse(self) -> list[LcStep]:
        """Steps that undo this sequence (each step is an involution)."""
        return list(reversed(self.steps))

    def to_list(self) -> list[list]:
        return [[s.kind, *s.vertices] for s in self.steps]


def _as_steps(seq) -> list[LcStep]:
    if isinstance(seq, LcSequence):
        return list(seq.steps)
    out = []
    for s in seq:
        if isinstance(s, LcStep):
            out.append(s)
        elif isinstance(s, int):
            out.append(LcStep.lc(s))
        else:
            raise InvalidInputError(f"cannot interpret {s!r} as an LC step")
    return out


def apply_sequence(g: Graph, seq) -> Graph:
    """Apply LC steps left to right. Plain ints are read as local complements."""
    return record_sequence(g, seq)[0]


def record_sequence(g: Graph, seq) -> tuple[Graph, LcSequence]:
    """Apply LC steps and return the result with the recorded :class:`LcSequence`."""
    rows = list(g.rows)
    steps = _as_steps(seq)
    hoods = []
    n = len(rows)
    for i, step in enumerate(steps):
        for v in step.vertices:
            if not 0 <= v < n:
                raise PreconditionError(f"step {i}: vertex {v} out of range")
        if step.kind == "pivot":
            u, v = step.vertices
            if not rows[u] >> v & 1:
                raise PreconditionError(f"step {i}: pivot ({u}, {v}) is not an edge")
        local = []
        for v in step.elementary():
            local.append(tuple(iter_bits(rows[v])))
            _lc_rows(rows, v)
        hoods.append(tuple(local))
    return Graph._trusted(tuple(rows)), LcSequence(tuple(steps), tuple(hoods))


# -- deletion, union ------------------------------------------------------


def induced_subgraph(g: Graph, keep: Sequence[int]) -> Graph:
    """Subgraph induced on ``keep``; vertex ``keep[i]`` becomes ``i``."""
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in iter_bits(g.rows[v]):
            j = pos.get(w)
            if j is not None:
                r |= 1 << j
        rows.append(r)
    return Graph._trusted(tuple(rows))


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove ``v``; returns the induced subgraph and the old->new id map."""
    _check_vertex(g, v)
    keep = [u for u in range(g.num_vertices) if u != v]
    return induced_subgraph(g, keep), {u: i for i, u in enumerate(keep)}


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertices of ``g1`` keep their ids, those of ``g2`` are shifted by ``len(g1)``."""
    s = g1.num_vertices
    return Graph._trusted(g1.rows + tuple(r << s for r in g2.rows))


# -- fusions ----------------------------------------------------------------


class FusionResult(NamedTuple):
    graph: Graph
    left_map: dict[int, int]
    right_map: dict[int, int]


def _delete_many(rows: list[int], dead: set[int]) -> tuple[Graph, dict[int, int]]:
    keep = [u for u in range(len(rows)) if u not in dead]
    g = Graph._trusted(tuple(rows))
    return induced_subgraph(g, keep), {u: i for i, u in enumerate(keep)}


def fuse_type2_within(g: Graph, q1: int, q2: int) -> tuple[Graph, dict[int, int]]:
    """Type-II fusion of two qubits of the same graph state.

    Every neighbour of ``q1`` is joined to every neighbour of ``q2`` and both
    qubits are deleted. ``q1`` and ``q2`` must be non-adjacent with disjoint
    neighbourhoods, which is always the case when they sit on opposite sides
    of an unfused split.
    """
    _check_vertex(g, q1)
    _check_vertex(g, q2)
    if q1 == q2:
        raise InvalidInputError("cannot fuse a qubit with itself")
    rows = list(g.rows)
    if rows[q1] >> q2 & 1 or rows[q1] & rows[q2]:
        raise PreconditionError(f"fusion qubits {q1}, {q2} must be non-adjacent with disjoint neighbourhoods")
    a, b = rows[q1], rows[q2]
    for u in iter_bits(a):
        rows[u] |= b
    for w in iter_bits(b):
        rows[w] |= a
    return _delete_many(rows, {q1, q2})


def fuse_type2(g1: Graph, q1: int, g2: Graph, q2: int) -> FusionResult:
    """Type-II fusion of ``q1`` in ``g1`` with ``q2`` in ``g2``."""
    _check_vertex(g1, q1)
    _check_vertex(g2, q2)
    s = g1.num_vertices
    fused, m = fuse_type2_within(disjoint_union(g1, g2), q1, q2 + s)
    left = {u: m[u] for u in range(s) if u != q1}
    right = {u: m[u + s] for u in range(g2.num_vertices) if u != q2}
    return FusionResult(fused, left, right)


def fuse_type1(g1: Graph, q1: int, g2: Graph, q2: int) -> FusionResult:
    """Type-I fusion: ``q1`` and ``q2`` merge into one vertex adjacent to both neighbourhoods.

    The merged vertex takes the place of ``q1``; ``q2`` is removed.
    """
    _check_vertex(g1, q1)
    _check_vertex(g2, q2)
    s = g1.num_vertices
    rows = list(disjoint_union(g1, g2).rows)
    b = q2 + s
    for w in iter_bits(rows[b]):
        rows[w] |= 1 << q1
    rows[q1] |= rows[b]
    fused, m = _delete_many(rows, {b})
    left = {u: m[u] for u in range(s)}
    right = {u: m[u + s] for u in range(g2.num_vertices) if u != q2}
    right[q2] = m[q1]
    return FusionResult(fused, left, right)


# -- measurements -----------------------------------------------------------


@dataclass(frozen=True)
class MeasurementOutcome:
    """Result of a single-qubit Pauli measurement in the graph picture.

    ``byproduct`` lists the single-qubit Clifford factors ``(gate, qubit)``
    of the correction unitary, with qubits in residual-graph ids. Gate names:
    ``Z``; ``SQRT_Z`` = exp(-i pi/4 Z); ``SQRT_Z_DAG`` = exp(+i pi/4 Z);
    ``SQRT_Y`` = exp(-i pi/4 Y); ``SQRT_Y_DAG`` = exp(+i pi/4 Y).
    """

    basis: str
    sign: int
    measured_vertex: int
    pivot_partner: int | None
    residual_graph: Graph
    vertex_map: dict[int, int]
    byproduct: tuple[tuple[str, int], ...]


def measure_pauli(
    g: Graph,
    v: int,
    basis: str,
    sign: int = 1,
    partner: int | None = None,
    permissive: bool = False,
) -> MeasurementOutcome:
    """Graph rule for measuring qubit ``v`` of ``|g>`` in ``basis`` with outcome ``sign``.

    For the X basis the pivot partner defaults to the smallest neighbour of
    ``v``. An X measurement of an isolated vertex raises unless
    ``permissive`` is set, in which case it is handled like a Z measurement.
    """
    _check_vertex(g, v)
    basis = basis.upper()
    if basis not in ("X", "Y", "Z"):
        raise InvalidInputError(f"basis must be X, Y or Z, got {basis!r}")
    if sign not in (1, -1):
        raise InvalidInputError(f"sign must be +1 or -1, got {sign!r}")
    nv = g.rows[v]
    if basis == "X" and nv == 0:
        if not permissive:
            raise PreconditionError(f"X measurement of isolated vertex {v}")
        basis = "Z"

    if basis == "Z":
        residual, vmap = delete_vertex(g, v)
        factors = [] if sign == 1 else [("Z", u) for u in iter_bits(nv)]
        partner = None
    elif basis == "Y":
        residual, vmap = delete_vertex(local_complement(g, v), v)
        gate = "SQRT_Z" if sign == 1 else "SQRT_Z_DAG"
        factors = [(gate, u) for u in iter_bits(nv)]
        partner = None
    else:
        if partner is None:
            partner = (nv & -nv).bit_length() - 1
        elif not nv >> partner & 1:
            raise PreconditionError(f"pivot partner {partner} is not a neighbour of {v}")
        nw = g.rows[partner]
        residual, vmap = delete_vertex(edge_pivot(g, partner, v), v)
        if sign == 1:
            zs = nv & ~nw & ~(1 << partner)
            factors = [("SQRT_Y_DAG", partner)] + [("Z", u) for u in iter_bits(zs)]
        else:
            zs = nw & ~nv & ~(1 << v)
            factors = [("SQRT_Y", partner)] + [("Z", u) for u in iter_bits(zs)]
    byproduct = tuple((name, vmap[q]) for name, q in factors)
    return MeasurementOutcome(basis, sign, v, partner, residual, vmap, byproduct)


# -- statistics -------------------------------------------------------------


class GraphStats(NamedTuple):
    edge_count: int
    max_degree: int
    degree_list: list[int]
    is_connected: bool


def graph_stats(g: Graph) -> GraphStats:
    degs = g.degrees()
    return GraphStats(sum(degs) // 2, max(degs, default=0), degs, g.is_connected())


# -- file formats -----------------------------------------------------------


def read_graph_json(path) -> Graph:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{path}: {exc}") from exc
    return Graph.from_dict(data)


def write_graph_json(g: Graph, path, indent: int | None = None) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(g.to_json(indent=indent))
        fh.write("\n")


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise InvalidInputError("edge list must start with a 'n m' header line")
    n, m = (int(x) for x in lines[0])
    body = lines[1:]
    if len(body) != m:
        raise InvalidInputError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for parts in body:
        if len(parts) != 2:
            raise InvalidInputError(f"bad edge line {' '.join(parts)!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.num_vertices} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_edge_list(g))
