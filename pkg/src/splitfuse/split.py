"""Split decomposition and the quotient-augmented strong split tree (QASST).

The decomposition is computed by repeatedly cutting pieces along any
nontrivial split until every piece is prime or degenerate (complete or a
star), then merging adjacent degenerate pieces that combine into a
degenerate piece (clique-clique, or star centre-to-spoke). By Cunningham's
uniqueness theorem the result is the canonical decomposition whose tree
edges are exactly the strong splits.

Split finding uses a closure argument. Fix a crossing edge ``(a, b)`` with
``a`` on side ``A``. Then every ``y`` in ``A`` adjacent to ``b`` must have the
same outside neighbourhood as ``a``, and every other ``y`` in ``A`` none at
all. These are monotone "if ``y`` is in ``A`` so is ``z``" rules, so the least
closed set containing ``{a, u}`` is the smallest candidate side; it is a
valid split iff it avoids ``b`` and leaves at least two vertices outside.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from splitfuse.exceptions import InvalidInputError, PreconditionError, ResourceLimitError
from splitfuse.graph import Graph, iter_bits

__all__ = [
    "QuotientNode",
    "Quotient",
    "Qasst",
    "classify",
    "find_split",
    "find_splits_bruteforce",
    "strong_splits_bruteforce",
    "decompose",
    "reconstruct",
    "is_distance_hereditary",
    "quotient_substitute",
]

PRIME, STAR, COMPLETE = "prime", "star", "complete"


def classify(g: Graph) -> tuple[str, int | None]:
    """Return ``(class, centre)``; ``centre`` is set only for stars.

    Graphs on at most two vertices count as complete.
    """
    n = g.num_vertices
    degs = g.degrees()
    if all(d == n - 1 for d in degs):
        return COMPLETE, None
    if n >= 3:
        hubs = [v for v, d in enumerate(degs) if d == n - 1]
        if len(hubs) == 1 and all(d == 1 for v, d in enumerate(degs) if v != hubs[0]):
            return STAR, hubs[0]
    return PRIME, None


# -- split finding ---------------------------------------------------------


def _closure(rows, a: int, b: int, seed: int) -> int | None:
    na = rows[a]
    side = seed | (1 << a)
    todo = seed & ~(1 << a)
    bbit = 1 << b
    while todo:
        low = todo & -todo
        todo ^= low
        ry = rows[low.bit_length() - 1]
        need = (ry ^ na) if ry & bbit else ry
        new = need & ~side
        if new & bbit:
            return None
        side |= new
        todo |= new
    return side


def find_split(g: Graph) -> int | None:
    """Bitset of one side of some nontrivial split of connected ``g``, or ``None``."""
    rows = g.rows
    n = len(rows)
    if n < 4:
        return None
    full = (1 << n) - 1
    for a in range(n):
        for b in iter_bits(rows[a]):
            for u in range(n):
                if u == a or u == b:
                    continue
                side = _closure(rows, a, b, 1 << u)
                if side is not None and (full & ~side).bit_count() >= 2:
                    return side
    return None


def _is_split(rows, side: int, full: int) -> bool:
    other = full & ~side
    frontier = None
    for b in iter_bits(other):
        t = rows[b] & side
        if t:
            if frontier is None:
                frontier = t
            elif t != frontier:
                return False
    return True


def find_splits_bruteforce(g: Graph, max_vertices: int = 16) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every nontrivial split by exhaustive bipartition scan (oracle only).

    Each split is reported once as ``(A, B)`` with vertex 0 in ``A``.
    """
    n = g.num_vertices
    if n > max_vertices:
        raise ResourceLimitError(f"brute-force split scan limited to {max_vertices} vertices, got {n}")
    rows = g.rows
    full = (1 << n) - 1
    out = []
    if n < 4:
        return out
    for mask in range(1 << (n - 1)):
        side = (mask << 1) | 1
        size = side.bit_count()
        if size < 2 or n - size < 2:
            continue
        if _is_split(rows, side, full):
            out.append((tuple(iter_bits(side)), tuple(iter_bits(full & ~side))))
    return out


def _crosses(s, t) -> bool:
    a1, b1 = set(s[0]), set(s[1])
    a2, b2 = set(t[0]), set(t[1])
    return bool(a1 & a2 and a1 & b2 and b1 & a2 and b1 & b2)


def strong_splits_bruteforce(g: Graph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Nontrivial splits that cross no other split (oracle only)."""
    splits = find_splits_bruteforce(g)
    return [s for s in splits if not any(_crosses(s, t) for t in splits if t is not s)]


# -- QASST data types ----------------------------------------------------


@dataclass(frozen=True)
class QuotientNode:
    """A leaf node carries the original ``vertex``; a split node its tree ``partner``."""

    role: str
    vertex: int | None = None
    partner: tuple[int, int] | None = None

    @property
    def is_leaf(self) -> bool:
        return self.role == "leaf"


@dataclass(frozen=True)
class Quotient:
    id: int
    graph: Graph
    nodes: tuple[QuotientNode, ...]
    kind: str
    center: int | None = None

    @property
    def num_leaves(self) -> int:
        return sum(1 for x in self.nodes if x.is_leaf)

    @property
    def num_split_nodes(self) -> int:
        return sum(1 for x in self.nodes if not x.is_leaf)

    def leaf_vertices(self) -> list[int]:
        return [x.vertex for x in self.nodes if x.is_leaf]

    def split_indices(self) -> list[int]:
        return [i for i, x in enumerate(self.nodes) if not x.is_leaf]


@dataclass(frozen=True)
class Qasst:
    """Quotient graphs plus the tree of paired split nodes joining them."""

    quotients: tuple[Quotient, ...]
    tree_edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    source_vertex_count: int

    @property
    def k(self) -> int:
        return len(self.quotients)

    def has_prime(self) -> bool:
        return any(q.kind == PRIME for q in self.quotients)

    def leaf_location(self) -> dict[int, tuple[int, int]]:
        """Original vertex -> (quotient id, node index)."""
        out = {}
        for q in self.quotients:
            for i, node in enumerate(q.nodes):
                if node.is_leaf:
                    out[node.vertex] = (q.id, i)
        return out

    def validate(self) -> None:
        """Raise :class:`PreconditionError` if a structural invariant fails."""
        k = len(self.quotients)
        for i, q in enumerate(self.quotients):
            if q.id != i:
                raise PreconditionError(f"quotient at position {i} has id {q.id}")
            if q.graph.num_vertices != len(q.nodes):
                raise PreconditionError(f"quotient {i}: node count does not match its graph")
        if len(self.tree_edges) != k - 1:
            raise PreconditionError(f"{len(self.tree_edges)} tree edges for {k} quotients")
        seen = set()
        parent = list(range(k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (qa, ia), (qb, ib) in self.tree_edges:
            for q, i in ((qa, ia), (qb, ib)):
                if not (0 <= q < k and 0 <= i < len(self.quotients[q].nodes)):
                    raise PreconditionError(f"tree edge endpoint ({q}, {i}) out of range")
                if self.quotients[q].nodes[i].is_leaf:
                    raise PreconditionError(f"tree edge endpoint ({q}, {i}) is a leaf node")
                if (q, i) in seen:
                    raise PreconditionError(f"split node ({q}, {i}) used by two tree edges")
                seen.add((q, i))
            if self.quotients[qa].nodes[ia].partner != (qb, ib) or self.quotients[qb].nodes[ib].partner != (qa, ia):
                raise PreconditionError(f"partners of tree edge ({qa},{ia})-({qb},{ib}) disagree")
            ra, rb = find(qa), find(qb)
            if ra == rb:
                raise PreconditionError("tree edges contain a cycle")
            parent[ra] = rb
        split_total = sum(q.num_split_nodes for q in self.quotients)
        if split_total != len(seen):
            raise PreconditionError("some split node is not on a tree edge")
        leaves = sorted(v for q in self.quotients for v in q.leaf_vertices())
        if leaves != list(range(self.source_vertex_count)):
            raise PreconditionError("leaf nodes do not biject onto the source vertices")

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        quotients = []
        for q in self.quotients:
            nodes = [{"role": "leaf", "v": x.vertex} if x.is_leaf else {"role": "split"} for x in q.nodes]
            entry = {"id": q.id, "class": q.kind, "nodes": nodes, "edges": [list(e) for e in q.graph.edges()]}
            if q.center is not None:
                entry["center"] = q.center
            quotients.append(entry)
        tree = [[list(a), list(b)] for a, b in self.tree_edges]
        return {"quotients": quotients, "tree": tree}

    @classmethod
    def from_dict(cls, data: dict) -> "Qasst":
        """Parse the JSON layout of :meth:`to_dict`; raise :class:`InvalidInputError` if malformed."""
        try:
            q = cls._parse(data)
            q.validate()
        except InvalidInputError:
            raise
        except (KeyError, TypeError, ValueError, IndexError, PreconditionError) as exc:
            raise InvalidInputError(f"malformed QASST JSON: {exc}") from exc
        return q

    @classmethod
    def _parse(cls, data: dict) -> "Qasst":
        raw = data["quotients"]
        tree = [((int(a[0]), int(a[1])), (int(b[0]), int(b[1]))) for a, b in data["tree"]]
        partner = {}
        for a, b in tree:
            partner[a] = b
            partner[b] = a
        quotients = []
        n = 0
        for pos, entry in enumerate(raw):
            nodes = []
            for i, node in enumerate(entry["nodes"]):
                if node["role"] == "leaf":
                    nodes.append(QuotientNode("leaf", vertex=int(node["v"])))
                    n += 1
                elif node["role"] == "split":
                    nodes.append(QuotientNode("split", partner=partner.get((pos, i))))
                else:
                    raise InvalidInputError(f"unknown node role {node['role']!r}")
            g = Graph(len(nodes), entry["edges"])
            kind, centre = classify(g)
            quotients.append(Quotient(int(entry.get("id", pos)), g, tuple(nodes), kind, centre))
        return cls(tuple(quotients), tuple(tree), n)


# -- decomposition ---------------------------------------------------------


class _Piece:
    __slots__ = ("labels", "rows")

    def __init__(self, labels, rows):
        self.labels = labels
        self.rows = rows

    def graph(self) -> Graph:
        return Graph._trusted(tuple(self.rows))


def _sub_piece(piece: _Piece, side: int, marker: int) -> _Piece:
    """Piece induced on ``side`` plus a marker node joined to the side's frontier."""
    keep = list(iter_bits(side))
    pos = {v: i for i, v in enumerate(keep)}
    m = len(keep)
    outside = ~side
    rows = []
    frontier = 0
    for v in keep:
        r = 0
        for w in iter_bits(piece.rows[v] & side):
            r |= 1 << pos[w]
        if piece.rows[v] & outside:
            r |= 1 << m
            frontier |= 1 << pos[v]
        rows.append(r)
    rows.append(frontier)
    return _Piece([piece.labels[v] for v in keep] + [("m", marker)], rows)


def _merge(p: _Piece, ip: int, q: _Piece, iq: int) -> _Piece:
    """Undo a split: join the neighbours of marker ``ip`` in ``p`` to those of ``iq`` in ``q``."""
    keep_p = [i for i in range(len(p.labels)) if i != ip]
    keep_q = [i for i in range(len(q.labels)) if i != iq]
    pos_p = {v: i for i, v in enumerate(keep_p)}
    off = len(keep_p)
    pos_q = {v: off + i for i, v in enumerate(keep_q)}
    rows = [0] * (len(keep_p) + len(keep_q))
    for v in keep_p:
        for w in iter_bits(p.rows[v]):
            if w != ip:
                rows[pos_p[v]] |= 1 << pos_p[w]
    for v in keep_q:
        for w in iter_bits(q.rows[v]):
            if w != iq:
                rows[pos_q[v]] |= 1 << pos_q[w]
    np_ = [pos_p[w] for w in iter_bits(p.rows[ip])]
    nq = [pos_q[w] for w in iter_bits(q.rows[iq])]
    for x in np_:
        for y in nq:
            rows[x] |= 1 << y
            rows[y] |= 1 << x
    labels = [p.labels[i] for i in keep_p] + [q.labels[i] for i in keep_q]
    return _Piece(labels, rows)


def _mergeable(p: _Piece, ip: int, q: _Piece, iq: int) -> bool:
    kp, cp = classify(p.graph())
    kq, cq = classify(q.graph())
    if kp == COMPLETE and kq == COMPLETE:
        return True
    if kp == STAR and kq == STAR:
        return (cp == ip) != (cq == iq)
    return False


def _raw_pieces(g: Graph) -> list[_Piece]:
    """Split recursively until every piece is prime or degenerate."""
    start = _Piece([("v", v) for v in range(g.num_vertices)], list(g.rows))
    todo = [start]
    done = []
    marker = 0
    while todo:
        piece = todo.pop()
        pg = piece.graph()
        if classify(pg)[0] != PRIME:
            done.append(piece)
            continue
        side = find_split(pg)
        if side is None:
            done.append(piece)
            continue
        full = (1 << len(piece.rows)) - 1
        todo.append(_sub_piece(piece, full & ~side, marker))
        todo.append(_sub_piece(piece, side, marker))
        marker += 1
    return done


def _merge_degenerate(pieces: list[_Piece]) -> list[_Piece]:
    pieces = list(pieces)
    changed = True
    while changed:
        changed = False
        where = {}
        for pi, piece in enumerate(pieces):
            for i, lab in enumerate(piece.labels):
                if lab[0] == "m":
                    where.setdefault(lab[1], []).append((pi, i))
        for ends in where.values():
            (pa, ia), (pb, ib) = ends
            if _mergeable(pieces[pa], ia, pieces[pb], ib):
                merged = _merge(pieces[pa], ia, pieces[pb], ib)
                pieces = [p for j, p in enumerate(pieces) if j not in (pa, pb)] + [merged]
                changed = True
                break
    return pieces


def decompose(g: Graph) -> Qasst:
    """Canonical split decomposition of a connected graph as a :class:`Qasst`.

    Quotients are numbered in depth-first order from the quotient holding
    vertex 0. Inside a quotient, leaf nodes come first by vertex id, then split
    nodes ordered by the smallest original vertex on their far side.
    """
    n = g.num_vertices
    if n == 0:
        raise InvalidInputError("cannot decompose the empty graph")
    if not g.is_connected():
        raise PreconditionError("split decomposition needs a connected graph")
    pieces = _merge_degenerate(_raw_pieces(g))

    ends: dict[int, list[tuple[int, int]]] = {}
    for pi, piece in enumerate(pieces):
        for i, lab in enumerate(piece.labels):
            if lab[0] == "m":
                ends.setdefault(lab[1], []).append((pi, i))
    other_end = {}
    for a, b in ends.values():
        other_end[a] = b
        other_end[b] = a

    far_min: dict[tuple[int, int], int] = {}

    def far(pi: int, i: int) -> int:
        # smallest leaf reachable through marker (pi, i)
        key = (pi, i)
        if key not in far_min:
            qj, qi = other_end[key]
            best = n
            for j, lab in enumerate(pieces[qj].labels):
                if j == qi:
                    continue
                best = min(best, lab[1] if lab[0] == "v" else far(qj, j))
            far_min[key] = best
        return far_min[key]

    def node_order(pi: int) -> list[int]:
        labels = pieces[pi].labels
        leaves = sorted((lab[1], i) for i, lab in enumerate(labels) if lab[0] == "v")
        splits = sorted((far(pi, i), i) for i, lab in enumerate(labels) if lab[0] == "m")
        return [i for _, i in leaves] + [i for _, i in splits]

    root = next(pi for pi, p in enumerate(pieces) if ("v", 0) in p.labels)
    orders = {root: node_order(root)}
    visit = []
    edges = []
    stack = [(root, None)]
    while stack:
        pi, came_from = stack.pop()
        visit.append(pi)
        kids = []
        for i in orders[pi]:
            if pieces[pi].labels[i][0] == "m" and (pi, i) != came_from:
                kids.append(((pi, i), other_end[(pi, i)]))
        for a, b in kids:
            edges.append((a, b))
            orders[b[0]] = node_order(b[0])
        for _, b in reversed(kids):
            stack.append((b[0], b))
    qid = {pi: k for k, pi in enumerate(visit)}

    index = {pi: {old: new for new, old in enumerate(orders[pi])} for pi in visit}
    partner = {}
    tree = []
    for (pa, ia), (pb, ib) in edges:
        a = (qid[pa], index[pa][ia])
        b = (qid[pb], index[pb][ib])
        partner[a] = b
        partner[b] = a
        tree.append((a, b))
    tree.sort()

    quotients = []
    for pi in visit:
        piece = pieces[pi]
        order = orders[pi]
        rows = []
        pos = index[pi]
        for old in order:
            r = 0
            for w in iter_bits(piece.rows[old]):
                r |= 1 << pos[w]
            rows.append(r)
        qg = Graph._trusted(tuple(rows))
        nodes = []
        for new, old in enumerate(order):
            lab = piece.labels[old]
            if lab[0] == "v":
                nodes.append(QuotientNode("leaf", vertex=lab[1]))
            else:
                nodes.append(QuotientNode("split", partner=partner[(qid[pi], new)]))
        kind, centre = classify(qg)
        quotients.append(Quotient(qid[pi], qg, tuple(nodes), kind, centre))
    return Qasst(tuple(quotients), tuple(tree), n)


def reconstruct(q: Qasst) -> Graph:
    """Rebuild the source graph: leaves are adjacent iff joined by an alternating path.

    Two leaves are adjacent when the quotient edges along their tree path
    chain through split-node pairs, i.e. each split node used is adjacent to
    the next one within its quotient.
    """
    q.validate()
    reach: dict[tuple[int, int], int] = {}

    def far_leaves(qi: int, i: int) -> int:
        key = (qi, i)
        if key not in reach:
            pj, j = q.quotients[qi].nodes[i].partner
            other = q.quotients[pj]
            acc = 0
            for w in iter_bits(other.graph.rows[j]):
                node = other.nodes[w]
                acc |= (1 << node.vertex) if node.is_leaf else far_leaves(pj, w)
            reach[key] = acc
        return reach[key]

    rows = [0] * q.source_vertex_count
    for quo in q.quotients:
        sets = []
        for i, node in enumerate(quo.nodes):
            sets.append((1 << node.vertex) if node.is_leaf else far_leaves(quo.id, i))
        for x, y in quo.graph.edges():
            for u in iter_bits(sets[x]):
                rows[u] |= sets[y]
            for v in iter_bits(sets[y]):
                rows[v] |= sets[x]
    return Graph.from_rows(rows)


def is_distance_hereditary(g: Graph) -> bool:
    """True iff the split decomposition of connected ``g`` has no prime quotient."""
    return not decompose(g).has_prime()


def quotient_substitute(q: Qasst, quotient_id: int, replacement: Graph) -> Qasst:
    """Swap the internal graph of one quotient, keeping node roles and the tree."""
    if not 0 <= quotient_id < q.k:
        raise InvalidInputError(f"no quotient with id {quotient_id}")
    old = q.quotients[quotient_id]
    if replacement.num_vertices != len(old.nodes):
        raise InvalidInputError(
            f"replacement has {replacement.num_vertices} nodes, quotient {quotient_id} has {len(old.nodes)}"
        )
    kind, centre = classify(replacement)
    new = replace(old, graph=replacement, kind=kind, center=centre)
    quotients = list(q.quotients)
    quotients[quotient_id] = new
    return replace(q, quotients=tuple(quotients))


def tree_splits(q: Qasst) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """The leaf bipartition induced by each tree edge, as ``(A, B)`` with 0 in ``A``."""
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(q.k)}
    for (qa, _), (qb, _) in q.tree_edges:
        adj[qa].append((qb, qa))
        adj[qb].append((qa, qb))
    out = []
    full = set(range(q.source_vertex_count))
    for (qa, _), (qb, _) in q.tree_edges:
        side = set()
        stack = [qa]
        seen = {qa}
        while stack:
            x = stack.pop()
            side.update(q.quotients[x].leaf_vertices())
            for y, _ in adj[x]:
                if y not in seen and {x, y} != {qa, qb}:
                    seen.add(y)
                    stack.append(y)
        if 0 not in side:
            side = full - side
        out.append((tuple(sorted(side)), tuple(sorted(full - side))))
    return out
