"""Local-complementation orbits: brute-force oracle and closed forms.

The oracle enumerates the labeled orbit of a graph by breadth-first search
over single-vertex local complements. Two graphs on the same vertex set are
the same orbit member only if their adjacency relations coincide exactly;
no isomorphism reduction is applied.

The closed forms cover complete bipartite, complete multipartite and
clique-star graphs. The minimum-edge expressions come in three cases whose
applicability conditions are not known here, so :func:`select_min_edges`
resolves the case from reference data or from the oracle, and otherwise
reports all three values.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import prod

from splitfuse.exceptions import InvalidInputError, PreconditionError, ResourceLimitError
from splitfuse.families import FamilySpec, complete_bipartite, complete_multipartite, clique_star
from splitfuse.graph import Graph, LcSequence, _lc_rows, record_sequence
from splitfuse.split import COMPLETE, STAR, decompose
from splitfuse.tables import MULTIPARTITE_TABLE

MULTIPARTITE = "multipartite"
CLIQUE_STAR = "clique_star"

_FAMILY_ALIASES = {
    "multipartite": MULTIPARTITE,
    "complete_multipartite": MULTIPARTITE,
    "km": MULTIPARTITE,
    "clique_star": CLIQUE_STAR,
    "cliquestar": CLIQUE_STAR,
    "cs": CLIQUE_STAR,
}


# -- BFS oracle ---------------------------------------------------------------


def _bfs(g: Graph, max_size: int, track_parents: bool):
    start = g.rows
    n = len(start)
    parent = {start: None}
    queue = deque([start])
    while queue:
        rows = queue.popleft()
        for v in range(n):
            if not rows[v]:
                continue
            nxt = list(rows)
            _lc_rows(nxt, v)
            nxt = tuple(nxt)
            if nxt in parent:
                continue
            if len(parent) >= max_size:
                raise ResourceLimitError(
                    f"LC orbit exceeds max_size={max_size}",
                    partial=[Graph._trusted(r) for r in parent],
                )
            parent[nxt] = (rows, v) if track_parents else None
            queue.append(nxt)
    return parent


def enumerate_orbit(g: Graph, max_size: int = 100_000) -> set[Graph]:
    """All labeled graphs reachable from ``g`` by local complements.

    Parameters
    ----------
    g : Graph
        Start graph.
    max_size : int
        Enumeration budget. Exceeding it raises :class:`ResourceLimitError`
        whose ``partial`` attribute lists the members found so far.

    Returns
    -------
    set of Graph
    """
    if max_size < 1:
        raise InvalidInputError(f"max_size must be positive, got {max_size}")
    return {Graph._trusted(r) for r in _bfs(g, max_size, track_parents=False)}


def orbit_size(g: Graph, max_size: int = 100_000) -> int:
    return len(_bfs(g, max_size, track_parents=False))


@dataclass(frozen=True)
class OrbitReport:
    """Exact orbit statistics with witnesses.

    Ties are broken by breadth-first discovery order, so each representative
    is one of the closest minimisers to the input graph.
    """

    orbit_size: int
    min_edges: int
    min_max_degree: int
    min_edge_representative: Graph
    min_degree_representative: Graph
    min_edge_sequence: LcSequence = field(repr=False)
    min_degree_sequence: LcSequence = field(repr=False)

    @property
    def witness_sequences(self) -> tuple[LcSequence, LcSequence]:
        return (self.min_edge_sequence, self.min_degree_sequence)

    def to_dict(self) -> dict:
        return {
            "orbit_size": self.orbit_size,
            "min_edges": self.min_edges,
            "min_max_degree": self.min_max_degree,
            "min_edge_representative": self.min_edge_representative.to_dict(),
            "min_degree_representative": self.min_degree_representative.to_dict(),
            "min_edge_sequence": self.min_edge_sequence.vertices(),
            "min_degree_sequence": self.min_degree_sequence.vertices(),
        }


def _path_to(parent: dict, rows) -> list[int]:
    path = []
    while parent[rows] is not None:
        rows, v = parent[rows]
        path.append(v)
    return path[::-1]


def oracle_min_stats(g: Graph, max_size: int = 100_000) -> OrbitReport:
    """Minimum edge count and minimum maximum degree over the LC orbit of ``g``."""
    parent = _bfs(g, max_size, track_parents=True)
    best_e = best_d = None
    for rows in parent:  # insertion order is BFS order
        e = sum(r.bit_count() for r in rows) // 2
        d = max((r.bit_count() for r in rows), default=0)
        if best_e is None or e < best_e[0]:
            best_e = (e, rows)
        if best_d is None or d < best_d[0]:
            best_d = (d, rows)
    rep_e, seq_e = record_sequence(g, _path_to(parent, best_e[1]))
    rep_d, seq_d = record_sequence(g, _path_to(parent, best_d[1]))
    return OrbitReport(len(parent), best_e[0], best_d[0], rep_e, rep_d, seq_e, seq_d)


# -- closed forms ---------------------------------------------------------------


@dataclass(frozen=True)
class FormulaInputs:
    """Part sizes with the derived smallest, second-smallest and largest part."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if len(parts) < 2:
            raise InvalidInputError(f"closed forms need at least two parts, got {parts}")
        if min(parts) < 2:
            raise InvalidInputError(f"closed forms need every part >= 2, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def n_j(self) -> int:
        return min(self.parts)

    @property
    def n_t(self) -> int:
        return sorted(self.parts)[1]

    @property
    def n_l(self) -> int:
        return max(self.parts)


def _inputs(family: str, parts) -> FormulaInputs:
    x = FormulaInputs(tuple(parts))
    if family == CLIQUE_STAR and x.k < 3:
        # two cliques joined completely form K_n, outside the closed forms
        raise InvalidInputError(f"clique-star closed forms need at least three cliques, got {x.parts}")
    return x


def _family(name: str) -> str:
    try:
        return _FAMILY_ALIASES[name.lower()]
    except (KeyError, AttributeError):
        raise InvalidInputError(f"family must be multipartite or clique_star, got {name!r}") from None


def orbit_size_bipartite(n: int, m: int) -> int:
    if n < 2 or m < 2:
        raise InvalidInputError(f"both parts must be >= 2, got ({n}, {m})")
    return n * m + n + m + 3


def _parity_subset_sum(parts: tuple[int, ...], parity: int) -> int:
    # sum over subsets S with |S| = parity (mod 2) of prod_{i in S} n_i
    plus = prod(1 + p for p in parts)
    minus = prod(1 - p for p in parts)
    return (plus + minus) // 2 if parity == 0 else (plus - minus) // 2


def _orbit_closed_form(parts, parity: int) -> int:
    x = _inputs(MULTIPARTITE if parity == 0 else CLIQUE_STAR, parts)
    tail = sum(prod(p + 1 for i, p in enumerate(x.parts) if i != j) for j in range(x.k))
    return _parity_subset_sum(x.parts, parity) + tail


def orbit_size_multipartite(parts) -> int:
    """Orbit size of ``K_{n_1..n_k}``: even-size subset products plus the leave-one-out terms."""
    return _orbit_closed_form(parts, 0)


def orbit_size_cliquestar(parts) -> int:
    """Orbit size of a clique-star: odd-size subset products plus the leave-one-out terms."""
    return _orbit_closed_form(parts, 1)


def orbit_size_formula(family: str, parts) -> int:
    family = _family(family)
    return orbit_size_multipartite(parts) if family == MULTIPARTITE else orbit_size_cliquestar(parts)


def _edge_expressions(x: FormulaInputs) -> tuple[int, int, int]:
    k, nj = x.k, x.n_j
    rest = x.n - k - (nj - 1)  # sum over i != j of (n_i - 1)
    a = k * (k - 1) // 2 + (x.n - k)
    b = nj * (k - 1) + nj * (nj - 1) // 2 + rest
    c = nj * (k - 1) + rest
    return a, b, c


def min_edges_cases(family: str, parts) -> tuple[int, int, int]:
    """Values of minimum-edge Cases 1, 2, 3 for the family, in case order."""
    family = _family(family)
    a, b, c = _edge_expressions(_inputs(family, parts))
    return (a, b, c) if family == MULTIPARTITE else (c, a, b)


def min_edges_formula(family: str, parts, case: int) -> int:
    if case not in (1, 2, 3):
        raise InvalidInputError(f"case must be 1, 2 or 3, got {case!r}")
    return min_edges_cases(family, parts)[case - 1]


def _degree_expressions(x: FormulaInputs, even_branch: bool) -> tuple[int, int, int]:
    k, nj, nt, nl = x.k, x.n_j, x.n_t, x.n_l
    if even_branch:
        return (nl + k - 2, max(k - 1 + nt, nl - 1 + nj), max(nj + k - 2, nl - 1 + nj))
    return (nl + nj + k - 3, max(k - 1, nl - 1 + nj), max(nj + nt + k - 3, nl - 1 + nj))


def min_degree_cases(family: str, parts) -> tuple[int, int, int]:
    """Per-case maximum-degree values on the branch selected by the parity of ``k``."""
    family = _family(family)
    x = _inputs(family, parts)
    even = x.k % 2 == 0
    if family == CLIQUE_STAR:
        even = not even
    return _degree_expressions(x, even)


def min_degree_formula(family: str, parts) -> int:
    """Minimum over the three cases of the parity branch."""
    return min(min_degree_cases(family, parts))


@dataclass(frozen=True)
class CaseSelection:
    """Outcome of resolving which minimum-edge case applies.

    ``source`` is ``"table"`` (reference data), ``"oracle"`` (BFS minimum) or
    ``"unknown"``; in the last case ``value`` and ``case`` are ``None`` and
    only ``case_values`` is meaningful.
    """

    value: int | None
    case: int | None
    source: str
    case_values: tuple[int, int, int]

    @property
    def predicate_unknown(self) -> bool:
        return self.source == "unknown"


def family_graph(family: str, parts) -> Graph:
    parts = tuple(parts)
    return complete_multipartite(parts) if _family(family) == MULTIPARTITE else clique_star(parts)


def select_min_edges(family: str, parts, oracle_max_size: int = 20_000) -> CaseSelection:
    """Resolve the minimum-edge value from reference data, else the orbit oracle.

    Tabulated instances use the reference value. Otherwise the oracle is run
    with the given budget. When the orbit is larger than the budget (or the
    budget is 0) the case is reported as unknown.
    """
    family = _family(family)
    parts = tuple(int(p) for p in parts)
    values = min_edges_cases(family, parts)
    key = tuple(sorted(parts, reverse=True))
    value, source = None, "unknown"
    if key in MULTIPARTITE_TABLE:
        row = MULTIPARTITE_TABLE[key]
        value, source = (row[1] if family == MULTIPARTITE else row[4]), "table"
    elif oracle_max_size > 0:
        try:
            value = oracle_min_stats(family_graph(family, parts), oracle_max_size).min_edges
            source = "oracle"
        except ResourceLimitError:
            pass
    case = values.index(value) + 1 if value in values else None
    return CaseSelection(value, case, source, values)


# -- complete bipartite symmetry classes -------------------------------------------

STAR_CENTER = "star_center"
STAR_SPOKE = "star_spoke"
COMPLETE_CLASS = "complete"
SYMMETRY_KINDS = (STAR_CENTER, STAR_SPOKE, COMPLETE_CLASS)


@dataclass(frozen=True)
class BipartiteSymmetryClass:
    """Quotient types of a two-quotient decomposition.

    ``q1_sym`` describes the quotient holding vertex 0. Each entry is
    ``star_center`` (star centred on the split node), ``star_spoke`` (star
    centred on a leaf) or ``complete``.
    """

    q1_sym: str
    q2_sym: str

    def __post_init__(self):
        for s in (self.q1_sym, self.q2_sym):
            if s not in SYMMETRY_KINDS:
                raise InvalidInputError(f"unknown symmetry kind {s!r}")


def bipartite_classify(g: Graph) -> BipartiteSymmetryClass:
    q = decompose(g)
    if q.k != 2:
        raise PreconditionError(f"expected a two-quotient decomposition, got {q.k} quotients")
    syms = []
    for quot in q.quotients:
        if quot.kind == COMPLETE:
            syms.append(COMPLETE_CLASS)
        elif quot.kind == STAR:
            syms.append(STAR_SPOKE if quot.nodes[quot.center].is_leaf else STAR_CENTER)
        else:
            raise PreconditionError("a quotient is prime")
    return BipartiteSymmetryClass(*syms)


def _transform_vertices(n: int, target: BipartiteSymmetryClass) -> list[int]:
    a, b = 0, n  # smallest vertex of each part
    table = {
        (STAR_CENTER, STAR_CENTER): [],
        (STAR_CENTER, COMPLETE_CLASS): [a],
        (COMPLETE_CLASS, STAR_CENTER): [b],
        (STAR_SPOKE, COMPLETE_CLASS): [b, a],
        (COMPLETE_CLASS, STAR_SPOKE): [a, b],
        (STAR_SPOKE, STAR_SPOKE): [a, b, a],
    }
    try:
        return table[(target.q1_sym, target.q2_sym)]
    except KeyError:
        raise PreconditionError(f"{target} is not an admissible bipartite class") from None


def bipartite_transform(n: int, m: int, target: BipartiteSymmetryClass) -> LcSequence:
    """Local complements taking ``K_{n,m}`` into the symmetry class ``target``.

    The sequence is listed in application order and uses vertex ``0`` for
    the first part and vertex ``n`` for the second.
    """
    if n < 2 or m < 2:
        raise InvalidInputError(f"both parts must be >= 2, got ({n}, {m})")
    return record_sequence(complete_bipartite(n, m), _transform_vertices(n, target))[1]


def multileaf_repeater_equivalent(parts) -> FamilySpec:
    """Family LC-equivalent (up to relabeling) to the multi-leaf repeater on ``parts``."""
    parts = tuple(int(p) for p in parts)
    if len(parts) < 2:
        raise InvalidInputError(f"need at least two parts, got {parts}")
    if len(parts) % 2 == 0:
        return FamilySpec("complete_multipartite", parts)
    return FamilySpec("clique_star", parts, r=1)


def closed_under_lc(members: set[Graph]) -> bool:
    """True if every local complement of every member is again a member."""
    keys = {m.rows for m in members}
    for rows in keys:
        for v in range(len(rows)):
            nxt = list(rows)
            _lc_rows(nxt, v)
            if tuple(nxt) not in keys:
                return False
    return True


__all__ = [
    "BipartiteSymmetryClass",
    "CaseSelection",
    "FormulaInputs",
    "OrbitReport",
    "bipartite_classify",
    "bipartite_transform",
    "closed_under_lc",
    "enumerate_orbit",
    "family_graph",
    "min_degree_cases",
    "min_degree_formula",
    "min_edges_cases",
    "min_edges_formula",
    "multileaf_repeater_equivalent",
    "oracle_min_stats",
    "orbit_size",
    "orbit_size_bipartite",
    "orbit_size_cliquestar",
    "orbit_size_formula",
    "orbit_size_multipartite",
    "select_min_edges",
]
