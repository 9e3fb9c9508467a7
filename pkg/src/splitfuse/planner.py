"""Preparation plans: naive CZ schedules, split-fuse plans and resource accounting.

A plan acts on ``qubits`` plan qubits, every one of which starts in
``|+>`` (initialisation is implicit and occupies no layer). Each layer holds
operations that run in one time step:

* ``cz`` on two qubits toggles the edge between them;
* ``lc`` on one qubit performs the local complement recorded in
  ``lc_steps[ref]`` (the vertex and its neighbourhood at that moment). It is
  realised by single-qubit Cliffords only, so several ``lc`` ops may share a
  layer and are applied in listed order;
* ``fuse`` on two qubits is a Type-II fusion: their neighbourhoods are
  joined completely and both qubits are consumed.

Fusions count as one CZ each. A qubit takes part in at most one two-qubit
operation per layer. After the last layer the surviving qubits carry the
target vertices named by ``qubit_map``; auxiliary qubits map to ``None``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from splitfuse.coloring import edge_color
from splitfuse.exceptions import InvalidInputError, PreconditionError
from splitfuse.families import FamilySpec
from splitfuse.graph import Graph, _lc_rows, iter_bits
from splitfuse.heuristic import triangle_greedy
from splitfuse.orbit import min_degree_formula, select_min_edges
from splitfuse.split import COMPLETE, PRIME, STAR, Qasst, decompose

STRATEGIES = ("naive", "heuristic", "splitfuse", "generalized", "generalized+heuristic")


@dataclass(frozen=True)
class PlanOp:
    kind: str
    qubits: tuple[int, ...]
    ref: int | None = None

    def __post_init__(self):
        want = {"cz": 2, "fuse": 2, "lc": 1}
        if self.kind not in want:
            raise InvalidInputError(f"unknown plan op {self.kind!r}")
        if len(self.qubits) != want[self.kind]:
            raise InvalidInputError(f"{self.kind} takes {want[self.kind]} qubit(s), got {self.qubits}")
        if self.kind == "lc" and self.ref is None:
            raise InvalidInputError("lc op needs an lc_steps reference")

    def to_dict(self) -> dict:
        out = {"op": self.kind, "q": list(self.qubits)}
        if self.ref is not None:
            out["step"] = self.ref
        return out


@dataclass(frozen=True)
class ResourceSummary:
    cz_total: int
    time_steps: int
    qubits_total: int
    qubits_aux: int

    def to_dict(self) -> dict:
        return {"cz": self.cz_total, "depth": self.time_steps, "qubits": self.qubits_total, "aux": self.qubits_aux}

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.cz_total, self.time_steps, self.qubits_total, self.qubits_aux)


@dataclass(frozen=True)
class PreparationPlan:
    """Layered operations on ``num_qubits`` qubits; see the module docstring."""

    num_qubits: int
    qubit_map: tuple[int | None, ...]
    layers: tuple[tuple[PlanOp, ...], ...]
    lc_steps: tuple[tuple[int, tuple[int, ...]], ...] = ()
    strategy: str = ""

    @property
    def summary(self) -> ResourceSummary:
        cz = sum(1 for layer in self.layers for op in layer if op.kind in ("cz", "fuse"))
        aux = sum(1 for v in self.qubit_map if v is None)
        return ResourceSummary(cz, len(self.layers), self.num_qubits, aux)

    def ops(self):
        """Yield ``(layer index, op)`` in execution order."""
        for i, layer in enumerate(self.layers):
            for op in layer:
                yield i, op

    def compressed(self) -> "PreparationPlan":
        """The same plan without empty layers."""
        layers = tuple(layer for layer in self.layers if layer)
        return PreparationPlan(self.num_qubits, self.qubit_map, layers, self.lc_steps, self.strategy)

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "qubits": self.num_qubits,
            "map": list(self.qubit_map),
            "layers": [[op.to_dict() for op in layer] for layer in self.layers],
            "lc_steps": [[v, list(nb)] for v, nb in self.lc_steps],
            "summary": self.summary.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PreparationPlan":
        try:
            layers = tuple(
                tuple(PlanOp(op["op"], tuple(int(q) for q in op["q"]), op.get("step")) for op in layer)
                for layer in data["layers"]
            )
            steps = tuple((int(v), tuple(int(u) for u in nb)) for v, nb in data.get("lc_steps", []))
            qmap = tuple(None if v is None else int(v) for v in data["map"])
            plan = cls(int(data["qubits"]), qmap, layers, steps, data.get("strategy", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed plan JSON: {exc}") from exc
        check_plan(plan)
        return plan


def check_plan(plan: PreparationPlan) -> None:
    """Raise :class:`InvalidInputError` if the plan is structurally malformed."""
    t = plan.num_qubits
    if len(plan.qubit_map) != t:
        raise InvalidInputError(f"map has {len(plan.qubit_map)} entries for {t} qubits")
    targets = [v for v in plan.qubit_map if v is not None]
    if len(set(targets)) != len(targets):
        raise InvalidInputError("two qubits map to the same target vertex")
    consumed: set[int] = set()
    for i, layer in enumerate(plan.layers):
        busy: set[int] = set()
        for op in layer:
            for q in op.qubits:
                if not 0 <= q < t:
                    raise InvalidInputError(f"layer {i}: qubit {q} out of range")
                if q in consumed:
                    raise InvalidInputError(f"layer {i}: qubit {q} used after fusion")
            if op.kind == "lc":
                if not 0 <= op.ref < len(plan.lc_steps) or plan.lc_steps[op.ref][0] != op.qubits[0]:
                    raise InvalidInputError(f"layer {i}: bad lc step reference {op.ref}")
                continue
            a, b = op.qubits
            if a == b:
                raise InvalidInputError(f"layer {i}: {op.kind} on a single qubit")
            if a in busy or b in busy:
                raise InvalidInputError(f"layer {i}: qubit used by two two-qubit ops")
            busy.update(op.qubits)
        for op in layer:
            if op.kind == "fuse":
                consumed.update(op.qubits)
    for q in consumed:
        if plan.qubit_map[q] is not None:
            raise InvalidInputError(f"fused qubit {q} is mapped to a target vertex")


def replay_graph(plan: PreparationPlan) -> Graph:
    """Graph produced by executing the plan under graph semantics.

    Surviving qubits are relabeled by ``qubit_map``. Raises
    :class:`PreconditionError` if a recorded local-complement neighbourhood
    disagrees with the replayed graph.
    """
    rows = replay_rows(plan, upto=len(plan.layers))
    return _relabel(plan, rows)


def replay_rows(plan: PreparationPlan, upto: int) -> list[int]:
    check_plan(plan)
    rows = [0] * plan.num_qubits
    for i, layer in enumerate(plan.layers[:upto]):
        for op in layer:
            _apply_op(rows, plan, op, i)
    return rows


def _apply_op(rows: list[int], plan: PreparationPlan, op: PlanOp, layer: int) -> None:
    if op.kind == "cz":
        a, b = op.qubits
        rows[a] ^= 1 << b
        rows[b] ^= 1 << a
    elif op.kind == "lc":
        v, nb = plan.lc_steps[op.ref]
        if tuple(iter_bits(rows[v])) != tuple(nb):
            raise PreconditionError(f"layer {layer}: recorded neighbourhood of qubit {v} is stale")
        _lc_rows(rows, v)
    else:
        a, b = op.qubits
        if rows[a] >> b & 1 or rows[a] & rows[b]:
            raise PreconditionError(f"layer {layer}: fusion qubits {a}, {b} are adjacent or share neighbours")
        na, nb = rows[a], rows[b]
        for u in iter_bits(na):
            rows[u] |= nb
        for w in iter_bits(nb):
            rows[w] |= na
        for x in (a, b):
            for u in iter_bits(rows[x]):
                rows[u] &= ~(1 << x)
            rows[x] = 0


def _relabel(plan: PreparationPlan, rows: list[int]) -> Graph:
    n = sum(1 for v in plan.qubit_map if v is not None)
    edges = []
    for a, r in enumerate(rows):
        for b in iter_bits(r):
            if a < b:
                va, vb = plan.qubit_map[a], plan.qubit_map[b]
                if va is None or vb is None:
                    raise PreconditionError(f"auxiliary qubit {a if va is None else b} survives with edges")
                edges.append((va, vb))
    return Graph(n, edges)


# -- plan construction ----------------------------------------------------------------


class _Builder:
    """Accumulates per-stage ops while tracking the graph for LC bookkeeping."""

    def __init__(self):
        self.qmap: list[int | None] = []
        self.prep: list[list[PlanOp]] = []
        self.convert: list[PlanOp] = []
        self.fuse: list[PlanOp] = []
        self.steps: list[tuple[int, tuple[int, ...]]] = []
        self.rows: list[int] = []

    def alloc(self, targets: list[int | None]) -> list[int]:
        base = len(self.qmap)
        self.qmap.extend(targets)
        self.rows.extend([0] * len(targets))
        return list(range(base, base + len(targets)))

    def cz(self, layer: int, a: int, b: int) -> None:
        while len(self.prep) <= layer:
            self.prep.append([])
        self.prep[layer].append(PlanOp("cz", (a, b)))
        self.rows[a] ^= 1 << b
        self.rows[b] ^= 1 << a

    def lc(self, v: int) -> None:
        self.steps.append((v, tuple(iter_bits(self.rows[v]))))
        self.convert.append(PlanOp("lc", (v,), len(self.steps) - 1))
        _lc_rows(self.rows, v)

    def fusion(self, a: int, b: int) -> None:
        self.fuse.append(PlanOp("fuse", (a, b)))

    def plan(self, strategy: str, stages: bool = True, compress: bool = False) -> PreparationPlan:
        layers = [tuple(layer) for layer in self.prep]
        if stages:
            layers += [tuple(self.convert), tuple(self.fuse)]
        elif self.convert:
            layers.append(tuple(self.convert))
        plan = PreparationPlan(len(self.qmap), tuple(self.qmap), tuple(layers), tuple(self.steps), strategy)
        return plan.compressed() if compress else plan


def _colored(b: _Builder, g: Graph, qubits: list[int]) -> None:
    for layer, cls in enumerate(edge_color(g).classes()):
        for u, v in cls:
            b.cz(layer, qubits[u], qubits[v])


def plan_naive(g: Graph) -> PreparationPlan:
    """One CZ per edge, scheduled by a proper edge coloring."""
    b = _Builder()
    _colored(b, g, b.alloc(list(range(g.num_vertices))))
    return b.plan("naive", stages=False)


def plan_heuristic(g: Graph, iterate: bool = False) -> PreparationPlan:
    """Prepare the greedy-improved graph, then undo its LC sequence in one Clifford layer."""
    return _heuristic_plan(g, iterate, "heuristic")


def _heuristic_plan(g: Graph, iterate: bool, strategy: str) -> PreparationPlan:
    b = _Builder()
    qubits = b.alloc(list(range(g.num_vertices)))
    res = triangle_greedy(g, iterate=iterate)
    _colored(b, res.improved, qubits)
    for v in reversed(res.sequence.vertices()):
        b.lc(qubits[v])
    return b.plan(strategy, stages=False)


def _add_quotients(b: _Builder, q: Qasst, prime_strategy: str) -> None:
    handles: dict[tuple[int, int], int] = {}
    pending_lc: list[int] = []
    for quot in q.quotients:
        qubits = b.alloc([node.vertex if node.is_leaf else None for node in quot.nodes])
        for i, qb in enumerate(qubits):
            handles[(quot.id, i)] = qb
        if quot.kind == PRIME:
            if prime_strategy == "heuristic":
                res = triangle_greedy(quot.graph)
                _colored(b, res.improved, qubits)
                pending_lc += [qubits[v] for v in reversed(res.sequence.vertices())]
            else:
                _colored(b, quot.graph, qubits)
            continue
        centre = quot.center if quot.kind == STAR else 0
        others = [i for i in range(len(qubits)) if i != centre]
        for layer, i in enumerate(others):
            b.cz(layer, qubits[centre], qubits[i])
        if quot.kind == COMPLETE and len(qubits) > 2:
            pending_lc.append(qubits[centre])
    for v in pending_lc:
        b.lc(v)
    for a, c in q.tree_edges:
        b.fusion(handles[a], handles[c])


def plan_split_fuse(g: Graph, compress: bool = False) -> PreparationPlan:
    """Split-fuse plan for a connected distance-hereditary graph.

    Every quotient is prepared as a star on its leaf and split nodes, stars
    centred as in the quotient and complete quotients centred on node 0.
    One layer of local Cliffords turns the latter into complete graphs and
    one layer fuses every pair of partnered split nodes. Both layers are
    kept even when empty unless ``compress`` is set.
    """
    q = decompose(g)
    if q.has_prime():
        raise PreconditionError("graph is not distance-hereditary; use plan_generalized")
    b = _Builder()
    _add_quotients(b, q, "naive")
    return b.plan("splitfuse", compress=compress)


def plan_generalized(g: Graph, prime_strategy: str = "naive", compress: bool = False) -> PreparationPlan:
    """Split-fuse plan that prepares prime quotients directly.

    Prime quotients are prepared from their own edge-colored CZ schedule
    (``"naive"``) or from the greedy-improved quotient followed by the
    inverse LC steps in the conversion layer (``"heuristic"``). A prime
    input graph gets exactly the naive (or heuristic) plan.
    """
    if prime_strategy not in ("naive", "heuristic"):
        raise InvalidInputError(f"prime_strategy must be naive or heuristic, got {prime_strategy!r}")
    name = "generalized" if prime_strategy == "naive" else "generalized+heuristic"
    q = decompose(g)
    if q.k == 1 and q.quotients[0].kind == PRIME:
        plan = plan_naive(g) if prime_strategy == "naive" else _heuristic_plan(g, False, name)
        return PreparationPlan(plan.num_qubits, plan.qubit_map, plan.layers, plan.lc_steps, name)
    b = _Builder()
    _add_quotients(b, q, prime_strategy)
    return b.plan(name, compress=compress)


def make_plan(g: Graph, strategy: str, compress: bool = False) -> PreparationPlan:
    if strategy == "naive":
        return plan_naive(g)
    if strategy == "heuristic":
        return plan_heuristic(g)
    if strategy == "splitfuse":
        return plan_split_fuse(g, compress=compress)
    if strategy == "generalized":
        return plan_generalized(g, "naive", compress=compress)
    if strategy == "generalized+heuristic":
        return plan_generalized(g, "heuristic", compress=compress)
    raise InvalidInputError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")


def resource_formulas(q: Qasst) -> ResourceSummary:
    """Closed-form split-fuse resources of a decomposition without prime quotients."""
    if q.has_prime():
        raise PreconditionError("resource formulas need star and complete quotients only")
    n, k = q.source_vertex_count, q.k
    steps = 1 + max(len(quot.nodes) for quot in q.quotients)
    return ResourceSummary(n + 2 * k - 3, steps, n + 2 * k - 2, 2 * k - 2)


# -- comparison ----------------------------------------------------------------------


def recognize_family(g: Graph) -> FamilySpec | None:
    """Complete multipartite or clique-star structure of ``g`` (parts >= 2), if any.

    Clique-stars are recognised for three or more cliques, where the
    central clique is unique up to relabeling.
    """
    n = g.num_vertices
    if n < 4 or not g.is_connected():
        return None
    full = (1 << n) - 1
    # complete multipartite: non-adjacency is an equivalence relation
    classes: dict[int, int] = {}
    for v, r in enumerate(g.rows):
        part = full & ~r
        classes[part] = classes.get(part, 0) + 1
    if sum(p.bit_count() for p in classes) == n and all(p.bit_count() == c for p, c in classes.items()):
        parts = tuple(sorted((p.bit_count() for p in classes), reverse=True))
        if len(parts) >= 2 and min(parts) >= 2:
            return FamilySpec("complete_multipartite", parts)
    # clique-star: the centre is adjacent to everything; every other vertex
    # sees exactly its own clique plus the centre
    centre = sum(1 << v for v, r in enumerate(g.rows) if r | (1 << v) == full)
    if not centre:
        return None
    groups: dict[int, int] = {}
    for v, r in enumerate(g.rows):
        nb = r | (1 << v)
        if nb != full:
            groups[nb] = groups.get(nb, 0) | (1 << v)
    if len(groups) < 2 or any(nb != members | centre for nb, members in groups.items()):
        return None
    parts = (centre.bit_count(), *sorted((m.bit_count() for m in groups.values()), reverse=True))
    if min(parts) < 2:
        return None
    return FamilySpec("clique_star", parts)


@dataclass(frozen=True)
class ComparisonRow:
    strategy: str
    cz: int
    depth: int
    qubits: int
    aux: int
    note: str = field(default="", compare=False)


def compare_strategies(g: Graph, family: FamilySpec | None = None) -> list[ComparisonRow]:
    """Resource rows for every applicable strategy.

    Rows: naive, heuristic, splitfuse (distance-hereditary inputs) or
    generalized, generalized+heuristic, and ``optimal`` when ``g`` belongs
    to a family with closed forms. The optimal row uses the minimum edge
    count as CZ count and the minimum maximum degree plus one (the edge
    coloring bound) as depth.
    """
    rows = []
    for name in ("naive", "heuristic"):
        rows.append(_row(name, make_plan(g, name)))
    if g.num_vertices and g.is_connected():
        q = decompose(g)
        first = "generalized" if q.has_prime() else "splitfuse"
        rows.append(_row(first, make_plan(g, first)))
        rows.append(_row("generalized+heuristic", make_plan(g, "generalized+heuristic")))
    family = family or recognize_family(g)
    if family is not None:
        opt = optimal_row(family)
        if opt is not None:
            rows.append(opt)
    return rows


def optimal_row(family: FamilySpec) -> ComparisonRow | None:
    """Formula-optimal resources for a multipartite or clique-star family member."""
    fam = "multipartite" if family.variant in ("complete_multipartite", "km", "complete_bipartite", "kb") else family.variant
    if fam not in ("multipartite", "clique_star", "cs"):
        return None
    parts = tuple(family.parts)
    n = sum(parts)
    if fam == "multipartite" and len(parts) == 2:
        cz, note = n - 1, "bipartite closed form"
    else:
        sel = select_min_edges(fam, parts)
        if sel.value is None:
            return ComparisonRow("optimal", min(sel.case_values), min_degree_formula(fam, parts) + 1, n, 0,
                                 "case predicate unknown; cz is the smallest case value")
        cz, note = sel.value, f"case {sel.case} ({sel.source})"
    return ComparisonRow("optimal", cz, min_degree_formula(fam, parts) + 1, n, 0, note)


def _row(name: str, plan: PreparationPlan) -> ComparisonRow:
    s = plan.summary
    return ComparisonRow(name, s.cz_total, s.time_steps, s.qubits_total, s.qubits_aux)


def comparison_csv(rows: list[ComparisonRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["strategy", "cz", "depth", "qubits", "aux"])
    for r in rows:
        w.writerow([r.strategy, r.cz, r.depth, r.qubits, r.aux])
    return buf.getvalue()
