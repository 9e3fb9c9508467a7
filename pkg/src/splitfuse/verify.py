"""Stabilizer-level execution of preparation plans.

The verifier runs a plan twice in lockstep: on a tableau (the physical
picture) and as graph rewrites (the bookkeeping picture). After every layer
the tableau must equal the graph state of the replayed graph; at the end
the replayed graph must equal the target.
"""

from __future__ import annotations

from dataclasses import dataclass

from splitfuse.exceptions import PreconditionError
from splitfuse.graph import Graph, iter_bits
from splitfuse.planner import PreparationPlan, _apply_op, check_plan
from splitfuse.stabilizer import Tableau, _fuse_in_place, graph_state_tableau, permute_qubits, states_equal


@dataclass(frozen=True)
class Diagnosis:
    ok: bool
    layer: int | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failing_layer": self.layer, "reason": self.reason}


def _graph_tableau(rows: list[int], alive: list[int]) -> Tableau:
    pos = {q: i for i, q in enumerate(alive)}
    sub = []
    for q in alive:
        r = 0
        for u in iter_bits(rows[q]):
            r |= 1 << pos[u]
        sub.append(r)
    return graph_state_tableau(Graph._trusted(tuple(sub)))


def diagnose_plan(plan: PreparationPlan, target: Graph, check_every_layer: bool = True) -> Diagnosis:
    """Execute ``plan`` on a tableau and report the first failing layer, if any.

    Random measurement outcomes in fusions take the ``+1`` branch and the
    frozen Pauli corrections are applied. Structurally malformed plans raise
    :class:`~splitfuse.exceptions.InvalidInputError`.
    """
    check_plan(plan)
    t = Tableau.plus_state(plan.num_qubits)
    rows = [0] * plan.num_qubits
    alive = list(range(plan.num_qubits))  # plan qubit of each tableau column
    last = len(plan.layers) - 1
    for i, layer in enumerate(plan.layers):
        for op in layer:
            col = {q: c for c, q in enumerate(alive)}
            if op.kind == "cz":
                a, b = op.qubits
                t._apply("CZ", (col[a], col[b]))
            elif op.kind == "lc":
                v, nb = plan.lc_steps[op.ref]
                t._apply("SQRT_X", (col[v],))
                for u in nb:
                    t._apply("SQRT_Z_DAG", (col[u],))
            else:
                a, b = op.qubits
                n1 = [col[u] for u in iter_bits(rows[a])]
                n2 = [col[u] for u in iter_bits(rows[b])]
                try:
                    _fuse_in_place(t, col[a], col[b], n1, n2, (None, None))
                except PreconditionError as exc:
                    return Diagnosis(False, i, f"fusion of {a} and {b} failed: {exc}")
                alive = [q for q in alive if q not in (a, b)]
            try:
                _apply_op(rows, plan, op, i)
            except PreconditionError as exc:
                return Diagnosis(False, i, str(exc))
        if (check_every_layer or i == last) and not states_equal(t, _graph_tableau(rows, alive)):
            return Diagnosis(False, i, "tableau differs from the graph state of the replayed graph")
    final = last if last >= 0 else None
    if any(plan.qubit_map[q] is None for q in alive):
        return Diagnosis(False, final, "auxiliary qubits survive the plan")
    if sorted(plan.qubit_map[q] for q in alive) != list(range(target.num_vertices)):
        return Diagnosis(False, final, "surviving qubits do not cover the target vertices")
    perm = [plan.qubit_map[q] for q in alive]
    if not states_equal(permute_qubits(t, perm), graph_state_tableau(target)):
        return Diagnosis(False, final, "final state differs from the target graph state")
    return Diagnosis(True)


def verify_plan(plan: PreparationPlan, target: Graph) -> bool:
    """True iff executing ``plan`` prepares ``|target>`` exactly."""
    return diagnose_plan(plan, target, check_every_layer=False).ok
