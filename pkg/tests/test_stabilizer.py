from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitfuse.exceptions import InvalidInputError, PreconditionError
from splitfuse.families import complete, star
from splitfuse.graph import Graph, fuse_type2, local_complement, measure_pauli
from splitfuse.stabilizer import (
    FUSION_CORRECTIONS,
    UNITARIES,
    CliffordGate,
    Tableau,
    apply_gate,
    apply_gates,
    contains,
    fuse_type2_tableau,
    graph_state_tableau,
    lc_gates,
    measure_pauli_tableau,
    permute_qubits,
    states_equal,
    tensor,
)

from conftest import dense_apply, dense_graph_state, dense_pauli, graphs, random_graph, same_ray, stabilizes

ONE_QUBIT = sorted(k for k in UNITARIES if k != "CZ")


# -- tableau basics -----------------------------------------------------------------


def test_strings_roundtrip():
    rows = ["+XZI", "-ZXZ", "+IZY"]
    assert Tableau.from_strings(rows).to_strings() == rows


def test_bad_letter():
    with pytest.raises(InvalidInputError):
        Tableau.from_strings(["+XQ", "+ZZ"])


def test_generator_count_checked():
    with pytest.raises(InvalidInputError):
        Tableau(2, [1], [0], [0])


def test_matrix_layout():
    m = graph_state_tableau(star(1)).matrix
    assert m.tolist() == [[1, 0, 0, 1, 0], [0, 1, 1, 0, 0]]


@settings(max_examples=100, deadline=None)
@given(graphs(max_vertices=8))
def test_graph_state_generators_valid(g):
    assert graph_state_tableau(g).is_valid()


def test_invalid_detected():
    assert not Tableau.from_strings(["+XI", "+ZI"]).is_valid()
    assert not Tableau.from_strings(["+XI", "+XI"]).is_valid()


def test_states_equal_ignores_generator_choice():
    t = graph_state_tableau(complete(3))
    u = t.copy()
    u._rowmul(0, 1)
    assert states_equal(t, u)
    u.signs[2] ^= 1
    assert not states_equal(t, u)


def test_contains():
    t = graph_state_tableau(star(1))  # XZ, ZX
    assert contains(t, 0b11, 0b11, 0)  # XZ * ZX = YY
    assert not contains(t, 0b11, 0b11, 1)
    assert not contains(t, 0b01, 0, 0)


def test_tensor_and_permute():
    g = Graph(3, [(0, 1)])
    t = tensor(graph_state_tableau(star(1)), graph_state_tableau(Graph(1)))
    assert states_equal(t, graph_state_tableau(g))
    p = permute_qubits(graph_state_tableau(g), [2, 0, 1])  # qubit j moves to perm[j]
    assert states_equal(p, graph_state_tableau(Graph(3, [(0, 2)])))


def test_gate_validation():
    with pytest.raises(InvalidInputError):
        CliffordGate("T", (0,))
    with pytest.raises(InvalidInputError):
        CliffordGate("CZ", (0, 0))
    with pytest.raises(InvalidInputError):
        CliffordGate("H", (0, 1))


# -- conjugation rules against the dense oracle -------------------------------------


@pytest.mark.parametrize("name", ONE_QUBIT)
def test_single_qubit_gate_vs_dense(name):
    rng = random.Random(hash(name) & 0xFFFF)
    for _ in range(10):
        g = random_graph(rng, 4)
        gate = CliffordGate(name, (rng.randrange(4),))
        t = apply_gate(graph_state_tableau(g), gate)
        assert stabilizes(t, dense_apply(dense_graph_state(g), [gate]))


@pytest.mark.parametrize("name", ONE_QUBIT)
def test_inverse(name):
    g = complete(3)
    gate = CliffordGate(name, (1,))
    t = apply_gates(graph_state_tableau(g), [gate, gate.inverse()])
    assert states_equal(t, graph_state_tableau(g))


def test_cz_builds_graph_state():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    t = apply_gates(Tableau.plus_state(4), [CliffordGate("CZ", e) for e in g.edges()])
    assert states_equal(t, graph_state_tableau(g))


@settings(max_examples=60, deadline=None)
@given(graphs(max_vertices=6), st.lists(st.tuples(st.sampled_from(ONE_QUBIT + ["CZ"]), st.integers(0, 5), st.integers(0, 5)), max_size=8))
def test_random_circuits_vs_dense(g, spec):
    q = g.num_vertices
    gates = []
    for name, a, b in spec:
        a, b = a % q, b % q
        if name == "CZ":
            if a != b:
                gates.append(CliffordGate("CZ", (a, b)))
        else:
            gates.append(CliffordGate(name, (a,)))
    t = apply_gates(graph_state_tableau(g), gates)
    assert t.is_valid()
    assert stabilizes(t, dense_apply(dense_graph_state(g), gates))


@settings(max_examples=80, deadline=None)
@given(graphs(max_vertices=6), st.data())
def test_lc_unitary_dense(g, data):
    v = data.draw(st.integers(0, g.num_vertices - 1))
    psi = dense_apply(dense_graph_state(g), lc_gates(g, v))
    assert same_ray(psi, dense_graph_state(local_complement(g, v)))


@settings(max_examples=150, deadline=None)
@given(graphs(max_vertices=8), st.data())
def test_lc_unitary_tableau(g, data):
    v = data.draw(st.integers(0, g.num_vertices - 1))
    t = apply_gates(graph_state_tableau(g), lc_gates(g, v))
    assert states_equal(t, graph_state_tableau(local_complement(g, v)))


# -- measurements ---------------------------------------------------------------------


def _byproduct_undone(g: Graph, v: int, basis: str, sign: int) -> tuple[Tableau, Tableau]:
    m = measure_pauli(g, v, basis, sign)
    _, post = measure_pauli_tableau(graph_state_tableau(g), v, basis, forced_sign=sign)
    undo = [CliffordGate(name, (q,)).inverse() for name, q in reversed(m.byproduct)]
    return apply_gates(post, undo), graph_state_tableau(m.residual_graph)


@pytest.mark.parametrize("basis", ["X", "Y", "Z"])
@pytest.mark.parametrize("sign", [1, -1])
def test_measurement_rules(basis, sign):
    rng = random.Random(7 + sign + ord(basis))
    done = 0
    while done < 60:
        n = rng.randint(2, 7)
        g = random_graph(rng, n)
        v = rng.randrange(n)
        if basis == "X" and not g.neighbors(v):
            continue
        got, want = _byproduct_undone(g, v, basis, sign)
        assert states_equal(got, want)
        done += 1


def test_measurement_dense_projection():
    g = Graph(3, [(0, 1), (1, 2)])
    psi = dense_graph_state(g)
    proj = (np.eye(8) + dense_pauli(3, 0b010, 0)) / 2  # X on qubit 1, outcome +1
    post = proj @ psi
    post /= np.linalg.norm(post)
    _, t = measure_pauli_tableau(graph_state_tableau(g), 1, "X", 1)
    # re-embed: post = |+>_1 (x) state on {0, 2}
    full = Tableau(3, [t.xs[0] & 1 | (t.xs[0] >> 1) << 2, t.xs[1] & 1 | (t.xs[1] >> 1) << 2, 0b010],
                   [t.zs[0] & 1 | (t.zs[0] >> 1) << 2, t.zs[1] & 1 | (t.zs[1] >> 1) << 2, 0], [*t.signs, 0])
    assert stabilizes(full, post)


def test_deterministic_outcome_cannot_be_forced():
    t = Tableau.plus_state(1)
    assert measure_pauli_tableau(t, 0, "X")[0] == 1
    with pytest.raises(PreconditionError):
        measure_pauli_tableau(t, 0, "X", forced_sign=-1)


def test_x_on_isolated_vertex():
    with pytest.raises(PreconditionError):
        measure_pauli(Graph(2), 0, "X")
    m = measure_pauli(Graph(2), 0, "X", permissive=True)
    assert m.basis == "Z"


@pytest.mark.parametrize("kw", [dict(basis="W"), dict(basis="X", forced_sign=2)])
def test_measure_validation(kw):
    with pytest.raises(InvalidInputError):
        measure_pauli_tableau(Tableau.plus_state(2), 0, **kw)


# -- fusion ---------------------------------------------------------------------------

BRANCHES = sorted(FUSION_CORRECTIONS)


def _fusion_pair(rng: random.Random):
    while True:
        g1 = random_graph(rng, rng.randint(1, 4))
        g2 = random_graph(rng, rng.randint(1, 4))
        q1, q2 = rng.randrange(g1.num_vertices), rng.randrange(g2.num_vertices)
        if g1.neighbors(q1) and g2.neighbors(q2):
            return g1, q1, g2, q2


@pytest.mark.parametrize("branch", BRANCHES)
def test_fusion_matches_graph_rule(branch):
    rng = random.Random(11 * branch[0] + branch[1])
    for _ in range(100):
        g1, q1, g2, q2 = _fusion_pair(rng)
        t = fuse_type2_tableau(
            graph_state_tableau(g1), q1, graph_state_tableau(g2), q2, g1.neighbors(q1), g2.neighbors(q2), branch
        )
        assert states_equal(t, graph_state_tableau(fuse_type2(g1, q1, g2, q2).graph))


@pytest.mark.parametrize("branch", BRANCHES)
def test_fusion_dense(branch):
    """Project the dense state onto the Bell branch and check the fused stabilizers."""
    g1, g2 = star(2), Graph(3, [(0, 1), (1, 2), (0, 2)])
    q1, q2 = 1, 0
    n1 = g1.num_vertices
    q = n1 + g2.num_vertices
    joint = Graph(q, g1.edges() + [(a + n1, b + n1) for a, b in g2.edges()])
    a, b = q1, n1 + q2
    psi = dense_apply(dense_graph_state(joint), [CliffordGate("H", (b,))])
    xx = dense_pauli(q, (1 << a) | (1 << b), 0)
    zz = dense_pauli(q, 0, (1 << a) | (1 << b))
    psi = (np.eye(2**q) + branch[0] * xx) @ psi / 2
    psi = (np.eye(2**q) + branch[1] * zz) @ psi / 2
    psi /= np.linalg.norm(psi)
    fix1, fix2 = FUSION_CORRECTIONS[branch]
    zs = ([u for u in g1.neighbors(q1)] if fix1 else []) + ([n1 + u for u in g2.neighbors(q2)] if fix2 else [])
    psi = dense_apply(psi, [CliffordGate("Z", (u,)) for u in zs])
    fused = fuse_type2(g1, q1, g2, q2)
    keep = [j for j in range(q) if j not in (a, b)]
    for u, row in enumerate(fused.graph.rows):
        x = 1 << keep[u]
        z = sum(1 << keep[w] for w in range(fused.graph.num_vertices) if row >> w & 1)
        assert np.allclose(dense_pauli(q, x, z) @ psi, psi)


def test_fusion_random_outcome_default():
    t = fuse_type2_tableau(graph_state_tableau(star(1)), 1, graph_state_tableau(star(1)), 1, [0], [0], (None, None))
    assert states_equal(t, graph_state_tableau(Graph(2, [(0, 1)])))


def test_fusion_out_of_range():
    with pytest.raises(InvalidInputError):
        fuse_type2_tableau(Tableau.plus_state(1), 2, Tableau.plus_state(1), 0)


def test_fusing_two_plus_qubits_leaves_empty_state():
    t = fuse_type2_tableau(Tableau.plus_state(1), 0, Tableau.plus_state(1), 0)
    assert t.q == 0


def test_z_measure_plus_state():
    outcome, t = measure_pauli_tableau(Tableau.plus_state(1), 0, "Z", forced_sign=1)
    assert outcome == 1 and t.q == 0


def test_s_four_times_is_identity():
    t = graph_state_tableau(complete(3))
    assert states_equal(apply_gates(t, [CliffordGate("S", (1,))] * 4), t)


def test_k2_not_product_state():
    assert not states_equal(graph_state_tableau(star(1)), Tableau.plus_state(2))
