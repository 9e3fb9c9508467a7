"""Shared strategies and an independent dense state-vector oracle."""

from __future__ import annotations

import random
from functools import reduce

import numpy as np
import pytest
from hypothesis import strategies as st

from splitfuse.graph import Graph
from splitfuse.families import random_dh, random_er_connected
from splitfuse.stabilizer import UNITARIES


@st.composite
def graphs(draw, min_vertices: int = 1, max_vertices: int = 7):
    """Arbitrary simple graphs (possibly disconnected)."""
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_vertices: int = 1, max_vertices: int = 8):
    n = draw(st.integers(min_vertices, max_vertices))
    seed = draw(st.integers(0, 2**31))
    p = draw(st.floats(0.15, 0.85))
    return random_er_connected(n, p, seed)


@st.composite
def dh_graphs(draw, min_vertices: int = 1, max_vertices: int = 12):
    n = draw(st.integers(min_vertices, max_vertices))
    return random_dh(n, draw(st.integers(0, 2**31)))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# -- dense oracle -------------------------------------------------------------
# Qubit 0 is the leftmost tensor factor, matching the tableau convention.


def _op_on(u: np.ndarray, qubits: tuple[int, ...], q: int) -> np.ndarray:
    """Embed a 1- or 2-qubit unitary acting on ``qubits`` into ``q`` qubits."""
    psi_axes = q
    if len(qubits) == 1:
        mats = [UNITARIES["I"]] * q
        mats[qubits[0]] = u
        return reduce(np.kron, mats)
    # two-qubit diagonal gates only (CZ)
    assert np.allclose(u, np.diag(np.diag(u)))
    a, b = qubits
    diag = np.ones(2**psi_axes, dtype=complex)
    for idx in range(2**q):
        ba = idx >> (q - 1 - a) & 1
        bb = idx >> (q - 1 - b) & 1
        diag[idx] = u[2 * ba + bb, 2 * ba + bb]
    return np.diag(diag)


def dense_graph_state(g: Graph) -> np.ndarray:
    q = g.num_vertices
    psi = np.full(2**q, 2 ** (-q / 2), dtype=complex)
    for idx in range(2**q):
        bits = [idx >> (q - 1 - j) & 1 for j in range(q)]
        parity = sum(bits[u] & bits[v] for u, v in g.edges())
        psi[idx] *= (-1) ** parity
    return psi


def dense_apply(psi: np.ndarray, gates) -> np.ndarray:
    q = int(round(np.log2(psi.size)))
    for gate in gates:
        psi = _op_on(UNITARIES[gate.kind], gate.qubits, q) @ psi
    return psi


def same_ray(a: np.ndarray, b: np.ndarray) -> bool:
    return abs(abs(np.vdot(a, b)) - 1) < 1e-9


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261015)


def dense_pauli(q: int, x: int, z: int, sign: int = 0) -> np.ndarray:
    """Dense matrix of ``(-1)^sign X^x Z^z`` with the Y convention ``X Z -> Y`` per qubit."""
    letters = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
    mats = [UNITARIES[letters[(x >> j & 1, z >> j & 1)]] for j in range(q)]
    return (-1) ** sign * reduce(np.kron, mats)


def stabilizes(t, psi: np.ndarray) -> bool:
    """Every generator of tableau ``t`` fixes ``psi``."""
    return all(np.allclose(dense_pauli(t.q, *t.row(i)) @ psi, psi) for i in range(t.q))


# -- acceptance reporting -----------------------------------------------------------

ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
