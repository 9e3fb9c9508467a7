"""Stabilizer tableaus for checking graph-state identities and preparation plans.

A :class:`Tableau` on ``q`` qubits holds ``q`` commuting, independent Pauli
generators. Generator ``i`` is stored as two bitsets ``xs[i]``, ``zs[i]``
(bit ``j`` refers to qubit ``j``) and a sign bit; the single-qubit factor
is ``X`` for ``(x, z) = (1, 0)``, ``Z`` for ``(0, 1)`` and ``Y`` for
``(1, 1)``. Global phases are not tracked.

Gate conjugation rules are derived numerically from the gate unitaries at
import time, so the gate names below are the only place conventions live:

=============  ======================
name           unitary
=============  ======================
``H``          Hadamard
``S``          diag(1, i)
``S_DAG``      diag(1, -i)
``SQRT_X``     exp(-i pi/4 X)
``SQRT_X_DAG`` exp(+i pi/4 X)
``SQRT_Y``     exp(-i pi/4 Y)
``SQRT_Y_DAG`` exp(+i pi/4 Y)
``SQRT_Z``     exp(-i pi/4 Z)
``SQRT_Z_DAG`` exp(+i pi/4 Z)
``CZ``         controlled Z
=============  ======================
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from splitfuse.exceptions import InvalidInputError, PreconditionError
from splitfuse.graph import Graph, iter_bits

# -- gate tables ------------------------------------------------------------------

_I2 = np.eye(2, dtype=complex)
_PAULI = {
    (0, 0): _I2,
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
}


def _rot(p, sign: int) -> np.ndarray:
    # exp(-i sign pi/4 P) = (I - i sign P) / sqrt 2
    return (_I2 - 1j * sign * _PAULI[p]) / np.sqrt(2)


UNITARIES: dict[str, np.ndarray] = {
    "I": _I2,
    "X": _PAULI[(1, 0)],
    "Y": _PAULI[(1, 1)],
    "Z": _PAULI[(0, 1)],
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.diag([1, 1j]),
    "S_DAG": np.diag([1, -1j]),
    "SQRT_X": _rot((1, 0), 1),
    "SQRT_X_DAG": _rot((1, 0), -1),
    "SQRT_Y": _rot((1, 1), 1),
    "SQRT_Y_DAG": _rot((1, 1), -1),
    "SQRT_Z": _rot((0, 1), 1),
    "SQRT_Z_DAG": _rot((0, 1), -1),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
}

INVERSE = {
    "I": "I", "X": "X", "Y": "Y", "Z": "Z", "H": "H", "CZ": "CZ",
    "S": "S_DAG", "S_DAG": "S",
    "SQRT_X": "SQRT_X_DAG", "SQRT_X_DAG": "SQRT_X",
    "SQRT_Y": "SQRT_Y_DAG", "SQRT_Y_DAG": "SQRT_Y",
    "SQRT_Z": "SQRT_Z_DAG", "SQRT_Z_DAG": "SQRT_Z",
}


def _pauli_matrix(bits: tuple[int, ...]) -> np.ndarray:
    # bits = (x_0, z_0, x_1, z_1, ...); qubit 0 is the leftmost tensor factor
    m = np.eye(1, dtype=complex)
    for j in range(0, len(bits), 2):
        m = np.kron(m, _PAULI[(bits[j], bits[j + 1])])
    return m


def _conjugation_table(u: np.ndarray) -> dict[tuple[int, ...], tuple[tuple[int, ...], int]]:
    """Map Pauli bits -> (bits of U P U^dagger, sign flip)."""
    nq = int(round(np.log2(u.shape[0])))
    basis = list(product((0, 1), repeat=2 * nq))
    mats = {b: _pauli_matrix(b) for b in basis}
    table = {}
    for b in basis:
        image = u @ mats[b] @ u.conj().T
        for c in basis:
            overlap = np.trace(mats[c].conj().T @ image) / u.shape[0]
            if abs(abs(overlap) - 1) < 1e-9:
                if abs(overlap.imag) > 1e-9:
                    raise AssertionError("non-Hermitian Pauli image")
                table[b] = (c, 0 if overlap.real > 0 else 1)
                break
        else:
            raise AssertionError("gate is not Clifford")
    return table


_TABLES = {name: _conjugation_table(u) for name, u in UNITARIES.items()}
TWO_QUBIT_GATES = frozenset({"CZ"})
SINGLE_QUBIT_GATES = frozenset(UNITARIES) - TWO_QUBIT_GATES


@dataclass(frozen=True)
class CliffordGate:
    """Named Clifford gate with its target qubits."""

    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in UNITARIES:
            raise InvalidInputError(f"unknown gate {self.kind!r}")
        want = 2 if self.kind in TWO_QUBIT_GATES else 1
        if len(self.qubits) != want:
            raise InvalidInputError(f"{self.kind} acts on {want} qubit(s), got {self.qubits}")
        if want == 2 and self.qubits[0] == self.qubits[1]:
            raise InvalidInputError(f"{self.kind} needs two distinct qubits")

    def inverse(self) -> "CliffordGate":
        return CliffordGate(INVERSE[self.kind], self.qubits)


def lc_gates(g: Graph, v: int) -> list[CliffordGate]:
    """Local Cliffords realising the local complement of ``g`` at ``v`` on ``|g>``."""
    return [CliffordGate("SQRT_X", (v,))] + [CliffordGate("SQRT_Z_DAG", (u,)) for u in g.neighbors(v)]


# -- Pauli row arithmetic ------------------------------------------------------------


def _phase_exponent(x1: int, z1: int, x2: int, z2: int) -> int:
    """Power of i picked up when multiplying Pauli strings (x1,z1)*(x2,z2)."""
    y1 = x1 & z1
    xo = x1 & ~z1
    zo = z1 & ~x1
    pos = (y1 & z2 & ~x2) | (xo & z2 & x2) | (zo & x2 & ~z2)
    neg = (y1 & x2 & ~z2) | (xo & z2 & ~x2) | (zo & x2 & z2)
    return pos.bit_count() - neg.bit_count()


def _mul(a: tuple[int, int, int], b: tuple[int, int, int]) -> tuple[int, int, int]:
    """Product of two commuting signed Pauli strings ``(x, z, sign_bit)``."""
    e = (2 * a[2] + 2 * b[2] + _phase_exponent(a[0], a[1], b[0], b[1])) % 4
    if e % 2:
        raise PreconditionError("product of anticommuting Paulis is not Hermitian")
    return (a[0] ^ b[0], a[1] ^ b[1], e // 2)


def _anticommute(x1: int, z1: int, x2: int, z2: int) -> bool:
    return ((x1 & z2).bit_count() + (z1 & x2).bit_count()) % 2 == 1


class Tableau:
    """Stabilizer generators of a pure ``q``-qubit state.

    Instances returned by the public functions of this module are never
    mutated afterwards; the underscore methods mutate in place and are used
    internally for speed.
    """

    __slots__ = ("q", "xs", "zs", "signs")

    def __init__(self, q: int, xs, zs, signs):
        self.q = int(q)
        self.xs = list(xs)
        self.zs = list(zs)
        self.signs = list(signs)
        if not (len(self.xs) == len(self.zs) == len(self.signs) == self.q):
            raise InvalidInputError("a tableau needs exactly one generator per qubit")

    @classmethod
    def plus_state(cls, q: int) -> "Tableau":
        return cls(q, [1 << i for i in range(q)], [0] * q, [0] * q)

    @classmethod
    def from_strings(cls, rows: list[str]) -> "Tableau":
        """Build from strings such as ``["+XZ", "-ZX"]`` (qubit 0 leftmost)."""
        xs, zs, signs = [], [], []
        for s in rows:
            sign = 1 if s[0] == "-" else 0
            body = s[1:] if s[0] in "+-" else s
            x = z = 0
            for j, ch in enumerate(body):
                if ch in "XY":
                    x |= 1 << j
                if ch in "ZY":
                    z |= 1 << j
                if ch not in "IXYZ":
                    raise InvalidInputError(f"bad Pauli letter {ch!r}")
            xs.append(x)
            zs.append(z)
            signs.append(sign)
        return cls(len(rows), xs, zs, signs)

    def copy(self) -> "Tableau":
        return Tableau(self.q, self.xs, self.zs, self.signs)

    def row(self, i: int) -> tuple[int, int, int]:
        return (self.xs[i], self.zs[i], self.signs[i])

    def to_strings(self) -> list[str]:
        out = []
        for x, z, s in zip(self.xs, self.zs, self.signs):
            letters = "".join("IXZY"[(x >> j & 1) + 2 * (z >> j & 1)] for j in range(self.q))
            out.append(("-" if s else "+") + letters)
        return out

    @property
    def matrix(self) -> np.ndarray:
        """``q x (2q + 1)`` binary matrix ``[X | Z | sign]``."""
        m = np.zeros((self.q, 2 * self.q + 1), dtype=np.uint8)
        for i in range(self.q):
            for j in range(self.q):
                m[i, j] = self.xs[i] >> j & 1
                m[i, self.q + j] = self.zs[i] >> j & 1
            m[i, 2 * self.q] = self.signs[i]
        return m

    def is_valid(self) -> bool:
        """Generators pairwise commute and are independent."""
        for i in range(self.q):
            for j in range(i + 1, self.q):
                if _anticommute(self.xs[i], self.zs[i], self.xs[j], self.zs[j]):
                    return False
        return _rank(self.xs, self.zs) == self.q

    def __repr__(self) -> str:
        return f"Tableau({self.to_strings()})"

    # -- in-place primitives --------------------------------------------------

    def _apply(self, kind: str, qubits: tuple[int, ...]) -> None:
        table = _TABLES[kind]
        for a in qubits:
            if not 0 <= a < self.q:
                raise InvalidInputError(f"qubit {a} out of range for {self.q} qubits")
        for i in range(self.q):
            x, z = self.xs[i], self.zs[i]
            bits = tuple(b for a in qubits for b in (x >> a & 1, z >> a & 1))
            if not any(bits):
                continue
            new, flip = table[bits]
            for k, a in enumerate(qubits):
                x = (x & ~(1 << a)) | (new[2 * k] << a)
                z = (z & ~(1 << a)) | (new[2 * k + 1] << a)
            self.xs[i], self.zs[i] = x, z
            self.signs[i] ^= flip

    def _rowmul(self, target: int, source: int) -> None:
        self.xs[target], self.zs[target], self.signs[target] = _mul(self.row(target), self.row(source))

    def _drop(self, qubits: list[int], rows: list[int]) -> None:
        """Delete the given rows and qubit columns (the rows must span the removed qubits' part)."""
        keep_rows = [i for i in range(self.q) if i not in set(rows)]
        keep_cols = [j for j in range(self.q) if j not in set(qubits)]

        def squeeze(b: int) -> int:
            out = 0
            for new, old in enumerate(keep_cols):
                out |= (b >> old & 1) << new
            return out

        self.xs = [squeeze(self.xs[i]) for i in keep_rows]
        self.zs = [squeeze(self.zs[i]) for i in keep_rows]
        self.signs = [self.signs[i] for i in keep_rows]
        self.q = len(keep_cols)


def _reduce(xs: list[int], zs: list[int]):
    """GF(2) echelon basis of the rows: pivot bit -> (vector, mask of source rows)."""
    shift = max([b.bit_length() for b in xs + zs], default=0) + 1
    basis: dict[int, tuple[int, int]] = {}
    for i, (a, b) in enumerate(zip(xs, zs)):
        v = (b << shift) | a
        mask = 1 << i
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = (v, mask)
                break
            v ^= basis[top][0]
            mask ^= basis[top][1]
    return basis, shift


def _rank(xs: list[int], zs: list[int]) -> int:
    return len(_reduce(xs, zs)[0])


def _express_rows(xs: list[int], zs: list[int], x: int, z: int) -> list[int] | None:
    """Indices of rows whose product is ``(x, z)`` up to sign, or ``None``."""
    basis, shift = _reduce(xs, zs)
    if max(x.bit_length(), z.bit_length()) >= shift:
        return None
    v = (z << shift) | x
    mask = 0
    while v:
        top = v.bit_length() - 1
        if top not in basis:
            return None
        v ^= basis[top][0]
        mask ^= basis[top][1]
    return list(iter_bits(mask))


def _express(t: Tableau, x: int, z: int) -> list[int] | None:
    return _express_rows(t.xs, t.zs, x, z)


def _product_of_rows(t: Tableau, idx: list[int]) -> tuple[int, int, int]:
    acc = (0, 0, 0)
    for i in idx:
        acc = _mul(acc, t.row(i))
    return acc


# -- public operations --------------------------------------------------------------


def graph_state_tableau(g: Graph) -> Tableau:
    """Generators ``X_v Z_{N(v)}`` of ``|g>``, all with sign ``+``."""
    n = g.num_vertices
    return Tableau(n, [1 << v for v in range(n)], list(g.rows), [0] * n)


def apply_gate(t: Tableau, gate: CliffordGate) -> Tableau:
    out = t.copy()
    out._apply(gate.kind, gate.qubits)
    return out


def apply_gates(t: Tableau, gates) -> Tableau:
    out = t.copy()
    for gate in gates:
        out._apply(gate.kind, gate.qubits)
    return out


def tensor(t1: Tableau, t2: Tableau) -> Tableau:
    """``t1 (x) t2``; qubits of ``t2`` are shifted by ``t1.q``."""
    s = t1.q
    return Tableau(
        t1.q + t2.q,
        t1.xs + [x << s for x in t2.xs],
        t1.zs + [z << s for z in t2.zs],
        t1.signs + t2.signs,
    )


def contains(t: Tableau, x: int, z: int, sign: int) -> bool:
    """True if the signed Pauli ``(-1)^sign X^x Z^z`` lies in the stabilizer group."""
    idx = _express(t, x, z)
    if idx is None:
        return False
    return _product_of_rows(t, idx)[2] == sign


def states_equal(t1: Tableau, t2: Tableau) -> bool:
    """Equality of the stabilizer groups, signs included."""
    if t1.q != t2.q:
        raise InvalidInputError(f"qubit counts differ: {t1.q} vs {t2.q}")
    return all(contains(t1, *t2.row(i)) for i in range(t2.q))


def permute_qubits(t: Tableau, perm: list[int]) -> Tableau:
    """Relabel qubit ``j`` as ``perm[j]``."""
    if sorted(perm) != list(range(t.q)):
        raise InvalidInputError("perm must be a permutation of the qubits")

    def move(b: int) -> int:
        out = 0
        for j in iter_bits(b):
            out |= 1 << perm[j]
        return out

    return Tableau(t.q, [move(x) for x in t.xs], [move(z) for z in t.zs], t.signs)


def _measure(t: Tableau, x: int, z: int, forced_sign: int | None) -> tuple[int, int]:
    """Measure the Pauli ``X^x Z^z`` in place; return (outcome, index of a row equal to it)."""
    anti = [i for i in range(t.q) if _anticommute(t.xs[i], t.zs[i], x, z)]
    if anti:
        p = anti[0]
        for i in anti[1:]:
            t._rowmul(i, p)
        outcome = 1 if forced_sign is None else forced_sign
        t.xs[p], t.zs[p], t.signs[p] = x, z, 0 if outcome == 1 else 1
        return outcome, p
    idx = _express(t, x, z)
    if idx is None:  # cannot happen for a full-rank tableau
        raise PreconditionError("measured Pauli commutes with the group but is not in it")
    prod_row = _product_of_rows(t, idx)
    outcome = -1 if prod_row[2] else 1
    if forced_sign is not None and forced_sign != outcome:
        raise PreconditionError(f"outcome is deterministic ({outcome:+d}); cannot force {forced_sign:+d}")
    p = idx[0]
    t.xs[p], t.zs[p], t.signs[p] = prod_row
    return outcome, p


def _clear_qubits(t: Tableau, qubits: list[int], pivots: list[int]) -> None:
    """Make ``pivots`` the only rows with support on ``qubits``.

    The pivot rows must be supported on ``qubits`` only and generate the
    stabilizer of those qubits, i.e. the qubits are already disentangled.
    """
    qmask = sum(1 << a for a in qubits)
    for i in range(t.q):
        if i in pivots or not ((t.xs[i] | t.zs[i]) & qmask):
            continue
        # find a product of pivot rows agreeing with row i on the removed qubits
        combo = _express_rows(
            [t.xs[p] & qmask for p in pivots],
            [t.zs[p] & qmask for p in pivots],
            t.xs[i] & qmask,
            t.zs[i] & qmask,
        )
        if combo is None:
            raise PreconditionError("qubits to remove are still entangled with the rest")
        for c in combo:
            t._rowmul(i, pivots[c])


def measure_pauli_tableau(
    t: Tableau, qubit: int, basis: str, forced_sign: int | None = None
) -> tuple[int, Tableau]:
    """Measure one qubit in the X, Y or Z basis and remove it.

    Parameters
    ----------
    t : Tableau
    qubit : int
    basis : {"X", "Y", "Z"}
    forced_sign : {+1, -1, None}
        Branch to select when the outcome is random. ``None`` picks ``+1``.
        Forcing a deterministic outcome to the other value raises
        :class:`PreconditionError`.

    Returns
    -------
    outcome : int
        ``+1`` or ``-1``.
    Tableau
        Post-measurement state on the remaining ``q - 1`` qubits, in the
        original order.
    """
    if not 0 <= qubit < t.q:
        raise InvalidInputError(f"qubit {qubit} out of range for {t.q} qubits")
    basis = basis.upper()
    bits = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
    if basis not in bits:
        raise InvalidInputError(f"basis must be X, Y or Z, got {basis!r}")
    if forced_sign not in (None, 1, -1):
        raise InvalidInputError(f"forced_sign must be +1, -1 or None, got {forced_sign!r}")
    out = t.copy()
    bx, bz = bits[basis]
    outcome, p = _measure(out, bx << qubit, bz << qubit, forced_sign)
    _clear_qubits(out, [qubit], [p])
    out._drop([qubit], [p])
    return outcome, out


# Outcome branch (xx, zz) of the Bell measurement -> whether a Z correction
# is needed on the neighbourhood of q1 and of q2. Derived by exhaustive
# search over small instances and checked by the test suite.
FUSION_CORRECTIONS: dict[tuple[int, int], tuple[bool, bool]] = {
    (1, 1): (False, False),
    (1, -1): (True, False),
    (-1, 1): (False, True),
    (-1, -1): (True, True),
}


def _fuse_in_place(
    t: Tableau, q1: int, q2: int, n1: list[int], n2: list[int], outcomes: tuple[int, int]
) -> tuple[int, int]:
    """Type-II fusion on two qubits of one tableau; returns the realised outcomes."""
    t._apply("H", (q2,))
    s_xx, p1 = _measure(t, (1 << q1) | (1 << q2), 0, outcomes[0])
    s_zz, p2 = _measure(t, 0, (1 << q1) | (1 << q2), outcomes[1])
    fix1, fix2 = FUSION_CORRECTIONS[(s_xx, s_zz)]
    if fix1:
        for u in n1:
            t._apply("Z", (u,))
    if fix2:
        for u in n2:
            t._apply("Z", (u,))
    pivots = sorted({p1, p2})
    _clear_qubits(t, [q1, q2], pivots)
    t._drop([q1, q2], pivots)
    return s_xx, s_zz


def fuse_type2_tableau(
    t1: Tableau,
    q1: int,
    t2: Tableau,
    q2: int,
    n1=(),
    n2=(),
    outcomes: tuple[int | None, int | None] = (1, 1),
) -> Tableau:
    """Type-II fusion of qubit ``q1`` of ``t1`` with qubit ``q2`` of ``t2``.

    The two states are tensored, ``H`` is applied to ``q2`` and the Bell
    observables ``X X`` then ``Z Z`` are measured with the forced
    ``outcomes``. The Pauli correction for the realised branch is applied
    to the graph neighbourhoods ``n1`` (qubits of ``t1``) and ``n2``
    (qubits of ``t2``), then both measured qubits are removed. Remaining
    qubits keep their order: ``t1``'s first, then ``t2``'s.
    """
    if not 0 <= q1 < t1.q or not 0 <= q2 < t2.q:
        raise InvalidInputError("fusion qubit out of range")
    t = tensor(t1, t2)
    _fuse_in_place(t, q1, t1.q + q2, list(n1), [t1.q + u for u in n2], outcomes)
    return t
