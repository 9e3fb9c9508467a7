"""Named graph families and seeded random generators.

Canonical labelings
-------------------
* ``complete(n)``: vertices ``0..n-1``.
* ``star(n)``: centre ``0``, leaves ``1..n``.
* ``complete_bipartite(n, m)``: first part ``0..n-1``, second ``n..n+m-1``.
* ``complete_multipartite(parts)``: parts in the order given, consecutive ids.
* ``clique_star(parts, r)``: the central clique ``H_r`` (1-based ``r``) gets the
  first ids, then the remaining cliques in index order.
* ``repeater(n)``: clique ``0..n-1``; the leaf of clique vertex ``i`` is ``n+i``.
* ``multi_leaf_repeater(parts)``: clique ``0..k-1``; then the ``n_i - 1`` leaves
  of clique vertex ``i`` for ``i = 0, 1, ...``, consecutively.

Random generators use :class:`random.Random` (Mersenne Twister) seeded with
the given integer.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from splitfuse.exceptions import InvalidInputError, ResourceLimitError
from splitfuse.graph import Graph

FAMILY_CODES = {
    "k": "complete",
    "s": "star",
    "kb": "complete_bipartite",
    "km": "complete_multipartite",
    "cs": "clique_star",
    "r": "repeater",
    "mr": "multi_leaf_repeater",
}


def _positive(name: str, *values: int) -> None:
    for x in values:
        if int(x) < 1:
            raise InvalidInputError(f"{name}: sizes must be >= 1, got {values}")


def _clique(ids) -> list[tuple[int, int]]:
    return list(combinations(ids, 2))


def complete(n: int) -> Graph:
    _positive("complete", n)
    return Graph(n, _clique(range(n)))


def star(n: int) -> Graph:
    """Star ``S_n`` with ``n`` leaves (``n + 1`` vertices)."""
    _positive("star", n)
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_multipartite(parts) -> Graph:
    parts = [int(p) for p in parts]
    if not parts:
        raise InvalidInputError("complete_multipartite needs at least one part")
    _positive("complete_multipartite", *parts)
    blocks, start = [], 0
    for p in parts:
        blocks.append(range(start, start + p))
        start += p
    edges = [(u, v) for a, b in combinations(blocks, 2) for u in a for v in b]
    return Graph(start, edges)


def complete_bipartite(n: int, m: int) -> Graph:
    return complete_multipartite([n, m])


def clique_star(parts, r: int = 1) -> Graph:
    """Clique-star ``CS^r_{n_1..n_k}`` with central clique ``H_r`` (1-based)."""
    parts = [int(p) for p in parts]
    if not parts:
        raise InvalidInputError("clique_star needs at least one clique")
    _positive("clique_star", *parts)
    if not 1 <= r <= len(parts):
        raise InvalidInputError(f"clique_star: r must be in 1..{len(parts)}, got {r}")
    order = [r - 1] + [i for i in range(len(parts)) if i != r - 1]
    blocks, start = {}, 0
    for i in order:
        blocks[i] = range(start, start + parts[i])
        start += parts[i]
    edges = []
    for b in blocks.values():
        edges += _clique(b)
    centre = blocks[r - 1]
    for i, b in blocks.items():
        if i != r - 1:
            edges += [(u, v) for u in centre for v in b]
    return Graph(start, edges)


def multi_leaf_repeater(parts) -> Graph:
    """Clique on ``k`` vertices; clique vertex ``i`` carries ``n_i - 1`` leaves."""
    parts = [int(p) for p in parts]
    if not parts:
        raise InvalidInputError("multi_leaf_repeater needs at least one part")
    _positive("multi_leaf_repeater", *parts)
    k = len(parts)
    edges = _clique(range(k))
    nxt = k
    for i, p in enumerate(parts):
        for _ in range(p - 1):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def repeater(n: int) -> Graph:
    _positive("repeater", n)
    return Graph(2 * n, _clique(range(n)) + [(i, n + i) for i in range(n)])


@dataclass(frozen=True)
class FamilySpec:
    """A named family member, e.g. ``FamilySpec("clique_star", (2, 2, 2), r=1)``.

    ``variant`` accepts the long names or the CLI codes in :data:`FAMILY_CODES`.
    ``parts`` holds the single size for complete/star/repeater.
    """

    variant: str
    parts: tuple[int, ...]
    r: int = 1

    def build(self) -> Graph:
        return build(self)


def build(spec: FamilySpec) -> Graph:
    variant = FAMILY_CODES.get(spec.variant, spec.variant)
    parts = tuple(spec.parts)
    single = {"complete": complete, "star": star, "repeater": repeater}
    if variant in single:
        if len(parts) != 1:
            raise InvalidInputError(f"{variant} takes exactly one size, got {parts}")
        return single[variant](parts[0])
    if variant == "complete_bipartite":
        if len(parts) != 2:
            raise InvalidInputError(f"complete_bipartite takes two sizes, got {parts}")
        return complete_bipartite(*parts)
    if variant == "complete_multipartite":
        return complete_multipartite(parts)
    if variant == "clique_star":
        return clique_star(parts, spec.r)
    if variant == "multi_leaf_repeater":
        return multi_leaf_repeater(parts)
    raise InvalidInputError(f"unknown family {spec.variant!r}")


# -- random generators -------------------------------------------------------

TWIN_KINDS = ("pendant", "true_twin", "false_twin")


def random_dh(n: int, seed: int, weights=(1.0, 1.0, 1.0)) -> Graph:
    """Random distance-hereditary graph grown by one-vertex extensions.

    Starting from one vertex, each step picks an existing vertex uniformly and
    attaches a pendant leaf, a true twin or a false twin with probabilities
    proportional to ``weights``. A false twin of the lone starting vertex would
    be isolated, so that case degenerates to a pendant (all three coincide).
    """
    if n < 1:
        raise InvalidInputError(f"random_dh needs n >= 1, got {n}")
    rng = random.Random(seed)
    rows = [0]
    for new in range(1, n):
        x = rng.randrange(new)
        kind = rng.choices(TWIN_KINDS, weights=weights)[0]
        if kind == "pendant" or rows[x] == 0:
            nb = 1 << x
        elif kind == "true_twin":
            nb = rows[x] | (1 << x)
        else:
            nb = rows[x]
        rows.append(nb)
        bit = 1 << new
        for u in range(new):
            if nb >> u & 1:
                rows[u] |= bit
    return Graph.from_rows(rows)


def random_er_connected(n: int, p: float, seed: int, max_tries: int = 10_000) -> Graph:
    """Connected Erdos-Renyi ``G(n, p)`` sample by rejection."""
    if n < 1:
        raise InvalidInputError(f"random_er_connected needs n >= 1, got {n}")
    if not 0.0 < p < 1.0:
        raise InvalidInputError(f"edge probability must lie in (0, 1), got {p}")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for _ in range(max_tries):
        g = Graph(n, [e for e in pairs if rng.random() < p])
        if g.is_connected():
            return g
    raise ResourceLimitError(f"no connected G({n}, {p}) sample in {max_tries} tries")
