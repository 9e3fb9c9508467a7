from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitfuse.exceptions import InvalidInputError
from splitfuse.families import (
    FamilySpec,
    build,
    clique_star,
    complete,
    complete_bipartite,
    complete_multipartite,
    multi_leaf_repeater,
    random_dh,
    random_er_connected,
    repeater,
    star,
)
from splitfuse.graph import Graph
from splitfuse.orbit import enumerate_orbit, multileaf_repeater_equivalent
from splitfuse.split import is_distance_hereditary


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("parts", [(2, 2), (3, 2), (2, 2, 2), (4, 3, 2), (1, 1, 1)])
def test_multipartite_matches_networkx(parts):
    assert nx.is_isomorphic(to_nx(complete_multipartite(parts)), nx.complete_multipartite_graph(*parts))


def test_complete_and_star():
    assert complete(4).num_edges == 6
    assert star(5).degrees() == [5, 1, 1, 1, 1, 1]
    assert complete_bipartite(2, 3) == complete_multipartite((2, 3))


@pytest.mark.parametrize("parts, r", [((2, 3, 4), 1), ((2, 3, 4), 2), ((3, 3), 2)])
def test_clique_star_structure(parts, r):
    g = clique_star(parts, r)
    centre = parts[r - 1]
    assert g.num_vertices == sum(parts)
    # central vertices see everyone; others see their clique plus the centre
    assert all(g.degree(v) == g.num_vertices - 1 for v in range(centre))
    expected = sum(p * (p - 1) // 2 for p in parts) + centre * (sum(parts) - centre)
    assert g.num_edges == expected


def test_clique_star_bad_r():
    with pytest.raises(InvalidInputError):
        clique_star((2, 2), 3)


def test_repeater_and_mr():
    assert repeater(3).num_edges == 6
    mr = multi_leaf_repeater((3, 1, 2))
    assert mr.num_vertices == 6
    assert mr.degrees()[:3] == [4, 2, 3]


@pytest.mark.parametrize("parts", [(2, 2), (2, 3), (2, 2, 2), (3, 2, 2), (2, 2, 2, 2)])
def test_multileaf_repeater_lc_equivalence(parts):
    """Some orbit member of MR is isomorphic to the advertised family."""
    spec = multileaf_repeater_equivalent(parts)
    target = to_nx(spec.build())
    members = enumerate_orbit(multi_leaf_repeater(parts))
    assert any(nx.is_isomorphic(to_nx(m), target) for m in members)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_clique_star_centre_choice_is_lc_equivalent(r):
    parts = (2, 3, 2)
    target = to_nx(clique_star(parts, 1))
    assert any(nx.is_isomorphic(to_nx(m), target) for m in enumerate_orbit(clique_star(parts, r)))


@pytest.mark.parametrize(
    "spec, n",
    [
        (FamilySpec("k", (4,)), 4),
        (FamilySpec("s", (3,)), 4),
        (FamilySpec("kb", (2, 3)), 5),
        (FamilySpec("km", (2, 2, 2)), 6),
        (FamilySpec("cs", (2, 2, 2), 2), 6),
        (FamilySpec("r", (3,)), 6),
        (FamilySpec("mr", (2, 2)), 4),
        (FamilySpec("complete_multipartite", (2, 2)), 4),
    ],
)
def test_build(spec, n):
    assert build(spec).num_vertices == n
    assert spec.build() == build(spec)


@pytest.mark.parametrize("spec", [FamilySpec("nope", (2,)), FamilySpec("k", (2, 2)), FamilySpec("kb", (2,))])
def test_build_errors(spec):
    with pytest.raises(InvalidInputError):
        build(spec)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 20), st.integers(0, 10**6))
def test_random_dh_is_connected_and_dh(n, seed):
    g = random_dh(n, seed)
    assert g.num_vertices == n and g.is_connected()
    assert is_distance_hereditary(g)
    assert random_dh(n, seed) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 15), st.floats(0.2, 0.9), st.integers(0, 10**6))
def test_random_er_connected(n, p, seed):
    g = random_er_connected(n, p, seed)
    assert g.num_vertices == n and g.is_connected()
    assert random_er_connected(n, p, seed) == g


@pytest.mark.parametrize("p", [0.0, 1.0, -0.5])
def test_er_rejects_degenerate_p(p):
    with pytest.raises(InvalidInputError):
        random_er_connected(5, p, 0)


@pytest.mark.parametrize("k", [2, 3, 5])
def test_mr_with_twos_is_repeater(k):
    assert nx.is_isomorphic(to_nx(multi_leaf_repeater((2,) * k)), to_nx(repeater(k)))


def test_mr_3333_is_lc_equivalent_to_k3333():
    target = to_nx(complete_multipartite((3, 3, 3, 3)))
    members = enumerate_orbit(multi_leaf_repeater((3, 3, 3, 3)))
    assert any(nx.is_isomorphic(to_nx(m), target) for m in members)


def test_er_mean_edge_count():
    counts = [random_er_connected(20, 0.5, seed=s).num_edges for s in range(1000)]
    mean = sum(counts) / len(counts)
    assert abs(mean - 0.5 * 190) < 0.05 * 95


def test_er_two_vertices_is_k2():
    assert random_er_connected(2, 0.3, seed=4) == complete(2)
