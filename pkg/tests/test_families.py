from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abchrome.coloring import Coloring, is_ab_minimal, is_acyclic
from abchrome.families import (
    FIG1_BLACK,
    H3_EDGES,
    SPORADIC_NAMES,
    CubicTree,
    FamilyError,
    cubic_graphs,
    edge_tree,
    gen_0j_prism,
    gen_C_of_T,
    gen_fig1,
    gen_H3,
    gen_petersen,
    gen_sporadic,
    prism_label,
    star_tree,
)
from abchrome.graph import girth, is_connected, is_cubic
from oracle import to_nx


def test_petersen_5_2_is_the_petersen_graph():
    g = gen_petersen(5, 2).graph
    assert g.n == 10 and is_cubic(g) and girth(g) == 5
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_petersen_6_2_adjacency():
    ng = gen_petersen(6, 2)
    has = lambda a, b: ng.graph.has_edge(ng.index(a), ng.index(b))  # noqa: E731
    assert has("y0", "y2") and has("y0", "y4") and has("x0", "y0") and has("x0", "x5")
    assert not has("y0", "y1")


@pytest.mark.parametrize("n, k", [(4, 2), (5, 3), (6, 0), (3, 2)])
def test_petersen_parameter_errors(n, k):
    with pytest.raises(FamilyError, match="1 <= k < n/2"):
        gen_petersen(n, k)


@pytest.mark.parametrize("n, k", [(n, k) for n in range(3, 13) for k in range(1, (n + 1) // 2) if 2 * k < n])
def test_petersen_matches_networkx_construction(n, k):
    ng = gen_petersen(n, k)
    assert is_cubic(ng.graph) and ng.graph.n == 2 * n
    # networkx has no generalized Petersen generator; build it from the definition
    G = nx.Graph()
    for i in range(n):
        G.add_edges_from([(f"x{i}", f"x{(i + 1) % n}"), (f"y{i}", f"y{(i + k) % n}"), (f"x{i}", f"y{i}")])
    ours = {frozenset((ng.names[u], ng.names[v])) for u, v in ng.graph.edges()}
    assert ours == {frozenset(e) for e in G.edges()}


@pytest.mark.parametrize("n", [4, 5, 8])
def test_prism_rotation_is_automorphism(n):
    ng = gen_petersen(n, 1)
    shift = {}
    for v, label in enumerate(ng.names):
        ring, i = label[0], int(label[1:])
        shift[v] = ng.index(f"{ring}{(i + 1) % n}")
    edges = {frozenset(e) for e in ng.graph.edges()}
    assert {frozenset((shift[u], shift[v])) for u, v in ng.graph.edges()} == edges


def test_0j_prism_with_j0_is_the_ordinary_prism():
    prism = gen_0j_prism(6, 0)
    gp = gen_petersen(6, 1)
    relabel = {f"v_{i}^1": f"x{i}" for i in range(6)} | {f"v_{i}^2": f"y{i}" for i in range(6)}
    ours = {frozenset(relabel[prism.names[v]] for v in e) for e in prism.graph.edges()}
    theirs = {frozenset(gp.names[v] for v in e) for e in gp.graph.edges()}
    assert ours == theirs


def test_0j_prism_counts():
    g = gen_0j_prism(10, 2).graph
    assert is_cubic(g) and g.n == 20 and g.m == 30


def test_0j_prism_rim_40_vertices():
    g = gen_0j_prism(20, 2).graph
    assert is_cubic(g) and g.n == 40


@pytest.mark.parametrize("rim, j", [(7, 2), (10, 3), (10, 6), (2, 0)])
def test_0j_prism_errors(rim, j):
    with pytest.raises(FamilyError):
        gen_0j_prism(rim, j)


@pytest.mark.parametrize("rim, j", [(8, 2), (8, 4), (12, 2), (12, 4), (12, 6)])
def test_0j_prism_reflection(rim, j):
    ng = gen_0j_prism(rim, j)
    # spokes of type -j written out directly, then mapped t -> -t
    G = nx.cycle_graph([f"a{t}" for t in range(rim)])
    G.add_edges_from(nx.cycle_graph([f"b{t}" for t in range(rim)]).edges())
    for t in range(0, rim, 2):
        G.add_edge(f"a{t}", f"b{t}")
        G.add_edge(f"a{t + 1}", f"b{(t + 1 - j) % rim}")
    assert nx.is_isomorphic(to_nx(ng.graph), G)
    reflect = {prism_label(r, t): f"{'ab'[r - 1]}{(-t) % rim}" for r in (1, 2) for t in range(rim)}
    mapped = {frozenset(reflect[ng.names[v]] for v in e) for e in ng.graph.edges()}
    assert mapped == {frozenset(e) for e in G.edges()}


def test_h3_shape():
    h = gen_H3()
    degrees = sorted(h.graph.degree(v) for v in range(h.graph.n))
    assert degrees == [2, 3, 3, 3, 3, 3, 3]
    assert h.graph.degree(h.index("w")) == 2
    assert h.graph.m == len(H3_EDGES) == 10
    assert gen_H3() == h


def test_h3_minus_w_has_perfect_matching_between_rows():
    h = to_nx(gen_H3().graph)
    names = gen_H3().names
    h.remove_node(names.index("w"))
    matching = nx.max_weight_matching(h, maxcardinality=True)
    assert len(matching) == 3


def test_c_of_t_sizes():
    assert gen_C_of_T(edge_tree()).graph.n == 14
    star = gen_C_of_T(star_tree()).graph
    assert star.n == 24 and is_cubic(star) and is_connected(star)


def test_c_of_t_rejects_bad_tree():
    with pytest.raises(FamilyError, match="invalid-tree"):
        CubicTree(3, ((0, 1), (1, 2)))
    with pytest.raises(FamilyError, match="invalid-tree"):
        gen_C_of_T("not a tree")


def random_cubic_tree(leaves: int, rng: random.Random) -> CubicTree:
    edges = [(0, 1)]
    current = [0, 1]
    n = 2
    while len(current) < leaves:
        leaf = rng.choice(current)
        current.remove(leaf)
        edges += [(leaf, n), (leaf, n + 1)]
        current += [n, n + 1]
        n += 2
    return CubicTree(n, tuple(edges))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10**6))
def test_c_of_t_vertex_count(leaves, seed):
    t = random_cubic_tree(leaves, random.Random(seed))
    g = gen_C_of_T(t).graph
    assert g.n == 3 * len(t.inner()) + 7 * len(t.leaves())
    assert is_cubic(g) and is_connected(g)


def test_sporadic_fixtures():
    reference = {
        "petersen": nx.petersen_graph(),
        "k33": nx.complete_bipartite_graph(3, 3),
        "prism3": nx.circular_ladder_graph(3),
    }
    for name in SPORADIC_NAMES:
        sp = gen_sporadic(name)
        g = sp.named.graph
        assert is_cubic(g) and g.n in (6, 10)
        if name in reference:
            assert nx.is_isomorphic(to_nx(g), reference[name])
        c = Coloring(sp.colors, sp.k)
        assert len(c.used()) == sp.k == (3 if name == "prism3" else 4)
        assert is_acyclic(g, c) and is_ab_minimal(g, c)


def test_sporadic_colour_lists():
    assert gen_sporadic("prism3").colors == (1, 2, 3, 3, 1, 2)
    assert sorted(gen_sporadic("k33").colors) == [1, 2, 3, 4, 4, 4]


def test_g1_is_the_fourth_exception():
    # ten vertices, cubic, girth 4 and not isomorphic to the Petersen graph
    g = gen_sporadic("g1").named.graph
    assert g.n == 10 and girth(g) == 4
    assert not nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_fig1_fixture():
    named, colors = gen_fig1()
    g = named.graph
    assert is_cubic(g) and is_connected(g)
    c = Coloring(colors, 5)
    assert is_acyclic(g, c) and is_ab_minimal(g, c)
    assert {c[named.index(v)] for v in FIG1_BLACK} == {1, 2, 3, 4, 5}


# cubic corpus; counts are the known numbers of connected cubic graphs


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19)])
def test_cubic_graph_counts(n, count):
    found = cubic_graphs(n)
    assert len(found) == count
    nxs = [to_nx(g) for g in found]
    assert all(is_cubic(g) and is_connected(g) for g in found)
    for i in range(len(nxs)):
        for j in range(i):
            assert not nx.is_isomorphic(nxs[i], nxs[j])
