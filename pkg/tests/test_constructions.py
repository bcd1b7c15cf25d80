from __future__ import annotations

import pytest

import oracle
from abchrome.coloring import (
    b_vertices,
    blocking_report,
    classify_ab_vertex_shape,
    is_ab_minimal,
    is_acyclic,
)
from abchrome.constructions import (
    GP_GLUE,
    GP_GLUE_TOUCH,
    ConstructionError,
    SegmentPalette,
    color_0j_prism5,
    color_C_of_T4,
    color_gp5,
    gp_palette,
    gp_pattern,
    prism_ab4,
    prism_palette,
    prism_pattern,
)
from abchrome.families import FamilyError, edge_tree, star_tree

ROLE = {"c0": 0, "c1": 1, "c2": 2, "c3": 3, "c4": 4}

# vertex labels around x_j read off the odd-k figure (k = 3), as offsets from j
FIG_ODD_K3 = {
    ("x", 0): "c0", ("x", -1): "c3", ("x", -2): "c1", ("x", -3): "c3",
    ("y", -3): "c1", ("y", 0): "c3", ("x", 1): "c4", ("y", -1): "c2",
    ("x", 2): "c2", ("x", 3): "c3", ("y", 2): "c3", ("y", 3): "c2",
}
# even-k figure, k = 4
FIG_EVEN_K4 = {
    ("y", -5): "c3", ("y", -1): "c1", ("y", -4): "c1", ("y", -2): "c3", ("y", 0): "c3",
    ("y", 4): "c2", ("y", 2): "c2", ("x", 0): "c0", ("x", -1): "c3", ("x", -5): "c1",
    ("x", -4): "c3", ("x", 1): "c4", ("x", -2): "c2", ("x", 2): "c3", ("x", 3): "c2", ("x", 4): "c3",
}
# prism figure with j = 2, offsets from the anchor v^1_{2i+1}
FIG_PRISM_J2 = {
    (2, 1): "c1", (2, 2): "c3", (2, 3): "c2",
    (1, -1): "c4", (1, 0): "c0", (1, 1): "c3", (1, 2): "c2", (1, 3): "c3",
}


def test_odd_pattern_matches_figure():
    assert gp_pattern(3) == {key: ROLE[r] for key, r in FIG_ODD_K3.items()}


def test_even_pattern_matches_figure():
    assert gp_pattern(4) == {key: ROLE[r] for key, r in FIG_EVEN_K4.items()}


def test_prism_pattern_matches_figure():
    assert prism_pattern(2) == {key: ROLE[r] for key, r in FIG_PRISM_J2.items()}


def test_gluing_identities():
    pal = gp_palette()
    for i in range(5):
        cur, nxt = pal[i], pal[(i + 1) % 5]
        # (c0, c1, c2, c3, c4)_i = (c4, c0, c3, c1, c2)_{i+1}
        assert cur == (nxt[4], nxt[0], nxt[3], nxt[1], nxt[2])
    assert sorted(t[0] for t in pal.tuples) == [1, 2, 3, 4, 5]


def test_touching_gluing_identities():
    pal = gp_palette(touching=True)
    for i in range(5):
        cur, nxt = pal[i], pal[(i + 1) % 5]
        if i == 2:
            assert cur == (nxt[2], nxt[0], nxt[3], nxt[1], nxt[4])
        elif i == 4:
            assert cur == (nxt[4], nxt[0], nxt[1], nxt[3], nxt[2])
        else:
            assert cur == (nxt[4], nxt[0], nxt[3], nxt[1], nxt[2])
    # the last segment meets the first on one x and one y vertex
    assert (pal[4][3], pal[4][2]) == (pal[0][3], pal[0][1])
    assert sorted(t[0] for t in pal.tuples) == [1, 2, 3, 4, 5]


def test_prism_gluing():
    pal = prism_palette()
    for i in range(5):
        assert pal[i][3] == pal[(i + 1) % 5][4]
    assert sorted(t[0] for t in pal.tuples) == [1, 2, 3, 4, 5]


def test_palette_invariants():
    with pytest.raises(ValueError):
        SegmentPalette(((1, 2, 3, 4, 5),) * 5)
    with pytest.raises(ValueError):
        SegmentPalette.glued([GP_GLUE] * 4)
    assert set(GP_GLUE_TOUCH) == {2, 4}


@pytest.mark.parametrize("n, k", [(25, 3), (26, 3), (27, 3), (28, 3), (45, 4), (46, 4), (47, 4), (45, 5), (46, 5), (65, 6)])
def test_gp5_verifies(n, k):
    res = color_gp5(n, k)
    g, c = res.graph, res.coloring
    assert c.used() == {1, 2, 3, 4, 5}
    assert is_acyclic(g, c) and is_ab_minimal(g, c)
    step = 2 * k - 1 if k % 2 else 2 * k + 1
    assert res.anchor_labels() == [f"x{step * i}" for i in range(5)]
    assert sorted(c[v] for v in res.anchors) == [1, 2, 3, 4, 5]
    for v in res.anchors:
        assert classify_ab_vertex_shape(g, c, v) == "B"
        assert blocking_report(g, c, v).fully_blocked()
    assert all(not b_vertices(g, c, i) for i in range(1, 6))


def test_gp5_stated_palette_used_at_minimal_orders():
    assert not color_gp5(25, 3).palette_searched
    assert color_gp5(26, 3).palette == gp_palette(touching=True)
    assert not color_gp5(45, 4).palette_searched


def test_gp5_anchor_blocking_cycle_shape():
    res = color_gp5(25, 3)
    named, c = res.named, res.coloring
    x0 = named.index("x0")
    c1 = res.palette[0][1]
    cyc = blocking_report(res.graph, c, x0).cycles[c1]
    expected = {named.index(lbl) for lbl in ("x0", "x24", "x23", "x22", "y22", "y0")}
    assert set(cyc.vertices) == expected


@pytest.mark.parametrize("n, k", [(20, 3), (24, 3), (44, 4), (10, 2), (9, 1)])
def test_gp5_below_bound(n, k):
    with pytest.raises(ConstructionError, match="parameter-below-bound"):
        color_gp5(n, k)


@pytest.mark.parametrize("rim, j", [(20, 2), (22, 2), (24, 2), (30, 4), (32, 4), (40, 6)])
def test_prism5_verifies(rim, j):
    res = color_0j_prism5(rim, j)
    g, c = res.graph, res.coloring
    assert c.used() == {1, 2, 3, 4, 5}
    assert is_acyclic(g, c) and is_ab_minimal(g, c)
    assert res.anchor_labels() == [f"v_{t * (j + 2) + 1}^1" for t in range(5)]
    for v in res.anchors:
        assert classify_ab_vertex_shape(g, c, v) == "B"
        assert blocking_report(g, c, v).fully_blocked()


@pytest.mark.parametrize("rim, j", [(18, 2), (24, 4)])
def test_prism5_below_bound(rim, j):
    with pytest.raises(ConstructionError, match="parameter-below-bound"):
        color_0j_prism5(rim, j)


def test_prism5_parameter_errors():
    with pytest.raises(FamilyError):
        color_0j_prism5(21, 2)
    with pytest.raises(ConstructionError):
        color_0j_prism5(20, 0)


@pytest.mark.parametrize("tree, n", [(star_tree, 24), (edge_tree, 14)])
def test_c_of_t4_verifies(tree, n):
    res = color_C_of_T4(tree())
    g, c = res.graph, res.coloring
    assert g.n == n and c.used() == {1, 2, 3, 4}
    assert is_acyclic(g, c) and is_ab_minimal(g, c)


def test_every_h3_copy_has_b_vertices_of_all_colours():
    res = color_C_of_T4(star_tree())
    named, c = res.named, res.coloring
    leaves = {lbl.split("#")[1] for lbl in named.names if "#" in lbl}
    for leaf in leaves:
        copy = {v for v, lbl in enumerate(named.names) if lbl.endswith(f"#{leaf}")}
        colours = {c[v] for i in range(1, 5) for v in b_vertices(res.graph, c, i) & copy}
        assert colours == {1, 2, 3, 4}


@pytest.mark.parametrize("n", [4, 5, 6, 10])
def test_prism_ab4(n):
    res = prism_ab4(n)
    g, c = res.graph, res.coloring
    assert g.n == 2 * n and c.used() == {1, 2, 3, 4}
    assert is_acyclic(g, c) and is_ab_minimal(g, c)


def test_prism_ab4_rejects_the_triangular_prism():
    with pytest.raises(ConstructionError, match="K2 x K3"):
        prism_ab4(3)


@pytest.mark.parametrize("build", [lambda: color_gp5(25, 3), lambda: color_0j_prism5(20, 2)], ids=["gp25_3", "prism20_2"])
def test_constructions_pass_bruteforce_oracle(build):
    con = build()
    G = oracle.to_nx(con.graph)
    assert oracle.acyclic(G, con.coloring.colors) and oracle.minimal(G, con.coloring.colors)
