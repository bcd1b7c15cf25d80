"""Generators for the graph families used throughout the package.

Every generator returns a :class:`NamedGraph`: the graph on dense ids plus a
label per vertex (``x3``, ``y7``, ``v_5^2``, ``w#2`` ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, GraphError, is_connected, make_graph


class FamilyError(ValueError):
    """Raised for parameters outside a family's definition."""


@dataclass(frozen=True)
class NamedGraph:
    graph: Graph
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) != self.graph.n or len(set(self.names)) != self.graph.n:
            raise FamilyError("names must be a bijection onto the vertices")

    def index(self, label: str) -> int:
        return self.names.index(label)

    def name_map(self) -> dict[int, str]:
        return dict(enumerate(self.names))


def _named(labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> NamedGraph:
    ids = {label: i for i, label in enumerate(labels)}
    g = make_graph(len(labels), [(ids[a], ids[b]) for a, b in edges])
    return NamedGraph(g, tuple(labels))


# generalized Petersen graphs and (0,j)-prisms --------------------------------


def gen_petersen(n: int, k: int) -> NamedGraph:
    """G(n, k): outer cycle x_i x_{i+1}, inner star polygon y_i y_{i+k}, spokes x_i y_i."""
    if not (1 <= k and 2 * k < n):
        raise FamilyError(f"k-out-of-range: G({n},{k}) needs 1 <= k < n/2")
    labels = [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)]
    edges = []
    for i in range(n):
        edges.append((f"x{i}", f"x{(i + 1) % n}"))
        edges.append((f"y{i}", f"y{(i + k) % n}"))
        edges.append((f"x{i}", f"y{i}"))
    return _named(labels, edges)


def prism_label(rim: int, t: int) -> str:
    return f"v_{t}^{rim}"


def gen_0j_prism(rim_len: int, j: int) -> NamedGraph:
    """(0,j)-prism with two rims of ``rim_len`` vertices each.

    Spokes of type 0 join v^1_{2t} to v^2_{2t}; spokes of type j join
    v^1_{2t+1} to v^2_{2t+1+j}.  Vertex ids: rim 1 first, then rim 2.
    """
    if rim_len % 2 or j % 2:
        raise FamilyError(f"parity violation: rim length {rim_len} and j={j} must both be even")
    if not 0 <= 2 * j <= rim_len:
        raise FamilyError(f"j-out-of-range: need 0 <= j <= rim_len/2, got j={j}, rim_len={rim_len}")
    if rim_len < 4:
        raise FamilyError("rim length must be at least 4")
    L = rim_len
    labels = [prism_label(1, t) for t in range(L)] + [prism_label(2, t) for t in range(L)]
    edges = []
    for rim in (1, 2):
        for t in range(L):
            edges.append((prism_label(rim, t), prism_label(rim, (t + 1) % L)))
    for t in range(0, L, 2):
        edges.append((prism_label(1, t), prism_label(2, t)))
        edges.append((prism_label(1, t + 1), prism_label(2, (t + 1 + j) % L)))
    return _named(labels, edges)


# H3 gadget, cubic trees and C(T) ----------------------------------------------

# Left gadget of the C(T) figure. ``w`` is the degree-two attachment vertex,
# ``w'`` is written ``t`` here to keep labels one character long.
H3_VERTICES = ("w", "u", "v", "x", "y", "t", "z")
H3_EDGES = (
    ("w", "u"), ("w", "v"), ("u", "v"),
    ("u", "x"), ("v", "y"),
    ("x", "t"), ("x", "z"),
    ("y", "z"), ("y", "t"),
    ("t", "z"),
)
# fixed colours of the figure (columns u/v, x/y, t/z); w is left open
H3_COLORS = {"u": 4, "v": 3, "x": 3, "y": 4, "t": 1, "z": 2}


def gen_H3() -> NamedGraph:
    return _named(H3_VERTICES, H3_EDGES)


@dataclass(frozen=True)
class CubicTree:
    """Tree whose internal vertices all have degree three."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        try:
            g = make_graph(self.n, self.edges)
        except GraphError as exc:
            raise FamilyError(f"invalid-tree: {exc}") from None
        if g.m == 0:
            raise FamilyError("invalid-tree: a cubic tree has at least one edge")
        if g.m != g.n - 1 or not is_connected(g):
            raise FamilyError("invalid-tree: not a tree")
        for v in range(g.n):
            if g.degree(v) not in (1, 3):
                raise FamilyError(f"invalid-tree: vertex {v} has degree {g.degree(v)}")

    @property
    def graph(self) -> Graph:
        return make_graph(self.n, self.edges)

    def leaves(self) -> list[int]:
        g = self.graph
        return [v for v in range(g.n) if g.degree(v) == 1]

    def inner(self) -> list[int]:
        g = self.graph
        return [v for v in range(g.n) if g.degree(v) == 3]


def star_tree() -> CubicTree:
    """K_{1,3} with centre 0."""
    return CubicTree(4, ((0, 1), (0, 2), (0, 3)))


def edge_tree() -> CubicTree:
    return CubicTree(2, ((0, 1),))


def gen_C_of_T(t: CubicTree) -> NamedGraph:
    """Expand inner vertices of ``t`` into triangles and hang an H3 on each leaf.

    Triangle corners ``a, b, c`` of inner vertex ``v`` face the neighbours of
    ``v`` in increasing id order; a leaf becomes the ``w`` of its own H3 copy.
    """
    if not isinstance(t, CubicTree):
        raise FamilyError("invalid-tree: expected a CubicTree")
    tg = t.graph
    labels: list[str] = []
    edges: list[tuple[str, str]] = []
    # the vertex of C(T) that represents tree vertex v on the side facing u
    port: dict[tuple[int, int], str] = {}
    for v in range(tg.n):
        if tg.degree(v) == 3:
            corners = [f"{c}@{v}" for c in "abc"]
            labels.extend(corners)
            edges.extend(combinations(corners, 2))
            for corner, u in zip(corners, tg.neighbors(v)):
                port[(v, u)] = corner
        else:
            copy = [f"{name}#{v}" for name in H3_VERTICES]
            labels.extend(copy)
            edges.extend((f"{a}#{v}", f"{b}#{v}") for a, b in H3_EDGES)
            port[(v, tg.neighbors(v)[0])] = f"w#{v}"
    for u, v in tg.edges():
        edges.append((port[(u, v)], port[(v, u)]))
    return _named(labels, edges)


# small fixtures ---------------------------------------------------------------


def complete_graph(n: int) -> NamedGraph:
    labels = [str(i) for i in range(n)]
    return _named(labels, combinations(labels, 2))


def cycle_graph(n: int) -> NamedGraph:
    labels = [str(i) for i in range(n)]
    return _named(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def k33() -> NamedGraph:
    labels = ["a", "b", "c", "d", "e", "f"]
    return _named(labels, [(p, q) for p in "abc" for q in "def"])


def cube() -> NamedGraph:
    labels = [format(i, "03b") for i in range(8)]
    edges = [(labels[i], labels[i ^ (1 << b)]) for i in range(8) for b in range(3) if i < i ^ (1 << b)]
    return _named(labels, edges)


def star(leaves: int = 3) -> NamedGraph:
    labels = ["c"] + [f"l{i}" for i in range(leaves)]
    return _named(labels, [("c", f"l{i}") for i in range(leaves)])


@dataclass(frozen=True)
class Sporadic:
    """A graph of the small-exception figure together with its drawn colouring."""

    named: NamedGraph
    colors: tuple[int, ...]
    k: int
    black: tuple[int, ...]


_SPORADIC = {
    # outer pentagon a-b-d-e-c, inner pentagram g-k-h-i-j
    "petersen": (
        "abcdeghijk",
        ["ab", "bd", "de", "ec", "ca", "ag", "bh", "ci", "dj", "ek", "kg", "jg", "hk", "ij", "ih"],
        dict(a=3, b=4, c=2, d=2, e=1, g=2, h=2, i=4, j=3, k=3),
        "acei",
        4,
    ),
    # triangles abc / def, spokes ad, be, cf
    "prism3": (
        "abcdef",
        ["ab", "bc", "ca", "de", "ef", "fd", "ad", "be", "cf"],
        dict(a=1, b=2, c=3, d=3, e=1, f=2),
        "abc",
        3,
    ),
    "k33": (
        "abcdef",
        ["ad", "dc", "ce", "ea", "af", "fb", "be", "bd", "cf"],
        dict(a=1, b=2, c=3, d=4, e=4, f=4),
        "abcd",
        4,
    ),
    "g1": (
        "ghijklmnop",
        ["gh", "hj", "jl", "ln", "np", "pj", "po", "om", "mk", "ki", "ig", "gm", "lk", "io", "hn"],
        dict(g=1, h=4, i=2, j=2, k=3, l=1, m=2, n=2, o=4, p=3),
        "giko",
        4,
    ),
}

SPORADIC_NAMES = tuple(_SPORADIC)


def gen_sporadic(which: str) -> Sporadic:
    try:
        labels, edges, colors, black, k = _SPORADIC[which]
    except KeyError:
        raise FamilyError(f"unknown sporadic graph {which!r}; choose from {', '.join(_SPORADIC)}") from None
    named = _named(list(labels), [(e[0], e[1]) for e in edges])
    return Sporadic(
        named,
        tuple(colors[label] for label in labels),
        k,
        tuple(labels.index(b) for b in black),
    )


# Figure-1 example: 48-vertex cubic graph with a 5-colouring -------------------

_FIG1_PATHS = [
    "b1 a1 a b c d c1 d2 c2 b2 a2 a1",
    "b b1 b2",
    "c1 d1 a3 b3 c3 d3 c4 b4 a4 d2",
    "d3 d4 b4",
    "d4 b3",
    "d1 a5 b5 c5 d5 c6 b6 a6 d",
    "d5 d6 b6",
    "d6 b5",
    "c6 a6",
    "c5 a5",
    "a4 c4",
    "a3 c3",
]
_FIG1_GADGETS = {"": "a", "1": "c2", "2": "c", "3": "a2"}
_FIG1_COLORS = dict(
    a=4, b=2, c=3, d=2, a1=2, b1=1, c1=1, d1=2, a2=5, b2=2, c2=3, d2=2,
    a3=5, b3=2, c3=4, d3=2, a4=5, b4=2, c4=3, d4=1,
    a5=4, b5=2, c5=3, d5=2, a6=4, b6=2, c6=5, d6=1,
    u=3, v=1, w=1, x=2, y=5,
    u1=2, v1=1, w1=1, x1=4, y1=5,
    u2=5, v2=1, w2=1, x2=2, y2=4,
    u3=4, v3=1, w3=1, x3=2, y3=3,
)
FIG1_BLACK = ("c1", "u", "u1", "u2", "u3")


def gen_fig1() -> tuple[NamedGraph, tuple[int, ...]]:
    """The 48-vertex cubic graph of the introductory example with its 5-colouring."""
    edges: list[tuple[str, str]] = []
    for path in _FIG1_PATHS:
        seq = path.split()
        edges.extend(zip(seq, seq[1:]))
    for suffix, anchor in _FIG1_GADGETS.items():
        u, v, w, x, y = (f"{s}{suffix}" for s in "uvwxy")
        edges += [(anchor, u), (u, v), (v, x), (x, y), (y, w), (w, u), (v, y), (w, x)]
    labels = list(_FIG1_COLORS)
    named = _named(labels, edges)
    return named, tuple(_FIG1_COLORS[label] for label in labels)


# exhaustive connected cubic graphs -------------------------------------------


def cubic_graphs(n: int) -> list[Graph]:
    """All connected cubic graphs on ``n`` vertices up to isomorphism.

    Enumerates graphs labelled in breadth-first order from vertex 0 (every
    connected graph has such a labelling), then deduplicates with networkx
    isomorphism tests bucketed by Weisfeiler-Lehman hash.
    """
    import networkx as nx

    if n < 4 or n % 2:
        return []
    buckets: dict[str, list[nx.Graph]] = {}
    found: list[Graph] = []
    for edges in _bfs_cubic(n):
        nh = nx.Graph(edges)
        key = nx.weisfeiler_lehman_graph_hash(nh, iterations=4)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(nh, other) for other in bucket):
            continue
        bucket.append(nh)
        found.append(make_graph(n, edges))
    return sorted(found, key=lambda g: g.edges())


def _bfs_cubic(n: int):
    adj: list[set[int]] = [set() for _ in range(n)]

    def visit(i: int, next_label: int):
        if i == n:
            if next_label == n:
                yield [(u, v) for u in range(n) for v in adj[u] if u < v]
            return
        if i >= next_label:
            return
        need = 3 - len(adj[i])
        old = [j for j in range(i + 1, next_label) if len(adj[j]) < 3 and j not in adj[i]]
        for s in range(min(need, len(old)), -1, -1):
            fresh = need - s
            if next_label + fresh > n:
                continue
            for chosen in combinations(old, s):
                targets = list(chosen) + list(range(next_label, next_label + fresh))
                for j in targets:
                    adj[i].add(j)
                    adj[j].add(i)
                yield from visit(i + 1, next_label + fresh)
                for j in targets:
                    adj[i].discard(j)
                    adj[j].discard(i)

    adj[0] = set()
    yield from visit(0, 1)
